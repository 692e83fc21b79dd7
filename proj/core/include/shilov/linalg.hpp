#pragma once

#include "shilov/metric.hpp"
#include "shilov/poly.hpp"

#include <vector>

namespace shilov {

// Diagonal norm on one graded level: valuation weight per basis vector, in
// the fixed monomial order. The monomial basis is orthogonal with
// ||x^alpha|| = e^{-weight}.
struct DiagNorm {
  int level = 0;
  std::vector<Rat> weights;

  static DiagNorm uniform(int level, std::size_t size) {
    return DiagNorm{level, std::vector<Rat>(size, Rat(0))};
  }
};

// Weights rho_alpha = min_i (<w_i, alpha> + n*c_i) of the envelope norm.
DiagNorm diag_norm(const MetricSpec& spec, int n);

// A linear map between two diagonally-normed spaces, dense HahnSeries
// entries.
struct ValMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<HahnSeries>> a;  // a[row][col]
  DiagNorm src;
  DiagNorm tgt;

  static ValMatrix zero(std::size_t rows, std::size_t cols, DiagNorm src, DiagNorm tgt);
};

ValMatrix val_matrix(const MultOpMatrix& m, const MetricSpec& spec);

// Operator norm as a valuation: min over nonzero entries of
// val(a_ij) + tgt_i - src_j; +inf for the zero map.
LogVal op_norm_val(const ValMatrix& m);

// Ultrametric singular valuations, descending by norm (ascending valuation),
// with per-entry certification against the accumulated precision bounds.
struct SingularProfile {
  std::vector<LogVal> sigma;
  std::vector<bool> certified;

  bool all_certified() const;
  std::size_t rank() const { return sigma.size(); }
};

struct SvdOptions {
  Rat initial_cap = Rat(64);
  int max_doublings = 4;
};

// Valuation-pivoted elimination with exact Schur complements; retries with a
// doubled truncation cap until every singular valuation is certified, then
// throws ComputeError("precision exhausted").
SingularProfile na_svd(const ValMatrix& m, const SvdOptions& opts = {});

// Sum of all singular valuations = -log of the top-wedge operator norm.
// Throws ComputeError when the matrix is column-rank deficient.
LogVal wedge_top_val(const ValMatrix& m, const SvdOptions& opts = {});

// Independent brute-force oracle: min over r x r minors of
// val(det) + sum(tgt weights) - sum(src weights). Exact determinant
// expansion; guarded to small sizes.
LogVal minor_oracle(const ValMatrix& m, std::size_t r);

}  // namespace shilov
