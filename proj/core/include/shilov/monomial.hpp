#pragma once

#include "shilov/rational.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace shilov {

// Exponent vector of a monomial in x_0..x_d; the grading level is the total
// degree.
using ExpVec = std::vector<int>;

int exp_degree(const ExpVec& a);

// Graded-lex order used everywhere for monomial indexing: within one degree,
// (2,0) < (1,1) < (0,2) reading positions left to right descending.
struct GradedLexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Hilbert-Samuel function chi(n) = C(n+d, d) for O(1) on P^d.
std::int64_t hilbert_chi(int d, int n);

// All C(n+d,d) exponent vectors of degree n, in graded-lex order.
std::vector<ExpVec> monomials(int d, int n);

// Fixed enumeration of one graded level with O(log) index lookup.
class MonomialBasis {
 public:
  MonomialBasis(int d, int n);

  int dim_projective() const { return d_; }
  int degree() const { return n_; }
  std::size_t size() const { return list_.size(); }
  const ExpVec& at(std::size_t i) const { return list_[i]; }
  const std::vector<ExpVec>& all() const { return list_; }
  std::size_t index_of(const ExpVec& a) const;

 private:
  int d_;
  int n_;
  std::vector<ExpVec> list_;
  std::map<ExpVec, std::size_t, GradedLexLess> index_;
};

}  // namespace shilov
