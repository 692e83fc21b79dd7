#include "shilov/linalg.hpp"

#include "shilov/errors.hpp"

#include <algorithm>
#include <map>

namespace shilov {

DiagNorm diag_norm(const MetricSpec& spec, int n) {
  MonomialBasis basis(spec.dim_projective(), n);
  DiagNorm out{n, {}};
  out.weights.reserve(basis.size());
  for (const ExpVec& a : basis.all()) {
    Rat best;
    bool first = true;
    for (const auto& z : spec.points()) {
      Rat v = Rat(n) * z.c;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) v += z.w[i] * a[i];
      if (first || v < best) {
        best = std::move(v);
        first = false;
      }
    }
    out.weights.push_back(std::move(best));
  }
  return out;
}

ValMatrix ValMatrix::zero(std::size_t rows, std::size_t cols, DiagNorm src, DiagNorm tgt) {
  ValMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.a.assign(rows, std::vector<HahnSeries>(cols));
  m.src = std::move(src);
  m.tgt = std::move(tgt);
  return m;
}

ValMatrix val_matrix(const MultOpMatrix& mult, const MetricSpec& spec) {
  ValMatrix m = ValMatrix::zero(mult.tgt.size(), mult.src.size(), diag_norm(spec, mult.src_degree),
                                diag_norm(spec, mult.tgt_degree));
  for (std::size_t j = 0; j < mult.columns.size(); ++j)
    for (const auto& [row, coeff] : mult.columns[j]) m.a[row][j] = coeff;
  return m;
}

LogVal op_norm_val(const ValMatrix& m) {
  LogVal best = LogVal::infinity();
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) {
      LogVal v = m.a[i][j].valuation();
      if (!v.is_finite()) continue;
      best = min(best, LogVal(v.value() + m.tgt.weights[i] - m.src.weights[j]));
    }
  return best;
}

bool SingularProfile::all_certified() const {
  return std::all_of(certified.begin(), certified.end(), [](bool b) { return b; });
}

namespace {

// One elimination sweep at a fixed truncation cap. Entries are first moved
// to orthonormal frames by the symbolic t^{tgt_i - src_j} rescale, so pivot
// search is a plain valuation scan.
SingularProfile eliminate(const ValMatrix& m, const LogVal& cap) {
  std::vector<std::vector<HahnSeries>> a(m.rows, std::vector<HahnSeries>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      a[i][j] = m.a[i][j].shifted(m.tgt.weights[i] - m.src.weights[j]);

  std::vector<bool> row_done(m.rows, false), col_done(m.cols, false);
  SingularProfile out;

  while (true) {
    bool found = false;
    std::size_t pr = 0, pc = 0;
    LogVal pivot_val = LogVal::infinity();
    LogVal blind_below = LogVal::infinity();  // min precision of semi-exact zeros
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (row_done[i]) continue;
      for (std::size_t j = 0; j < m.cols; ++j) {
        if (col_done[j]) continue;
        const HahnSeries& e = a[i][j];
        if (e.is_empty()) {
          if (!e.is_exact()) blind_below = min(blind_below, e.precision());
          continue;
        }
        if (!found || e.valuation() < pivot_val) {
          found = true;
          pr = i;
          pc = j;
          pivot_val = e.valuation();
        }
      }
    }
    if (!found) {
      // Remaining entries are all zero as far as the precision shows; a
      // finite bound here means hidden content could still raise the rank.
      if (blind_below.is_finite()) {
        out.sigma.push_back(blind_below);
        out.certified.push_back(false);
      }
      return out;
    }
    out.sigma.push_back(pivot_val);
    // safe iff nothing can hide below the pivot valuation
    out.certified.push_back(pivot_val <= blind_below);

    HahnSeries pivot_inv = hs_inv(a[pr][pc], cap);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (row_done[i] || i == pr || a[i][pc].is_exact_zero()) continue;
      HahnSeries factor = a[i][pc] * pivot_inv;
      for (std::size_t j = 0; j < m.cols; ++j) {
        if (col_done[j] || j == pc) continue;
        if (a[pr][j].is_exact_zero()) continue;
        a[i][j] -= factor * a[pr][j];
      }
    }
    row_done[pr] = true;
    col_done[pc] = true;
  }
}

}  // namespace

SingularProfile na_svd(const ValMatrix& m, const SvdOptions& opts) {
  Rat cap = opts.initial_cap;
  for (int attempt = 0; attempt <= opts.max_doublings; ++attempt) {
    SingularProfile p = eliminate(m, LogVal(cap));
    if (p.all_certified()) return p;
    if (attempt == opts.max_doublings) break;
    cap *= 2;
  }
  throw ComputeError("na_svd: precision exhausted");
}

LogVal wedge_top_val(const ValMatrix& m, const SvdOptions& opts) {
  SingularProfile p = na_svd(m, opts);
  if (p.rank() < m.cols) throw ComputeError("wedge_top_val: matrix is column-rank deficient");
  LogVal acc = Rat(0);
  for (const auto& s : p.sigma) acc += s;
  return acc;
}

namespace {

// Exact determinant of the minor (rows, cols) by expansion along the first
// row, memoized on the remaining column subset.
HahnSeries minor_det(const std::vector<std::vector<HahnSeries>>& a, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols, std::size_t depth, unsigned col_mask,
                     std::map<unsigned, HahnSeries>& memo) {
  const std::size_t r = rows.size();
  if (depth == r) return HahnSeries::one();
  auto it = memo.find(col_mask);
  if (it != memo.end()) return it->second;
  HahnSeries acc;
  int parity = 0;
  for (std::size_t k = 0; k < r; ++k) {
    if (!(col_mask & (1u << k))) continue;
    const HahnSeries& e = a[rows[depth]][cols[k]];
    if (!e.is_exact_zero()) {
      HahnSeries sub = minor_det(a, rows, cols, depth + 1, col_mask & ~(1u << k), memo);
      HahnSeries term = e * sub;
      acc = (parity % 2 == 0) ? acc + term : acc - term;
    }
    ++parity;
  }
  // memo keyed by column subset; depth is determined by its popcount
  memo.emplace(col_mask, acc);
  return acc;
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start, std::size_t need) -> void {
    if (need == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + need <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1, need - 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, k);
}

}  // namespace

LogVal minor_oracle(const ValMatrix& m, std::size_t r) {
  if (r == 0) return Rat(0);
  if (r > m.rows || r > m.cols) throw ValidationError("minor_oracle: rank exceeds matrix size");
  if (m.cols > 12 || m.rows > 16) throw ValidationError("minor_oracle: matrix too large for the oracle");

  std::vector<std::vector<std::size_t>> row_sets, col_sets;
  subsets(m.rows, r, row_sets);
  subsets(m.cols, r, col_sets);

  LogVal best = LogVal::infinity();
  for (const auto& rows : row_sets) {
    Rat tau = 0;
    for (std::size_t i : rows) tau += m.tgt.weights[i];
    for (const auto& cols : col_sets) {
      std::map<unsigned, HahnSeries> memo;
      HahnSeries det = minor_det(m.a, rows, cols, 0, (1u << r) - 1u, memo);
      LogVal v = det.valuation();
      if (!v.is_finite()) continue;
      Rat rho = 0;
      for (std::size_t j : cols) rho += m.src.weights[j];
      best = min(best, LogVal(v.value() + tau - rho));
    }
  }
  return best;
}

}  // namespace shilov
