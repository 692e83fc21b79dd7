#include "shilov/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace shilov {

int exp_degree(const ExpVec& a) { return std::accumulate(a.begin(), a.end(), 0); }

bool GradedLexLess::operator()(const ExpVec& a, const ExpVec& b) const {
  int da = exp_degree(a), db = exp_degree(b);
  if (da != db) return da < db;
  // same degree: earlier variables carry more weight, larger exponent first
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return a.size() < b.size();
}

std::int64_t hilbert_chi(int d, int n) {
  if (d < 0 || n < 0) throw std::invalid_argument("hilbert_chi: negative argument");
  std::int64_t out = 1;
  for (int i = 1; i <= d; ++i) out = out * (n + i) / i;
  return out;
}

namespace {

void enumerate(int vars_left, int deg_left, ExpVec& cur, std::vector<ExpVec>& out) {
  if (vars_left == 1) {
    cur.push_back(deg_left);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = deg_left; e >= 0; --e) {
    cur.push_back(e);
    enumerate(vars_left - 1, deg_left - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<ExpVec> monomials(int d, int n) {
  if (d < 1) throw std::invalid_argument("monomials: need d >= 1");
  if (n < 0) throw std::invalid_argument("monomials: need n >= 0");
  std::vector<ExpVec> out;
  out.reserve(static_cast<std::size_t>(hilbert_chi(d, n)));
  ExpVec cur;
  enumerate(d + 1, n, cur, out);
  return out;
}

MonomialBasis::MonomialBasis(int d, int n) : d_(d), n_(n), list_(monomials(d, n)) {
  for (std::size_t i = 0; i < list_.size(); ++i) index_.emplace(list_[i], i);
}

std::size_t MonomialBasis::index_of(const ExpVec& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) throw std::out_of_range("MonomialBasis: monomial not in this level");
  return it->second;
}

}  // namespace shilov
