#include "shilov/poly.hpp"

#include <stdexcept>

namespace shilov {

HomPoly HomPoly::monomial(int d, const ExpVec& a, HahnSeries coeff) {
  if (static_cast<int>(a.size()) != d + 1)
    throw std::invalid_argument("HomPoly::monomial: exponent vector has wrong length");
  HomPoly f(d, exp_degree(a));
  f.add_term(a, coeff);
  return f;
}

void HomPoly::add_term(const ExpVec& a, const HahnSeries& c) {
  if (static_cast<int>(a.size()) != d_ + 1 || exp_degree(a) != degree_)
    throw std::invalid_argument("HomPoly: term of wrong degree or arity");
  auto it = terms_.find(a);
  if (it == terms_.end()) {
    if (!c.is_exact_zero()) terms_.emplace(a, c);
    return;
  }
  it->second += c;
  if (it->second.is_exact_zero()) terms_.erase(it);
}

HomPoly operator+(const HomPoly& f, const HomPoly& g) {
  if (f.d_ != g.d_ || f.degree_ != g.degree_)
    throw std::invalid_argument("HomPoly: degree mismatch in sum");
  HomPoly out = f;
  for (const auto& [a, c] : g.terms_) out.add_term(a, c);
  return out;
}

HomPoly operator-(const HomPoly& f, const HomPoly& g) { return f + g * HahnSeries::scalar(Rat(-1)); }

HomPoly operator*(const HomPoly& f, const HomPoly& g) {
  if (f.d_ != g.d_) throw std::invalid_argument("HomPoly: arity mismatch in product");
  HomPoly out(f.d_, f.degree_ + g.degree_);
  for (const auto& [a, ca] : f.terms_)
    for (const auto& [b, cb] : g.terms_) {
      ExpVec s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      out.add_term(s, ca * cb);
    }
  return out;
}

HomPoly HomPoly::operator*(const HahnSeries& c) const {
  HomPoly out(d_, degree_);
  for (const auto& [a, ca] : terms_) out.add_term(a, ca * c);
  return out;
}

HomPoly HomPoly::pow(unsigned k) const {
  HomPoly acc(d_, 0);
  acc.add_term(ExpVec(d_ + 1, 0), HahnSeries::one());
  HomPoly base = *this;
  while (k > 0) {
    if (k & 1u) acc = acc * base;
    base = base * base;
    k >>= 1u;
  }
  return acc;
}

std::string HomPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += "x" + std::to_string(i);
      if (a[i] != 1) mono += "^" + std::to_string(a[i]);
    }
    bool simple = c.terms().size() == 1 && c.is_exact();
    std::string coeff = c.str();
    if (mono.empty()) {
      out += simple ? coeff : "(" + coeff + ")";
    } else if (c == HahnSeries::one()) {
      out += mono;
    } else {
      out += (simple ? coeff : "(" + coeff + ")") + "*" + mono;
    }
  }
  return out;
}

MultOpMatrix mult_operator(const HomPoly& s, int n) {
  if (s.is_zero()) throw std::invalid_argument("mult_operator: zero section");
  if (s.degree() != 1) throw std::invalid_argument("mult_operator: section must have degree 1");
  const int d = s.dim_projective();
  MultOpMatrix m{n, n + 1, MonomialBasis(d, n), MonomialBasis(d, n + 1), {}};
  m.columns.resize(m.src.size());
  for (std::size_t j = 0; j < m.src.size(); ++j) {
    const ExpVec& a = m.src.at(j);
    for (const auto& [b, c] : s.terms()) {
      ExpVec row(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) row[i] = a[i] + b[i];
      m.columns[j].emplace_back(m.tgt.index_of(row), c);
    }
  }
  return m;
}

}  // namespace shilov
