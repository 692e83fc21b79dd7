#include "shilov/hahn.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace shilov {

HahnSeries HahnSeries::monomial(Rat coeff, Rat exponent) {
  HahnSeries s;
  if (coeff != 0) s.terms_.push_back({std::move(exponent), std::move(coeff)});
  return s;
}

HahnSeries HahnSeries::tail(LogVal precision) {
  HahnSeries s;
  s.precision_ = std::move(precision);
  return s;
}

HahnSeries HahnSeries::from_terms(std::vector<Term> terms, LogVal precision) {
  std::map<Rat, Rat> merged;
  for (auto& t : terms) merged[t.exponent] += t.coeff;
  HahnSeries s;
  s.precision_ = std::move(precision);
  for (auto& [e, c] : merged)
    if (c != 0) s.terms_.push_back({e, c});
  s.drop_tail_at_precision();
  return s;
}

void HahnSeries::drop_tail_at_precision() {
  if (!precision_.is_finite()) return;
  while (!terms_.empty() && !(terms_.back().exponent < precision_.value())) terms_.pop_back();
}

LogVal HahnSeries::valuation() const {
  if (terms_.empty()) return LogVal::infinity();
  return LogVal(terms_.front().exponent);
}

const Rat& HahnSeries::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("HahnSeries: leading_coeff of zero");
  return terms_.front().coeff;
}

HahnSeries operator+(const HahnSeries& a, const HahnSeries& b) {
  HahnSeries out;
  out.precision_ = min(a.precision_, b.precision_);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    bool take_a;
    if (i == a.terms_.size())
      take_a = false;
    else if (j == b.terms_.size())
      take_a = true;
    else if (a.terms_[i].exponent == b.terms_[j].exponent) {
      Rat c = a.terms_[i].coeff + b.terms_[j].coeff;
      if (c != 0) out.terms_.push_back({a.terms_[i].exponent, std::move(c)});
      ++i;
      ++j;
      continue;
    } else
      take_a = a.terms_[i].exponent < b.terms_[j].exponent;
    out.terms_.push_back(take_a ? a.terms_[i++] : b.terms_[j++]);
  }
  out.drop_tail_at_precision();
  return out;
}

HahnSeries operator-(const HahnSeries& a) {
  HahnSeries out = a;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

HahnSeries operator-(const HahnSeries& a, const HahnSeries& b) { return a + (-b); }

HahnSeries operator*(const HahnSeries& a, const HahnSeries& b) {
  if (a.is_exact_zero() || b.is_exact_zero()) return HahnSeries::zero();
  // prec(ab) = min(prec(a)+val(b), prec(b)+val(a)); +inf absorbs.
  LogVal prec = min(a.precision_ + b.valuation(), b.precision_ + a.valuation());
  std::map<Rat, Rat> acc;
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      Rat e = ta.exponent + tb.exponent;
      if (prec.is_finite() && !(e < prec.value())) continue;
      acc[std::move(e)] += ta.coeff * tb.coeff;
    }
  HahnSeries out;
  out.precision_ = std::move(prec);
  for (auto& [e, c] : acc)
    if (c != 0) out.terms_.push_back({e, c});
  return out;
}

bool operator==(const HahnSeries& a, const HahnSeries& b) {
  if (a.precision_ != b.precision_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exponent != b.terms_[i].exponent || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

HahnSeries HahnSeries::shifted(const Rat& e) const {
  HahnSeries out = *this;
  for (auto& t : out.terms_) t.exponent += e;
  if (out.precision_.is_finite()) out.precision_ = LogVal(out.precision_.value() + e);
  return out;
}

HahnSeries HahnSeries::pow(unsigned k) const {
  HahnSeries acc = HahnSeries::one();
  HahnSeries base = *this;
  while (k > 0) {
    if (k & 1u) acc = acc * base;
    base = base * base;
    k >>= 1u;
  }
  return acc;
}

namespace {

HahnSeries scaled_by(const HahnSeries& s, const Rat& factor) {
  std::vector<HahnSeries::Term> ts;
  ts.reserve(s.terms().size());
  for (const auto& t : s.terms()) ts.push_back({t.exponent, t.coeff * factor});
  return HahnSeries::from_terms(std::move(ts), s.precision());
}

}  // namespace

HahnSeries hs_inv(const HahnSeries& a, const LogVal& cap) {
  if (a.is_empty()) throw std::domain_error("hs_inv: inverse of zero");
  const Rat v = a.valuation().value();
  const Rat& c0 = a.leading_coeff();

  if (a.terms().size() == 1 && a.is_exact())
    return HahnSeries::monomial(Rat(1) / c0, -v);  // monomials invert exactly

  const LogVal in_prec = min(cap, a.precision());
  if (!in_prec.is_finite()) throw std::domain_error("hs_inv: cap must be finite");
  const Rat out_prec = in_prec.value() - 2 * v;

  // a = c0 t^v (1 + u), val(u) > 0; 1/a = c0^{-1} t^{-v} sum_k (-u)^k.
  // Result exponents are -v + (exponents of the sum), so the sum is
  // truncated at out_prec + v.
  HahnSeries neg_u = -(scaled_by(a.shifted(-v), Rat(1) / c0) - HahnSeries::one());
  const Rat sum_bound = out_prec + v;
  HahnSeries sum = HahnSeries::one();
  HahnSeries powu = neg_u;
  while (!powu.is_empty() && powu.valuation().value() < sum_bound) {
    sum += powu;
    powu *= neg_u;
  }
  HahnSeries out = scaled_by(sum.shifted(-v), Rat(1) / c0);
  std::vector<HahnSeries::Term> ts(out.terms().begin(), out.terms().end());
  return HahnSeries::from_terms(std::move(ts), min(LogVal(out_prec), out.precision()));
}

std::string HahnSeries::str() const {
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (i > 0) out += " + ";
    if (t.exponent == 0) {
      out += rat_str(t.coeff);
    } else {
      if (t.coeff != 1) {
        out += rat_str(t.coeff);
        out += "*";
      }
      out += "t";
      if (t.exponent != 1) {
        out += "^(";
        out += rat_str(t.exponent);
        out += ")";
      }
    }
  }
  if (precision_.is_finite()) {
    if (!out.empty()) out += " + ";
    out += "O(t^(" + rat_str(precision_.value()) + "))";
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace shilov
