#pragma once

#include "shilov/logval.hpp"
#include "shilov/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace shilov {

// Finite Hahn series over Q with rational exponents: sum of c*t^e terms,
// exponents strictly increasing, coefficients nonzero, plus a precision cap.
// precision() == +inf means the value is exact; otherwise every stored
// exponent is < precision() and terms at or above it are unknown.
//
// Zero is the empty exact series. An empty series with finite precision is a
// "semi-exact zero": all known terms cancelled, valuation only bounded below.
class HahnSeries {
 public:
  struct Term {
    Rat exponent;
    Rat coeff;
  };

  HahnSeries() : precision_(LogVal::infinity()) {}

  static HahnSeries zero() { return HahnSeries(); }
  static HahnSeries one() { return monomial(Rat(1), Rat(0)); }
  static HahnSeries monomial(Rat coeff, Rat exponent);
  static HahnSeries scalar(Rat coeff) { return monomial(std::move(coeff), Rat(0)); }
  // Unknown-below-precision zero, O(t^p).
  static HahnSeries tail(LogVal precision);
  // Builds from arbitrary (exponent, coeff) pairs; merges and normalizes.
  static HahnSeries from_terms(std::vector<Term> terms, LogVal precision = LogVal::infinity());

  const std::vector<Term>& terms() const { return terms_; }
  const LogVal& precision() const { return precision_; }

  bool is_empty() const { return terms_.empty(); }
  bool is_exact() const { return !precision_.is_finite(); }
  bool is_exact_zero() const { return terms_.empty() && is_exact(); }

  // Valuation: exponent of the first term, +inf when no terms are known.
  LogVal valuation() const;
  // False only for the semi-exact zero, whose valuation is just ">= precision".
  bool valuation_certified() const { return !terms_.empty() || is_exact(); }

  const Rat& leading_coeff() const;

  friend HahnSeries operator+(const HahnSeries& a, const HahnSeries& b);
  friend HahnSeries operator-(const HahnSeries& a);
  friend HahnSeries operator-(const HahnSeries& a, const HahnSeries& b);
  friend HahnSeries operator*(const HahnSeries& a, const HahnSeries& b);
  HahnSeries& operator+=(const HahnSeries& o) { return *this = *this + o; }
  HahnSeries& operator-=(const HahnSeries& o) { return *this = *this - o; }
  HahnSeries& operator*=(const HahnSeries& o) { return *this = *this * o; }

  friend bool operator==(const HahnSeries& a, const HahnSeries& b);
  friend bool operator!=(const HahnSeries& a, const HahnSeries& b) { return !(a == b); }

  // Multiplies by t^e (exact exponent shift).
  HahnSeries shifted(const Rat& e) const;

  HahnSeries pow(unsigned k) const;

  std::string str() const;

 private:
  void drop_tail_at_precision();

  std::vector<Term> terms_;
  LogVal precision_;
};

// Truncated inverse: result r with val(r) = -val(a) exactly and
// a*r == 1 up to precision >= cap - val(a). Exact when a is a single exact
// term. Throws std::domain_error on a == 0.
HahnSeries hs_inv(const HahnSeries& a, const LogVal& cap);

}  // namespace shilov
