#pragma once

#include "shilov/rational.hpp"

#include <compare>
#include <stdexcept>
#include <string>

namespace shilov {

// Additive valuation value: a rational, or +infinity (the valuation of zero).
// All norms in this codebase are stored this way, v = -log|.|.
class LogVal {
 public:
  LogVal() : finite_(true), v_(0) {}
  LogVal(Rat v) : finite_(true), v_(std::move(v)) {}  // NOLINT: implicit by design
  LogVal(int v) : finite_(true), v_(v) {}             // NOLINT

  static LogVal infinity() {
    LogVal x;
    x.finite_ = false;
    return x;
  }

  bool is_finite() const { return finite_; }

  const Rat& value() const {
    if (!finite_) throw std::domain_error("LogVal: value() on +inf");
    return v_;
  }

  friend LogVal operator+(const LogVal& a, const LogVal& b) {
    if (!a.finite_ || !b.finite_) return infinity();
    return LogVal(a.v_ + b.v_);
  }
  friend LogVal operator-(const LogVal& a) {
    if (!a.finite_) throw std::domain_error("LogVal: negated +inf");
    return LogVal(-a.v_);
  }
  LogVal& operator+=(const LogVal& o) { return *this = *this + o; }

  // +inf compares greater than every finite valuation.
  friend bool operator==(const LogVal& a, const LogVal& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.v_ == b.v_;
  }
  friend bool operator<(const LogVal& a, const LogVal& b) {
    if (!a.finite_) return false;
    if (!b.finite_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator>(const LogVal& a, const LogVal& b) { return b < a; }
  friend bool operator<=(const LogVal& a, const LogVal& b) { return !(b < a); }
  friend bool operator>=(const LogVal& a, const LogVal& b) { return !(a < b); }
  friend bool operator!=(const LogVal& a, const LogVal& b) { return !(a == b); }

  friend const LogVal& min(const LogVal& a, const LogVal& b) { return b < a ? b : a; }
  friend const LogVal& max(const LogVal& a, const LogVal& b) { return a < b ? b : a; }

  std::string str() const { return finite_ ? rat_str(v_) : "inf"; }

 private:
  bool finite_;
  Rat v_;
};

}  // namespace shilov
