#include "shilov/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace shilov {

BigInt rat_num(const Rat& x) { return boost::multiprecision::numerator(x); }
BigInt rat_den(const Rat& x) { return boost::multiprecision::denominator(x); }

BigInt rat_floor(const Rat& x) {
  BigInt q = rat_num(x) / rat_den(x);
  if (x < 0 && q * rat_den(x) != rat_num(x)) --q;
  return q;
}

BigInt rat_ceil(const Rat& x) { return -rat_floor(-x); }

double rat_to_double(const Rat& x) { return x.convert_to<double>(); }

Rat rat_from_double(double x) {
  if (x == 0.0) return Rat(0);
  if (!std::isfinite(x)) throw std::invalid_argument("rat_from_double: non-finite value");
  int e = 0;
  double m = std::frexp(x, &e);  // x = m * 2^e, |m| in [1/2, 1)
  auto mant = static_cast<long long>(std::ldexp(m, 53));
  e -= 53;
  Rat out(mant, 1);
  BigInt two = 1;
  if (e >= 0) {
    for (int i = 0; i < e; ++i) two *= 2;
    out *= Rat(two, 1);
  } else {
    for (int i = 0; i < -e; ++i) two *= 2;
    out /= Rat(two, 1);
  }
  return out;
}

namespace {

bool parse_int(std::string_view s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) return false;
  BigInt v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    v = v * 10 + (s[i] - '0');
  }
  out = neg ? BigInt(-v) : v;
  return true;
}

}  // namespace

std::optional<Rat> rat_parse(std::string_view text) {
  // strip surrounding whitespace
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num, den;
    if (!parse_int(text.substr(0, slash), num)) return std::nullopt;
    if (!parse_int(text.substr(slash + 1), den)) return std::nullopt;
    if (den == 0) return std::nullopt;
    return Rat(num, den);
  }

  // decimal / scientific form, read exactly
  std::string_view mant = text;
  BigInt exp10 = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    if (!parse_int(text.substr(e + 1), exp10)) return std::nullopt;
    mant = text.substr(0, e);
  }
  std::string digits;
  std::int64_t frac_digits = 0;
  bool seen_dot = false, neg = false, any = false;
  for (std::size_t i = 0; i < mant.size(); ++i) {
    char ch = mant[i];
    if (i == 0 && (ch == '+' || ch == '-')) {
      neg = ch == '-';
      continue;
    }
    if (ch == '.') {
      if (seen_dot) return std::nullopt;
      seen_dot = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
    digits.push_back(ch);
    any = true;
    if (seen_dot) ++frac_digits;
  }
  if (!any) return std::nullopt;
  BigInt num = 0;
  for (char ch : digits) num = num * 10 + (ch - '0');
  if (neg) num = -num;
  BigInt e = exp10 - frac_digits;
  if (e > 100000 || e < -100000) return std::nullopt;
  Rat out(num, 1);
  BigInt ten = 10;
  if (e >= 0) {
    for (BigInt i = 0; i < e; ++i) out *= 10;
  } else {
    for (BigInt i = 0; i < -e; ++i) out /= 10;
  }
  return out;
}

std::string rat_str(const Rat& x) {
  std::string s = rat_num(x).str();
  if (rat_den(x) != 1) {
    s += '/';
    s += rat_den(x).str();
  }
  return s;
}

}  // namespace shilov
