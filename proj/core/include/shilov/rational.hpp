#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace shilov {

// Arbitrary-precision rational scalar. boost keeps the fraction reduced with
// a positive denominator, which is the canonical form assumed everywhere.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rat rat(std::int64_t num, std::int64_t den = 1) { return Rat(num, den); }

BigInt rat_num(const Rat& x);
BigInt rat_den(const Rat& x);

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

// Largest integer <= x / smallest integer >= x.
BigInt rat_floor(const Rat& x);
BigInt rat_ceil(const Rat& x);

double rat_to_double(const Rat& x);

// Exact conversion; every finite double is a binary rational.
Rat rat_from_double(double x);

// Accepts "p/q", integers, decimal literals and scientific notation
// ("-3/4", "12", "0.25", "1e-9"). Decimal forms are read exactly.
std::optional<Rat> rat_parse(std::string_view text);

// Canonical text form: "p" or "p/q".
std::string rat_str(const Rat& x);

}  // namespace shilov
