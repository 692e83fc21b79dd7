#pragma once

#include "shilov/hahn.hpp"
#include "shilov/poly.hpp"

#include <string>

namespace shilov {

// Text forms:
//   HahnSeries  "2*t^(1/2) + -1*t + 3"            (exponent 0 and 1 shortened)
//   tail marker "O(t^(5))" for finite precision
//   HomPoly     "t^(1/2)*x0^2 x1 + (1 + t)*x1^3"  (coefficient parenthesized
//               when it has several terms)
// Parsers throw ValidationError with a character position on bad input.

HahnSeries hahn_parse(const std::string& text);

HomPoly poly_parse(const std::string& text, int d);

}  // namespace shilov
