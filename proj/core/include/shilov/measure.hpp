#pragma once

#include "shilov/linalg.hpp"
#include "shilov/metric.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace shilov {

// The equidistribution measure sum lambda_a * delta_a over the Shilov
// points. Exact cell volumes for d <= 2; residual Hilbert-function counting
// with a C/n error bar otherwise.
struct EqMeasure {
  enum class Method { Volume, Counting };

  std::vector<Rat> lambda;  // aligned with the spec's point list, 0 off-Shilov
  std::vector<std::size_t> shilov;
  Method method = Method::Volume;
  std::optional<Rat> err_bound;  // per-coefficient bound, counting method only

  Rat total() const;
};

// Number of degree-n monomials whose envelope minimum is attained at point a
// (ties counted at every attaining index).
std::int64_t chi_a_count(const MetricSpec& spec, std::size_t a, int n);

// Normalized volume of the closed argmin cell of point a; exact half-plane
// clipping, d <= 2 only.
Rat lambda_exact(const MetricSpec& spec, std::size_t a);

struct EqMeasureOptions {
  int counting_level = 48;  // level used for d >= 3
};

EqMeasure eq_measure(const MetricSpec& spec, const EqMeasureOptions& opts = {});

// Pairing of log|s| with the measure, per unit degree:
// -sum_a lambda_a * point_val(a, s) / deg(s).
Rat pair_measure(const EqMeasure& mu, const MetricSpec& spec, const HomPoly& s);

struct MeasureDistanceCheck {
  Rat d_mono;  // monomial-restricted measure distance (a lower bound)
  Rat bound;   // 2 * d_1 of the two metrics
  bool holds;  // d_mono <= bound
};

// Compares the equidistribution measures of two specs through monomial test
// sections and reports the distance against 2*d_1.
MeasureDistanceCheck measure_distance_check(const MetricSpec& s1, const MetricSpec& s2);

}  // namespace shilov
