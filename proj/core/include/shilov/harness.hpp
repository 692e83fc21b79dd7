#pragma once

#include "shilov/measure.hpp"

#include <string>
#include <vector>

namespace shilov {

struct ConvergenceRow {
  int n = 0;
  std::int64_t chi = 0;
  Rat lhs;    // -wedge_top_val / chi(n)
  Rat rhs;    // measure pairing, constant over n
  Rat err;    // lhs - rhs
  Rat n_err;  // n * err
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  Rat rhs;
  Rat fitted_c;   // max over rows of |n * err|
  Rat band_low;   // min_a -v_a(s): err is expected within [low, high] * C/n
  Rat band_high;  // max_a -v_a(s)
};

struct HarnessOptions {
  SvdOptions svd;
  int threads = 0;  // 0 = hardware concurrency
};

// Runs the multiplication operator through degrees 1..n_max under the
// envelope norms and compares the normalized top-wedge valuation with the
// measure pairing. s must be a nonzero degree-1 section.
ConvergenceReport theorem_harness(const MetricSpec& spec, const HomPoly& s, int n_max,
                                  const HarnessOptions& opts = {});

std::string report_csv(const ConvergenceReport& report);

}  // namespace shilov
