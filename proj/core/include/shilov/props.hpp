#pragma once

#include "shilov/harness.hpp"
#include "shilov/solver.hpp"

#include <ostream>
#include <random>
#include <string>

namespace shilov::props {

// Deterministic generators shared by the property suites, the test binaries
// and the CLI `props` command.
using Rng = std::mt19937_64;

Rat rand_rat(Rng& rng, int lo, int hi, int max_den);
HahnSeries rand_hahn(Rng& rng, int max_terms, int max_den);
HahnSeries rand_hahn_nonzero(Rng& rng, int max_terms, int max_den);
MonomialPoint rand_point(Rng& rng, int d, int max_den = 4);
MetricSpec rand_spec(Rng& rng, int d, int num_points, int max_den = 4);
// degree-1 section with single-term Hahn coefficients, nonzero
HomPoly rand_section(Rng& rng, int d, int max_den = 4);
HomPoly rand_poly(Rng& rng, int d, int degree, int max_terms, int max_den = 4);
// random diagonal norm weights
DiagNorm rand_weights(Rng& rng, int level, std::size_t size, int max_den = 4);
ValMatrix rand_matrix(Rng& rng, std::size_t rows, std::size_t cols, int max_entry_terms,
                      int max_den = 4);

struct SuiteResult {
  int passed = 0;
  int failed = 0;

  bool ok() const { return failed == 0; }
  SuiteResult& operator+=(const SuiteResult& o);
};

// Each suite prints one "ok"/"FAIL" line per property.
SuiteResult props_base_arith(std::uint64_t seed, std::ostream& out);
SuiteResult props_graded_algebra(std::uint64_t seed, std::ostream& out);
SuiteResult props_metrics(std::uint64_t seed, std::ostream& out);
SuiteResult props_ultralinalg(std::uint64_t seed, std::ostream& out);
SuiteResult props_equidistribution(std::uint64_t seed, std::ostream& out);
SuiteResult props_solver(std::uint64_t seed, std::ostream& out);

SuiteResult run_all_props(std::uint64_t seed, std::ostream& out);

}  // namespace shilov::props
