#pragma once

#include "shilov/metric.hpp"

#include <cstddef>
#include <vector>

namespace shilov {

// Prescribed-measure problem: choose shifts c for the given weight vectors
// so the equidistribution coefficients hit the target simplex point.
struct SolveProblem {
  int d = 1;
  std::vector<std::vector<Rat>> weights;  // shifts are the unknowns
  std::vector<Rat> target;                // point of the standard simplex
};

struct SolveResult {
  std::vector<Rat> shifts;    // aligned with the input points; c_0 = 0 among kept ones
  std::vector<bool> dropped;  // true for zero-target indices removed by face reduction
  std::vector<Rat> achieved;  // exact cell volumes at the returned shifts
  Rat residual;               // max |achieved - target|, exact
  int iterations = 0;
  std::vector<std::vector<Rat>> weights;  // copy of the problem's weight vectors
  std::vector<Rat> potential_trace;       // F after every accepted step

  MetricSpec face_spec() const;  // the kept points with their shifts
};

// Normalized cell volumes of the arrangement min_i(<w_i,u> + c_i), exact for
// d <= 2; this is the gradient of the solver's concave potential.
std::vector<Rat> cell_volumes(int d, const std::vector<std::vector<Rat>>& weights,
                              const std::vector<Rat>& shifts);

// The concave potential F(c) = avg_simplex min_i(<w_i,u>+c_i) - <target, c>,
// evaluated exactly. Its gradient is cell_volumes - target.
Rat solve_potential(int d, const std::vector<std::vector<Rat>>& weights,
                    const std::vector<Rat>& shifts, const std::vector<Rat>& target);

struct SolveOptions {
  Rat tolerance = Rat(1, 1000000000);  // residual bound, exact comparison
  int max_iterations = 20000;
};

// Damped gradient ascent on the potential; zero-target indices are first
// dropped to the face sub-problem. Throws ComputeError when the tolerance is
// not reached within the iteration cap.
SolveResult solve_prescribed(const SolveProblem& problem, const SolveOptions& opts = {});

// Peak sections adapted to the Shilov points, ordered so the valuation
// matrix {-point_val(f_i, z_j)} is upper triangular with nonzero diagonal.
struct PeakSystem {
  std::vector<std::size_t> order;  // Shilov indices, sorted by descending cell volume
  std::vector<HomPoly> sections;
};

PeakSystem peak_system(const MetricSpec& spec);

}  // namespace shilov
