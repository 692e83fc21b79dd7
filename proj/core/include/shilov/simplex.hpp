#pragma once

#include "shilov/rational.hpp"

#include <optional>
#include <vector>

namespace shilov {

// Affine functional u -> <w,u> + c on the standard simplex
// Delta_d = { u in R^{d+1} : u_j >= 0, sum u_j = 1 }.
struct AffineForm {
  std::vector<Rat> w;
  Rat c;

  Rat at(const std::vector<Rat>& u) const;
  Rat at_vertex(std::size_t j) const { return w[j] + c; }

  friend AffineForm operator-(const AffineForm& a, const AffineForm& b);
};

// Exact Gaussian elimination; nullopt when the matrix is singular.
std::optional<std::vector<Rat>> solve_square(std::vector<std::vector<Rat>> a, std::vector<Rat> b);

// All points of Delta_d cut out by d of the given hyperplanes {form = 0}
// together with the simplex facets u_j = 0. This is a superset of the
// vertices of any cell arrangement whose walls are among the forms, so exact
// optimization of piecewise-linear data reduces to scanning it.
std::vector<std::vector<Rat>> simplex_candidate_points(const std::vector<AffineForm>& walls, int d);

struct MaxMinResult {
  Rat value;
  std::vector<Rat> arg;  // a point of Delta_d attaining the value
};

// Maximizes min_k f_k(u) over Delta_d exactly. The objective is concave and
// piecewise linear, so the optimum is attained at a candidate point of the
// arrangement of pairwise-equality walls. Deterministic: candidates are
// scanned in enumeration order and only strict improvements replace the
// incumbent.
MaxMinResult simplex_max_min(const std::vector<AffineForm>& forms, int d);

}  // namespace shilov
