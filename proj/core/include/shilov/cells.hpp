#pragma once

#include "shilov/simplex.hpp"

#include <vector>

namespace shilov {

// Convex cell in the affine chart (u_1,..,u_d) of the standard simplex,
// supported for d = 1 (interval) and d = 2 (polygon, counter-clockwise).
// All clipping, measures and integrals are exact rational.
struct Cell {
  int d = 1;
  std::vector<std::vector<Rat>> verts;

  bool empty() const { return verts.empty(); }
};

Cell full_simplex_cell(int d);

// Chart measure of the full simplex: 1 for d=1, 1/2 for d=2.
Rat simplex_chart_volume(int d);

// Keeps the part of the cell where form(u) <= 0 (form given in simplex
// coordinates u_0..u_d).
Cell clip_leq0(const Cell& cell, const AffineForm& form);

Rat cell_volume(const Cell& cell);

// Exact integral of the affine form over the cell, in chart measure.
Rat cell_integral(const Cell& cell, const AffineForm& form);

}  // namespace shilov
