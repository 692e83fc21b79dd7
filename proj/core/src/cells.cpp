#include "shilov/cells.hpp"

#include <stdexcept>

namespace shilov {

namespace {

// Value of a simplex-coordinate form at a chart point (u_1..u_d),
// with u_0 = 1 - sum.
Rat form_at_chart(const AffineForm& f, const std::vector<Rat>& p) {
  Rat u0 = 1;
  for (const Rat& x : p) u0 -= x;
  Rat acc = f.c + f.w[0] * u0;
  for (std::size_t i = 0; i < p.size(); ++i) acc += f.w[i + 1] * p[i];
  return acc;
}

}  // namespace

Cell full_simplex_cell(int d) {
  Cell c;
  c.d = d;
  if (d == 1) {
    c.verts = {{Rat(0)}, {Rat(1)}};
  } else if (d == 2) {
    c.verts = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  } else {
    throw std::invalid_argument("full_simplex_cell: exact cells support d <= 2 only");
  }
  return c;
}

Rat simplex_chart_volume(int d) {
  if (d == 1) return Rat(1);
  if (d == 2) return Rat(1, 2);
  throw std::invalid_argument("simplex_chart_volume: d <= 2 only");
}

Cell clip_leq0(const Cell& cell, const AffineForm& form) {
  Cell out;
  out.d = cell.d;
  if (cell.empty()) return out;

  if (cell.d == 1) {
    const Rat lo = cell.verts[0][0], hi = cell.verts[1][0];
    // form in chart: value = a*x + b
    Rat b = form_at_chart(form, {Rat(0)});
    Rat a = form_at_chart(form, {Rat(1)}) - b;
    Rat new_lo = lo, new_hi = hi;
    if (a == 0) {
      if (b > 0) return out;
    } else if (a > 0) {
      Rat bound = -b / a;
      if (bound < new_hi) new_hi = bound;
    } else {
      Rat bound = -b / a;
      if (bound > new_lo) new_lo = bound;
    }
    if (new_lo <= new_hi) out.verts = {{new_lo}, {new_hi}};
    return out;
  }

  // d == 2: Sutherland-Hodgman against the half-plane form <= 0
  const auto& vs = cell.verts;
  std::vector<Rat> vals(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) vals[i] = form_at_chart(form, vs[i]);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::size_t j = (i + 1) % vs.size();
    const bool in_i = vals[i] <= 0, in_j = vals[j] <= 0;
    if (in_i) out.verts.push_back(vs[i]);
    if (in_i != in_j) {
      Rat t = vals[i] / (vals[i] - vals[j]);
      std::vector<Rat> p(2);
      for (int k = 0; k < 2; ++k) p[k] = vs[i][k] + t * (vs[j][k] - vs[i][k]);
      out.verts.push_back(std::move(p));
    }
  }
  if (out.verts.size() < 3) out.verts.clear();
  return out;
}

Rat cell_volume(const Cell& cell) {
  if (cell.empty()) return Rat(0);
  if (cell.d == 1) return cell.verts[1][0] - cell.verts[0][0];
  Rat twice_area = 0;
  const auto& vs = cell.verts;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::size_t j = (i + 1) % vs.size();
    twice_area += vs[i][0] * vs[j][1] - vs[j][0] * vs[i][1];
  }
  if (twice_area < 0) twice_area = -twice_area;
  return twice_area / 2;
}

Rat cell_integral(const Cell& cell, const AffineForm& form) {
  if (cell.empty()) return Rat(0);
  if (cell.d == 1) {
    Rat lo = cell.verts[0][0], hi = cell.verts[1][0];
    return (hi - lo) * (form_at_chart(form, {lo}) + form_at_chart(form, {hi})) / 2;
  }
  // fan triangulation; an affine integrand integrates to area * vertex mean
  Rat acc = 0;
  const auto& vs = cell.verts;
  Rat f0 = form_at_chart(form, vs[0]);
  for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
    Rat cross = (vs[i][0] - vs[0][0]) * (vs[i + 1][1] - vs[0][1]) -
                (vs[i + 1][0] - vs[0][0]) * (vs[i][1] - vs[0][1]);
    if (cross < 0) cross = -cross;
    Rat area = cross / 2;
    acc += area * (f0 + form_at_chart(form, vs[i]) + form_at_chart(form, vs[i + 1])) / 3;
  }
  return acc;
}

}  // namespace shilov
