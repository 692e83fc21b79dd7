#include "shilov/measure.hpp"

#include "shilov/cells.hpp"
#include "shilov/errors.hpp"

#include <algorithm>

namespace shilov {

Rat EqMeasure::total() const {
  Rat acc = 0;
  for (const Rat& l : lambda) acc += l;
  return acc;
}

std::int64_t chi_a_count(const MetricSpec& spec, std::size_t a, int n) {
  if (a >= spec.size()) throw ValidationError("chi_a_count: point index out of range");
  std::int64_t count = 0;
  for (const ExpVec& alpha : monomials(spec.dim_projective(), n)) {
    Rat va;
    Rat best;
    bool first = true;
    for (std::size_t i = 0; i < spec.size(); ++i) {
      const auto& z = spec.points()[i];
      Rat v = Rat(n) * z.c;
      for (std::size_t k = 0; k < alpha.size(); ++k)
        if (alpha[k] != 0) v += z.w[k] * alpha[k];
      if (i == a) va = v;
      if (first || v < best) {
        best = std::move(v);
        first = false;
      }
    }
    if (va == best) ++count;
  }
  return count;
}

Rat lambda_exact(const MetricSpec& spec, std::size_t a) {
  if (a >= spec.size()) throw ValidationError("lambda_exact: point index out of range");
  const int d = spec.dim_projective();
  if (d > 2) throw ValidationError("lambda_exact: exact volumes need d <= 2");
  Cell cell = full_simplex_cell(d);
  AffineForm ga = spec.points()[a].gauss_form();
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (i == a) continue;
    cell = clip_leq0(cell, ga - spec.points()[i].gauss_form());
    if (cell.empty()) return Rat(0);
  }
  return cell_volume(cell) / simplex_chart_volume(d);
}

EqMeasure eq_measure(const MetricSpec& spec, const EqMeasureOptions& opts) {
  EqMeasure out;
  out.lambda.assign(spec.size(), Rat(0));
  ShilovSet sh = shilov_set(spec);
  out.shilov = sh.indices;
  if (spec.dim_projective() <= 2) {
    out.method = EqMeasure::Method::Volume;
    for (std::size_t a : sh.indices) out.lambda[a] = lambda_exact(spec, a);
    return out;
  }
  // counting estimator at a fixed level n with an empirical C/n bar
  out.method = EqMeasure::Method::Counting;
  const int n = opts.counting_level;
  const int half = std::max(1, n / 2);
  const Rat chi_n(hilbert_chi(spec.dim_projective(), n));
  const Rat chi_half(hilbert_chi(spec.dim_projective(), half));
  Rat drift = 0;
  for (std::size_t a : sh.indices) {
    Rat est = Rat(chi_a_count(spec, a, n)) / chi_n;
    Rat prev = Rat(chi_a_count(spec, a, half)) / chi_half;
    Rat gap = est - prev;
    if (gap < 0) gap = -gap;
    if (gap > drift) drift = gap;
    out.lambda[a] = std::move(est);
  }
  // the two levels bracket the limit up to ~3C/n, so report their gap plus
  // a lattice-resolution floor
  out.err_bound = drift + Rat(2, n);
  return out;
}

Rat pair_measure(const EqMeasure& mu, const MetricSpec& spec, const HomPoly& s) {
  if (s.is_zero()) throw ValidationError("pair_measure: zero section");
  if (s.degree() < 1) throw ValidationError("pair_measure: section must have positive degree");
  if (mu.lambda.size() != spec.size()) throw ValidationError("pair_measure: measure/spec mismatch");
  Rat acc = 0;
  for (std::size_t a = 0; a < spec.size(); ++a) {
    if (mu.lambda[a] == 0) continue;
    acc += mu.lambda[a] * point_val(spec.points()[a], s).value();
  }
  return -acc / s.degree();
}

MeasureDistanceCheck measure_distance_check(const MetricSpec& s1, const MetricSpec& s2) {
  if (s1.dim_projective() != s2.dim_projective())
    throw ValidationError("measure_distance_check: dimension mismatch");
  EqMeasure m1 = eq_measure(s1);
  EqMeasure m2 = eq_measure(s2);

  // monomial test sections: the pairing difference is affine in the
  // direction u, so the sup over monomials is a max over simplex vertices
  Rat d_mono = 0;
  for (std::size_t j = 0; j < s1.points()[0].w.size(); ++j) {
    Rat gap = 0;
    for (std::size_t a = 0; a < s1.size(); ++a)
      gap += m1.lambda[a] * s1.points()[a].gauss_form().at_vertex(j);
    for (std::size_t b = 0; b < s2.size(); ++b)
      gap -= m2.lambda[b] * s2.points()[b].gauss_form().at_vertex(j);
    if (gap < 0) gap = -gap;
    if (gap > d_mono) d_mono = std::move(gap);
  }

  MetricDistance dist = metric_distance(s1, s2);
  MeasureDistanceCheck out;
  out.d_mono = std::move(d_mono);
  out.bound = 2 * dist.d_1;
  out.holds = out.d_mono <= out.bound;
  return out;
}

}  // namespace shilov
