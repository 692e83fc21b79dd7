#include "shilov/metric.hpp"

#include "shilov/cells.hpp"
#include "shilov/errors.hpp"

#include <algorithm>
#include <numeric>

namespace shilov {

MonomialPoint MonomialPoint::canonical() const {
  MonomialPoint out = *this;
  Rat m = *std::min_element(w.begin(), w.end());
  for (auto& x : out.w) x -= m;
  out.c += m;
  return out;
}

LogVal point_val(const MonomialPoint& z, const HomPoly& f) {
  LogVal best = LogVal::infinity();
  const Rat shift = Rat(f.degree()) * z.c;
  for (const auto& [a, coeff] : f.terms()) {
    LogVal v = coeff.valuation();
    if (!v.is_finite()) continue;  // semi-exact zero coefficient: no known term
    Rat acc = v.value() + shift;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0) acc += z.w[i] * a[i];
    if (LogVal(acc) < best) best = LogVal(std::move(acc));
  }
  return best;
}

MetricSpec::MetricSpec(int d, std::vector<MonomialPoint> points) : d_(d), points_(std::move(points)) {
  if (d_ < 1) throw ValidationError("MetricSpec: need d >= 1");
  if (points_.empty()) throw ValidationError("MetricSpec: empty point list");
  std::vector<MonomialPoint> canon;
  for (const auto& z : points_) {
    if (static_cast<int>(z.w.size()) != d_ + 1)
      throw ValidationError("MetricSpec: weight vector length must be d+1");
    MonomialPoint k = z.canonical();
    for (const auto& seen : canon)
      if (seen == k) throw ValidationError("MetricSpec: duplicate point (equal valuations)");
    canon.push_back(std::move(k));
  }
}

MetricSpec MetricSpec::shifted_all(const Rat& delta) const {
  std::vector<MonomialPoint> pts = points_;
  for (auto& z : pts) z.c += delta;
  return MetricSpec(d_, std::move(pts));
}

LogVal spec_val(const MetricSpec& spec, const HomPoly& f) {
  LogVal best = LogVal::infinity();
  for (const auto& z : spec.points()) best = min(best, point_val(z, f));
  return best;
}

bool ShilovSet::contains(std::size_t i) const {
  return std::find(indices.begin(), indices.end(), i) != indices.end();
}

ShilovSet shilov_set(const MetricSpec& spec) {
  const int d = spec.dim_projective();
  ShilovSet out;
  if (spec.size() == 1) {
    out.indices.push_back(0);
    out.witnesses.push_back(std::vector<Rat>(d + 1, Rat(1, d + 1)));
    return out;
  }
  for (std::size_t a = 0; a < spec.size(); ++a) {
    std::vector<AffineForm> gaps;
    AffineForm ga = spec.points()[a].gauss_form();
    for (std::size_t i = 0; i < spec.size(); ++i)
      if (i != a) gaps.push_back(spec.points()[i].gauss_form() - ga);
    MaxMinResult r = simplex_max_min(gaps, d);
    if (r.value > 0) {
      out.indices.push_back(a);
      out.witnesses.push_back(std::move(r.arg));
    }
  }
  return out;
}

bool envelope_contains(const MetricSpec& spec, const MonomialPoint& z) {
  if (z.w.size() != spec.points()[0].w.size())
    throw ValidationError("envelope_contains: dimension mismatch");
  std::vector<AffineForm> gaps;
  AffineForm gz = z.gauss_form();
  for (const auto& p : spec.points()) gaps.push_back(p.gauss_form() - gz);
  // z in the envelope iff g_z >= min_i g_i everywhere
  return !(simplex_max_min(gaps, spec.dim_projective()).value > 0);
}

bool dominance(const MonomialPoint& z, const MonomialPoint& w) {
  if (z.w.size() != w.w.size()) throw ValidationError("dominance: dimension mismatch");
  for (std::size_t j = 0; j < z.w.size(); ++j)
    if (z.gauss_form().at_vertex(j) < w.gauss_form().at_vertex(j)) return false;
  return true;
}

namespace {

BigInt lcm_den(const std::vector<Rat>& u) {
  BigInt l = 1;
  for (const Rat& x : u) l = boost::multiprecision::lcm(l, rat_den(x));
  return l;
}

}  // namespace

HomPoly separating_section(const MetricSpec& spec, const std::vector<std::size_t>& j_subset) {
  ShilovSet sh = shilov_set(spec);
  if (j_subset.empty()) throw ValidationError("separating_section: J must be nonempty");
  for (std::size_t j : j_subset)
    if (!sh.contains(j)) throw ValidationError("separating_section: J must consist of Shilov indices");
  std::vector<std::size_t> keep;  // Shilov indices outside J
  std::vector<std::vector<Rat>> keep_witness;
  for (std::size_t k = 0; k < sh.indices.size(); ++k) {
    if (std::find(j_subset.begin(), j_subset.end(), sh.indices[k]) == j_subset.end()) {
      keep.push_back(sh.indices[k]);
      keep_witness.push_back(sh.witnesses[k]);
    }
  }
  if (keep.empty()) throw ValidationError("separating_section: J must be a proper subset");

  // common integral degree for all cleared witnesses
  BigInt big_n = 1;
  for (const auto& u : keep_witness) big_n = boost::multiprecision::lcm(big_n, lcm_den(u));
  const int n = static_cast<int>(big_n);

  HomPoly f(spec.dim_projective(), n);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    const auto& u = keep_witness[k];
    ExpVec alpha(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
      alpha[i] = static_cast<int>(BigInt(rat_num(u[i] * n)));
    // normalize so the term has valuation 0 at its own point
    Rat beta = -Rat(n) * spec.points()[keep[k]].gauss_form().at(u);
    f.add_term(alpha, HahnSeries::monomial(Rat(1), beta));
  }
  return f;
}

LocalizedVal localized_val(const MetricSpec& spec, const HomPoly& f, const HomPoly& b) {
  LogVal vf = spec_val(spec, f);
  if (!(vf == LogVal(Rat(0)))) throw ValidationError("localized_val: spec_val(f) must be 0");
  if (b.is_zero()) return {LogVal::infinity(), 0};

  std::vector<std::size_t> peak;  // points where f has valuation 0
  for (std::size_t a = 0; a < spec.size(); ++a)
    if (point_val(spec.points()[a], f) == LogVal(Rat(0))) peak.push_back(a);

  LogVal limit = LogVal::infinity();
  for (std::size_t a : peak) limit = min(limit, point_val(spec.points()[a], b));

  int n_star = 0;
  for (std::size_t a = 0; a < spec.size(); ++a) {
    if (std::find(peak.begin(), peak.end(), a) != peak.end()) continue;
    Rat va_f = point_val(spec.points()[a], f).value();  // > 0 off the peak set
    Rat va_b = point_val(spec.points()[a], b).value();
    Rat need = (limit.value() - va_b) / va_f;
    BigInt k = rat_ceil(need);
    if (k > 0) n_star = std::max(n_star, static_cast<int>(k));
  }

  // one direct re-check at the reported index
  HomPoly probe = f.pow(static_cast<unsigned>(n_star)) * b;
  if (!(spec_val(spec, probe) == limit))
    throw ComputeError("localized_val: stabilization check failed");
  return {limit, n_star};
}

namespace {

Rat envelope_at(const MetricSpec& spec, const std::vector<Rat>& u) {
  Rat best = spec.points()[0].gauss_form().at(u);
  for (std::size_t i = 1; i < spec.size(); ++i) {
    Rat v = spec.points()[i].gauss_form().at(u);
    if (v < best) best = std::move(v);
  }
  return best;
}

// Exact integral of (g_a - g_b) over the common refinement, d <= 2.
Rat envelope_integral_difference(const MetricSpec& s1, const MetricSpec& s2) {
  Rat acc = 0;
  for (std::size_t i = 0; i < s1.size(); ++i) {
    Cell ci = full_simplex_cell(s1.dim_projective());
    AffineForm gi = s1.points()[i].gauss_form();
    for (std::size_t k = 0; k < s1.size(); ++k)
      if (k != i) ci = clip_leq0(ci, gi - s1.points()[k].gauss_form());
    if (ci.empty()) continue;
    for (std::size_t j = 0; j < s2.size(); ++j) {
      Cell cij = ci;
      AffineForm gj = s2.points()[j].gauss_form();
      for (std::size_t k = 0; k < s2.size(); ++k)
        if (k != j) cij = clip_leq0(cij, gj - s2.points()[k].gauss_form());
      if (cij.empty()) continue;
      acc += cell_integral(cij, gi - gj);
    }
  }
  return acc;
}

// Lattice-average fallback for d >= 3.
Rat envelope_integral_difference_estimate(const MetricSpec& s1, const MetricSpec& s2, int n) {
  Rat acc = 0;
  std::int64_t count = 0;
  for (const ExpVec& a : monomials(s1.dim_projective(), n)) {
    std::vector<Rat> u(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) u[i] = Rat(a[i], n);
    acc += envelope_at(s1, u) - envelope_at(s2, u);
    ++count;
  }
  return acc / count;
}

}  // namespace

MetricDistance metric_distance(const MetricSpec& a, const MetricSpec& b) {
  if (a.dim_projective() != b.dim_projective())
    throw ValidationError("metric_distance: dimension mismatch");
  const int d = a.dim_projective();

  // d_inf over candidate vertices of the combined arrangement
  std::vector<AffineForm> walls;
  auto add_walls = [&](const MetricSpec& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        walls.push_back(s.points()[i].gauss_form() - s.points()[j].gauss_form());
  };
  add_walls(a);
  add_walls(b);
  Rat d_inf = 0;
  for (const auto& u : simplex_candidate_points(walls, d)) {
    Rat gap = envelope_at(a, u) - envelope_at(b, u);
    if (gap < 0) gap = -gap;
    if (gap > d_inf) d_inf = std::move(gap);
  }

  MetricDistance out;
  out.d_inf = std::move(d_inf);
  if (d <= 2) {
    Rat integral = envelope_integral_difference(a, b);
    if (integral < 0) integral = -integral;
    out.d_1 = integral / simplex_chart_volume(d);
    out.d1_exact = true;
  } else {
    Rat integral = envelope_integral_difference_estimate(a, b, 24);
    if (integral < 0) integral = -integral;
    out.d_1 = std::move(integral);
    out.d1_exact = false;
  }
  return out;
}

}  // namespace shilov
