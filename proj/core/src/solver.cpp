#include "shilov/solver.hpp"

#include "shilov/cells.hpp"
#include "shilov/measure.hpp"
#include "shilov/errors.hpp"

#include <algorithm>
#include <numeric>

namespace shilov {

namespace {

AffineForm point_form(const std::vector<Rat>& w, const Rat& c) { return AffineForm{w, c}; }

Cell argmin_cell(int d, const std::vector<std::vector<Rat>>& weights, const std::vector<Rat>& shifts,
                 std::size_t a) {
  Cell cell = full_simplex_cell(d);
  AffineForm ga = point_form(weights[a], shifts[a]);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i == a) continue;
    cell = clip_leq0(cell, ga - point_form(weights[i], shifts[i]));
    if (cell.empty()) break;
  }
  return cell;
}

}  // namespace

std::vector<Rat> cell_volumes(int d, const std::vector<std::vector<Rat>>& weights,
                              const std::vector<Rat>& shifts) {
  if (d > 2) throw ValidationError("cell_volumes: exact volumes need d <= 2");
  if (weights.size() != shifts.size()) throw ValidationError("cell_volumes: size mismatch");
  std::vector<Rat> out(weights.size());
  const Rat total = simplex_chart_volume(d);
  for (std::size_t a = 0; a < weights.size(); ++a)
    out[a] = cell_volume(argmin_cell(d, weights, shifts, a)) / total;
  return out;
}

Rat solve_potential(int d, const std::vector<std::vector<Rat>>& weights,
                    const std::vector<Rat>& shifts, const std::vector<Rat>& target) {
  Rat acc = 0;
  for (std::size_t a = 0; a < weights.size(); ++a) {
    Cell cell = argmin_cell(d, weights, shifts, a);
    if (!cell.empty()) acc += cell_integral(cell, point_form(weights[a], shifts[a]));
  }
  acc /= simplex_chart_volume(d);
  for (std::size_t a = 0; a < weights.size(); ++a) acc -= target[a] * shifts[a];
  return acc;
}

MetricSpec SolveResult::face_spec() const {
  // reconstruct d from a kept weight vector
  std::vector<MonomialPoint> pts;
  for (std::size_t i = 0; i < shifts.size(); ++i)
    if (!dropped[i]) pts.push_back(MonomialPoint{weights[i], shifts[i]});
  if (pts.empty()) throw ValidationError("face_spec: every point was dropped");
  const int d = static_cast<int>(pts[0].w.size()) - 1;
  return MetricSpec(d, std::move(pts));
}

namespace {

struct AscentState {
  std::vector<Rat> c;
  std::vector<Rat> volumes;
  Rat potential;
};

Rat residual_of(const std::vector<Rat>& volumes, const std::vector<Rat>& target) {
  Rat res = 0;
  for (std::size_t i = 0; i < volumes.size(); ++i) {
    Rat g = volumes[i] - target[i];
    if (g < 0) g = -g;
    if (g > res) res = std::move(g);
  }
  return res;
}

void normalize_gauge(std::vector<Rat>& c) {
  Rat base = c[0];
  for (auto& x : c) x -= base;
}

}  // namespace

SolveResult solve_prescribed(const SolveProblem& problem, const SolveOptions& opts) {
  const std::size_t m = problem.weights.size();
  if (m == 0) throw ValidationError("solve_prescribed: no points");
  if (problem.target.size() != m) throw ValidationError("solve_prescribed: target size mismatch");
  Rat total = 0;
  for (const Rat& t : problem.target) {
    if (t < 0) throw ValidationError("solve_prescribed: target outside the simplex");
    total += t;
  }
  if (total != 1) throw ValidationError("solve_prescribed: target must sum to 1");
  for (const auto& w : problem.weights)
    if (static_cast<int>(w.size()) != problem.d + 1)
      throw ValidationError("solve_prescribed: weight length must be d+1");

  // pairwise non-dominating: weights must differ by more than a constant,
  // otherwise one point's cell is empty at every shift of the other
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Rat gap = problem.weights[i][0] - problem.weights[j][0];
      bool parallel = true;
      for (std::size_t k = 1; k < problem.weights[i].size(); ++k)
        if (problem.weights[i][k] - problem.weights[j][k] != gap) {
          parallel = false;
          break;
        }
      if (parallel)
        throw ValidationError("solve_prescribed: points must be pairwise non-dominating");
    }

  SolveResult out;
  out.shifts.assign(m, Rat(0));
  out.dropped.assign(m, false);
  out.achieved.assign(m, Rat(0));
  out.weights = problem.weights;

  // face reduction: zero-target indices leave the problem entirely
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < m; ++i) {
    if (problem.target[i] == 0)
      out.dropped[i] = true;
    else
      kept.push_back(i);
  }
  if (kept.empty()) throw ValidationError("solve_prescribed: empty face");

  std::vector<std::vector<Rat>> w;
  std::vector<Rat> target;
  for (std::size_t i : kept) {
    w.push_back(problem.weights[i]);
    target.push_back(problem.target[i]);
  }

  // Iterates live in doubles so the exact evaluations below always see
  // small dyadic rationals; accumulating rational steps would let the
  // denominators compound.
  std::vector<double> c(kept.size(), 0.0);
  auto exact_of = [](const std::vector<double>& v) {
    std::vector<Rat> out_v;
    out_v.reserve(v.size());
    for (double x : v) out_v.push_back(rat_from_double(x));
    return out_v;
  };

  AscentState state;
  state.c = exact_of(c);
  state.volumes = cell_volumes(problem.d, w, state.c);
  state.potential = solve_potential(problem.d, w, state.c, target);
  out.potential_trace.push_back(state.potential);

  Rat residual = residual_of(state.volumes, target);
  int iter = 0;
  double step = 1.0;
  while (residual > opts.tolerance) {
    if (iter >= opts.max_iterations)
      throw ComputeError("solve_prescribed: target unreachable at tolerance");
    ++iter;

    std::vector<double> grad(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i)
      grad[i] = rat_to_double(state.volumes[i] - target[i]);

    // damped step: shrink while a cell empties or the potential drops
    bool accepted = false;
    for (int halvings = 0; halvings < 80; ++halvings) {
      std::vector<double> trial_c = c;
      for (std::size_t i = 0; i < kept.size(); ++i) trial_c[i] += step * grad[i];
      double base = trial_c[0];
      for (double& x : trial_c) x -= base;  // gauge: c_0 = 0
      AscentState trial;
      trial.c = exact_of(trial_c);
      trial.volumes = cell_volumes(problem.d, w, trial.c);
      // overshoot guard: a step may not close a cell that is currently open
      // (cells that start empty are opened by the ascent itself)
      bool newly_empty = false;
      for (std::size_t i = 0; i < kept.size(); ++i)
        if (trial.volumes[i] == 0 && state.volumes[i] != 0) newly_empty = true;
      if (!newly_empty) {
        trial.potential = solve_potential(problem.d, w, trial.c, target);
        if (trial.potential >= state.potential) {
          state = std::move(trial);
          c = std::move(trial_c);
          out.potential_trace.push_back(state.potential);
          accepted = true;
          break;
        }
      }
      step /= 2;
    }
    if (!accepted) throw ComputeError("solve_prescribed: step collapsed before tolerance");
    step *= 2;  // recover after damping
    residual = residual_of(state.volumes, target);
  }

  for (std::size_t k = 0; k < kept.size(); ++k) {
    out.shifts[kept[k]] = state.c[k];
    out.achieved[kept[k]] = state.volumes[k];
  }
  out.residual = residual;
  out.iterations = iter;
  return out;
}

PeakSystem peak_system(const MetricSpec& spec) {
  ShilovSet sh = shilov_set(spec);
  PeakSystem out;

  // order by descending cell volume when exact volumes exist; the full-
  // dimensional cells of monomial envelopes carry no face relations, so any
  // deterministic order satisfies the triangularity requirement
  std::vector<std::pair<Rat, std::size_t>> keyed;
  for (std::size_t k = 0; k < sh.indices.size(); ++k) {
    Rat key = spec.dim_projective() <= 2 ? lambda_exact(spec, sh.indices[k]) : Rat(0);
    keyed.emplace_back(std::move(key), k);
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });

  for (const auto& [key, k] : keyed) out.order.push_back(sh.indices[k]);

  const int d = spec.dim_projective();
  for (std::size_t pos = 0; pos < out.order.size(); ++pos) {
    if (pos == 0) {
      // any section with positive valuation at the first point
      const auto& z = spec.points()[out.order[0]];
      MaxMinResult peak = simplex_max_min({z.gauss_form()}, d);
      BigInt den = 1;
      for (const Rat& x : peak.arg) den = boost::multiprecision::lcm(den, rat_den(x));
      int q = static_cast<int>(den);
      ExpVec alpha(peak.arg.size());
      for (std::size_t i = 0; i < alpha.size(); ++i)
        alpha[i] = static_cast<int>(BigInt(rat_num(peak.arg[i] * q)));
      Rat v = Rat(q) * z.gauss_form().at(peak.arg);
      if (v > 0) {
        out.sections.push_back(HomPoly::monomial(d, alpha));
      } else {
        // fall back to a t-power twist reaching valuation 1
        out.sections.push_back(
            HomPoly::monomial(d, alpha, HahnSeries::monomial(Rat(1), Rat(1) - v)));
      }
      continue;
    }
    // valuation 0 at all earlier points, positive at this one: the
    // separating section for J = later-or-equal points restricted to the
    // prefix works verbatim
    std::vector<std::size_t> j_subset(out.order.begin() + static_cast<std::ptrdiff_t>(pos),
                                      out.order.end());
    out.sections.push_back(separating_section(spec, j_subset));
  }
  return out;
}

}  // namespace shilov
