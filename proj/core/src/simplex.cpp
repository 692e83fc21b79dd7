#include "shilov/simplex.hpp"

#include <stdexcept>

namespace shilov {

Rat AffineForm::at(const std::vector<Rat>& u) const {
  if (u.size() != w.size()) throw std::invalid_argument("AffineForm: dimension mismatch");
  Rat acc = c;
  for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * u[i];
  return acc;
}

AffineForm operator-(const AffineForm& a, const AffineForm& b) {
  if (a.w.size() != b.w.size()) throw std::invalid_argument("AffineForm: dimension mismatch");
  AffineForm out{a.w, a.c - b.c};
  for (std::size_t i = 0; i < out.w.size(); ++i) out.w[i] -= b.w[i];
  return out;
}

std::optional<std::vector<Rat>> solve_square(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat factor = a[r][col] / a[col][col];
      for (std::size_t cc = col; cc < n; ++cc) a[r][cc] -= factor * a[col][cc];
      b[r] -= factor * b[col];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

std::vector<std::vector<Rat>> simplex_candidate_points(const std::vector<AffineForm>& walls, int d) {
  const std::size_t nv = static_cast<std::size_t>(d) + 1;
  // hyperplane pool: the walls plus the facets u_j = 0
  std::vector<AffineForm> pool = walls;
  for (std::size_t j = 0; j < nv; ++j) {
    AffineForm facet{std::vector<Rat>(nv, Rat(0)), Rat(0)};
    facet.w[j] = 1;
    pool.push_back(facet);
  }

  std::vector<std::vector<Rat>> points;
  std::vector<std::size_t> pick(static_cast<std::size_t>(d));
  // iterate over all d-subsets of the pool in lexicographic order
  auto emit = [&]() {
    std::vector<std::vector<Rat>> a;
    std::vector<Rat> rhs;
    a.emplace_back(nv, Rat(1));  // sum u_j = 1
    rhs.emplace_back(1);
    for (std::size_t k : pick) {
      a.push_back(pool[k].w);
      rhs.push_back(-pool[k].c);
    }
    auto u = solve_square(std::move(a), std::move(rhs));
    if (!u) return;
    for (const Rat& x : *u)
      if (x < 0) return;
    points.push_back(std::move(*u));
  };

  if (d == 0) {
    points.push_back({Rat(1)});
    return points;
  }

  // simple subset recursion, pool is small in all supported uses
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t start, std::size_t need) -> void {
    if (need == 0) {
      pick = idx;
      emit();
      return;
    }
    for (std::size_t i = start; i + need <= pool.size(); ++i) {
      idx.push_back(i);
      self(self, i + 1, need - 1);
      idx.pop_back();
    }
  };
  rec(rec, 0, static_cast<std::size_t>(d));
  return points;
}

MaxMinResult simplex_max_min(const std::vector<AffineForm>& forms, int d) {
  if (forms.empty()) throw std::invalid_argument("simplex_max_min: no forms");
  std::vector<AffineForm> walls;
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i + 1; j < forms.size(); ++j) walls.push_back(forms[i] - forms[j]);

  auto candidates = simplex_candidate_points(walls, d);
  std::optional<MaxMinResult> best;
  for (auto& u : candidates) {
    Rat v = forms[0].at(u);
    for (std::size_t k = 1; k < forms.size(); ++k) {
      Rat vk = forms[k].at(u);
      if (vk < v) v = std::move(vk);
    }
    if (!best || v > best->value) best = MaxMinResult{std::move(v), std::move(u)};
  }
  return *best;  // candidate set always contains the simplex vertices
}

}  // namespace shilov
