#pragma once

#include "shilov/poly.hpp"
#include "shilov/simplex.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace shilov {

// A monomial (Gauss) valuation point of the cone over P^d: weight vector w
// and shift c. On a degree-n section it evaluates as
//   v(f) = min over terms (val(coeff) + <w, alpha>) + n*c.
// This is multiplicative and graded, hence a birational point.
struct MonomialPoint {
  std::vector<Rat> w;
  Rat c;

  AffineForm gauss_form() const { return AffineForm{w, c}; }

  // Two points define the same valuation iff their forms agree on the
  // simplex; the canonical key shifts min(w) into c.
  MonomialPoint canonical() const;

  friend bool operator==(const MonomialPoint& a, const MonomialPoint& b) {
    return a.w == b.w && a.c == b.c;
  }
};

LogVal point_val(const MonomialPoint& z, const HomPoly& f);

// Shilov-finite metric: the max-envelope of finitely many monomial points.
// Construction rejects duplicates (equal valuations are the same point) and
// mismatched weight lengths.
class MetricSpec {
 public:
  MetricSpec(int d, std::vector<MonomialPoint> points);

  int dim_projective() const { return d_; }
  const std::vector<MonomialPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  // Adds a common shift to every point (scales the metric).
  MetricSpec shifted_all(const Rat& delta) const;

 private:
  int d_;
  std::vector<MonomialPoint> points_;
};

// Envelope sup-norm valuation: min over the points.
LogVal spec_val(const MetricSpec& spec, const HomPoly& f);

struct ShilovSet {
  std::vector<std::size_t> indices;
  // witness direction per member: a simplex point where the member's
  // valuation is strictly below every other point's
  std::vector<std::vector<Rat>> witnesses;

  bool contains(std::size_t i) const;
};

// A point belongs to the Shilov boundary iff its strict-argmin region on the
// simplex is nonempty, decided by exact max-margin optimization.
ShilovSet shilov_set(const MetricSpec& spec);

// True iff z lies in the holomorphic envelope of the spec's points:
// v_z >= min_i v_i on every monomial direction.
bool envelope_contains(const MetricSpec& spec, const MonomialPoint& z);

// The envelope ordering: z is dominated by w iff |f(z)| <= |f(w)| for all f,
// which for monomial points is a vertexwise comparison.
bool dominance(const MonomialPoint& z, const MonomialPoint& w);

// For a proper nonempty subset J of the Shilov indices, returns a
// homogeneous f with spec_val(f) = 0, point_val > 0 on J, and = 0 at every
// other Shilov point. Built from the Shilov witnesses cleared to a common
// integral degree.
HomPoly separating_section(const MetricSpec& spec, const std::vector<std::size_t>& j_subset);

struct LocalizedVal {
  LogVal value;
  int stabilization_n;  // spec_val(f^n b) is constant from here on
};

// Localized norm: for spec_val(f) = 0, the limit of spec_val(f^n b) equals
// the min of point_val(.,b) over the points where f peaks; the finite
// stabilization index is returned and one direct evaluation re-checks it.
LocalizedVal localized_val(const MetricSpec& spec, const HomPoly& f, const HomPoly& b);

struct MetricDistance {
  Rat d_inf;
  Rat d_1;
  bool d1_exact;
};

// d_inf = max over the simplex of |g_1 - g_2| via the common cell
// arrangement; d_1 = |integral of (g_1 - g_2)| / vol, exact for d <= 2 and
// estimated by lattice averaging (flagged) for d >= 3.
MetricDistance metric_distance(const MetricSpec& a, const MetricSpec& b);

}  // namespace shilov
