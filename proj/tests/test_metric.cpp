#include "shilov/metric.hpp"
#include "shilov/errors.hpp"
#include "shilov/props.hpp"

#include <doctest.h>

using namespace shilov;

namespace {

MonomialPoint mp(std::vector<int> w, Rat c = Rat(0)) {
  MonomialPoint z;
  for (int x : w) z.w.push_back(Rat(x));
  z.c = std::move(c);
  return z;
}

const HomPoly kX0 = HomPoly::monomial(1, {1, 0});
const HomPoly kX1 = HomPoly::monomial(1, {0, 1});

}  // namespace

TEST_CASE("point_val is the Gauss valuation") {
  CHECK(point_val(mp({0, 1}), kX1) == LogVal(Rat(1)));
  CHECK(point_val(mp({0, 1}), kX0 + kX1) == LogVal(Rat(0)));
  // the shift scales with the degree
  HomPoly x0x1 = kX0 * kX1;
  CHECK(point_val(mp({0, 1}, Rat(1, 2)), x0x1) == LogVal(Rat(2)));
  CHECK(!point_val(mp({0, 1}), HomPoly(1, 3)).is_finite());
}

TEST_CASE("spec_val is the envelope minimum") {
  MetricSpec spec(1, {mp({0, 1}), mp({1, 0})});
  CHECK(spec_val(spec, kX0) == LogVal(Rat(0)));
  HahnSeries t = HahnSeries::monomial(Rat(1), Rat(1));
  CHECK(spec_val(spec, kX0 * t + kX1 * t) == LogVal(Rat(1)));

  MetricSpec single(1, {mp({0, 1}, Rat(1, 3))});
  HomPoly f = kX0 * kX0;
  CHECK(spec_val(single, f) == point_val(single.points()[0], f));
}

TEST_CASE("duplicate points are rejected up front") {
  CHECK_THROWS_AS(MetricSpec(1, {mp({0, 1}), mp({0, 1})}), ValidationError);
  // same valuation in disguise: w shifted into c
  MonomialPoint disguised;
  disguised.w = {Rat(1), Rat(2)};
  disguised.c = Rat(-1);
  CHECK_THROWS_AS(MetricSpec(1, {mp({0, 1}), disguised}), ValidationError);
}

TEST_CASE("shilov_set finds the strict-argmin points") {
  MetricSpec spec(1, {mp({0, 1}), mp({1, 0})});
  ShilovSet sh = shilov_set(spec);
  REQUIRE(sh.indices.size() == 2);
  // each witness strictly separates its point
  for (std::size_t k = 0; k < sh.indices.size(); ++k) {
    std::size_t a = sh.indices[k];
    Rat va = spec.points()[a].gauss_form().at(sh.witnesses[k]);
    for (std::size_t i = 0; i < spec.size(); ++i)
      if (i != a) CHECK(va < spec.points()[i].gauss_form().at(sh.witnesses[k]));
  }

  // componentwise domination leaves only the dominating point
  MetricSpec dom(1, {mp({0, 0}), mp({0, 1})});
  ShilovSet sh2 = shilov_set(dom);
  REQUIRE(sh2.indices.size() == 1);
  CHECK(sh2.indices[0] == 0);

  MetricSpec single(1, {mp({3, 0})});
  CHECK(shilov_set(single).indices == std::vector<std::size_t>{0});
}

TEST_CASE("envelope membership") {
  MetricSpec spec(1, {mp({0, 1}), mp({1, 0})});
  MonomialPoint mid;
  mid.w = {Rat(1, 2), Rat(1, 2)};
  mid.c = 0;
  CHECK(envelope_contains(spec, mid));

  MetricSpec single(1, {mp({0, 1})});
  CHECK(envelope_contains(single, mp({0, 1})));
  CHECK(!envelope_contains(single, mp({0, 0})));
}

TEST_CASE("dominance ordering") {
  CHECK(dominance(mp({0, 1}), mp({0, 0})));
  CHECK(dominance(mp({0, 1}), mp({0, 1})));
  CHECK(!dominance(mp({0, 1}), mp({1, 0})));
}

TEST_CASE("separating sections peak off the excluded subset") {
  MetricSpec spec(1, {mp({0, 1}), mp({1, 0})});

  HomPoly f = separating_section(spec, {0});
  REQUIRE(f.term_count() == 1);
  CHECK(f.terms().begin()->first == ExpVec{0, 1});  // x_1
  CHECK(point_val(spec.points()[0], f) > LogVal(Rat(0)));
  CHECK(point_val(spec.points()[1], f) == LogVal(Rat(0)));
  CHECK(spec_val(spec, f) == LogVal(Rat(0)));

  HomPoly g = separating_section(spec, {1});
  REQUIRE(g.term_count() == 1);
  CHECK(g.terms().begin()->first == ExpVec{1, 0});  // x_0

  MetricSpec single(1, {mp({0, 1})});
  CHECK_THROWS_AS(separating_section(single, {0}), ValidationError);
}

TEST_CASE("separating sections on three-point specs") {
  MetricSpec spec(1, {mp({0, 2}), mp({1, 1}, Rat(-1, 2)), mp({2, 0})});
  ShilovSet sh = shilov_set(spec);
  REQUIRE(sh.indices.size() == 3);
  HomPoly f = separating_section(spec, {1});
  CHECK(spec_val(spec, f) == LogVal(Rat(0)));
  CHECK(point_val(spec.points()[1], f) > LogVal(Rat(0)));
  CHECK(point_val(spec.points()[0], f) == LogVal(Rat(0)));
  CHECK(point_val(spec.points()[2], f) == LogVal(Rat(0)));
}

TEST_CASE("localized valuation") {
  MetricSpec spec(1, {mp({0, 1}), mp({1, 0})});
  LocalizedVal lv = localized_val(spec, kX0, kX1);
  CHECK(lv.value == LogVal(Rat(1)));

  // constant f: no localization happens
  HomPoly one(1, 0);
  one.add_term({0, 0}, HahnSeries::one());
  CHECK(localized_val(spec, one, kX1).value == spec_val(spec, kX1));

  CHECK(localized_val(spec, kX0, kX0).value == LogVal(Rat(0)));

  HomPoly bad = kX1 * HahnSeries::monomial(Rat(1), Rat(1));
  CHECK_THROWS_AS(localized_val(spec, bad, kX1), ValidationError);
}

TEST_CASE("metric distances on the interval") {
  MetricDistance d1 = metric_distance(MetricSpec(1, {mp({0, 0})}), MetricSpec(1, {mp({0, 1})}));
  CHECK(d1.d_inf == 1);
  CHECK(d1.d_1 == Rat(1, 2));
  CHECK(d1.d1_exact);

  MetricSpec spec(1, {mp({0, 1}), mp({1, 0})});
  MetricDistance d2 = metric_distance(spec, spec);
  CHECK(d2.d_inf == 0);
  CHECK(d2.d_1 == 0);

  MetricDistance d3 = metric_distance(spec, MetricSpec(1, {mp({0, 1})}));
  CHECK(d3.d_inf == 1);
  CHECK(d3.d_1 == Rat(1, 4));

  CHECK_THROWS_AS(metric_distance(spec, MetricSpec(2, {mp({0, 0, 0})})), ValidationError);
}

TEST_CASE("metric distance on the triangle") {
  MetricSpec a(2, {mp({0, 0, 0})});
  MetricSpec b(2, {mp({0, 0, 1})});
  MetricDistance d = metric_distance(a, b);
  CHECK(d.d_inf == 1);
  // integral of u_2 over the triangle is 1/6, simplex volume 1/2
  CHECK(d.d_1 == Rat(1, 3));
}

TEST_CASE("randomized metric properties") {
  std::ostringstream silent;
  auto r = props::props_metrics(20240811u, silent);
  INFO(silent.str());
  CHECK(r.failed == 0);
}
