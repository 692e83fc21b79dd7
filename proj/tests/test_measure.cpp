#include "shilov/measure.hpp"
#include "shilov/errors.hpp"
#include "shilov/harness.hpp"
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

const MetricSpec kStd(1, {mp({0, 1}), mp({1, 0})});
const HomPoly kX1 = HomPoly::monomial(1, {0, 1});

}  // namespace

TEST_CASE("chi_a_count with tie convention") {
  CHECK(chi_a_count(kStd, 0, 4) == 3);  // j <= n-j
  CHECK(chi_a_count(kStd, 1, 4) == 3);
  CHECK(chi_a_count(kStd, 0, 4) + chi_a_count(kStd, 1, 4) == hilbert_chi(1, 4) + 1);

  MetricSpec single(1, {mp({2, 1}, Rat(1, 2))});
  for (int n = 0; n <= 6; ++n) CHECK(chi_a_count(single, 0, n) == hilbert_chi(1, n));

  CHECK_THROWS_AS(chi_a_count(kStd, 5, 3), ValidationError);
}

TEST_CASE("lambda_exact volumes") {
  CHECK(lambda_exact(kStd, 0) == Rat(1, 2));
  CHECK(lambda_exact(kStd, 1) == Rat(1, 2));

  MetricSpec single(1, {mp({0, 1})});
  CHECK(lambda_exact(single, 0) == 1);

  MetricSpec dom(1, {mp({0, 1}), mp({1, 0}), mp({0, 0})});
  CHECK(lambda_exact(dom, 0) == 0);
  CHECK(lambda_exact(dom, 1) == 0);
  CHECK(lambda_exact(dom, 2) == 1);

  MetricSpec p2(2, {mp({0, 0, 0})});
  CHECK(lambda_exact(p2, 0) == 1);
  CHECK_THROWS_AS(lambda_exact(MetricSpec(3, {mp({0, 0, 0, 0})}), 0), ValidationError);
}

TEST_CASE("eq_measure assembles the coefficients") {
  EqMeasure mu = eq_measure(kStd);
  CHECK(mu.lambda == std::vector<Rat>{Rat(1, 2), Rat(1, 2)});
  CHECK(mu.method == EqMeasure::Method::Volume);
  CHECK(mu.total() == 1);

  MetricSpec dom(1, {mp({0, 1}), mp({1, 0}), mp({0, 0})});
  EqMeasure md = eq_measure(dom);
  CHECK(md.lambda == std::vector<Rat>{Rat(0), Rat(0), Rat(1)});
  CHECK(md.shilov == std::vector<std::size_t>{2});

  EqMeasure ms = eq_measure(MetricSpec(1, {mp({0, 1})}));
  CHECK(ms.lambda == std::vector<Rat>{Rat(1)});
}

TEST_CASE("eq_measure counting path for d >= 3") {
  MetricSpec spec(3, {mp({0, 1, 0, 1}), mp({1, 0, 1, 0})});
  EqMeasureOptions opts;
  opts.counting_level = 24;
  EqMeasure mu = eq_measure(spec, opts);
  CHECK(mu.method == EqMeasure::Method::Counting);
  REQUIRE(mu.err_bound.has_value());
  // symmetric pair: both coefficients near 1/2 within the reported bar
  for (std::size_t a = 0; a < 2; ++a) {
    Rat gap = rat_abs(mu.lambda[a] - Rat(1, 2));
    CHECK(gap <= *mu.err_bound);
  }
}

TEST_CASE("pair_measure in valuation units") {
  EqMeasure mu = eq_measure(kStd);
  HomPoly s = HomPoly::monomial(1, {1, 0}) + kX1;
  CHECK(pair_measure(mu, kStd, s) == 0);  // spec_val 0 at both Shilov points
  CHECK(pair_measure(mu, kStd, kX1) == Rat(-1, 2));

  MetricSpec flat(1, {mp({0, 0})});
  HomPoly ts = HomPoly::monomial(1, {1, 0}, HahnSeries::monomial(Rat(1), Rat(1)));
  CHECK(pair_measure(eq_measure(flat), flat, ts) == -1);

  CHECK_THROWS_AS(pair_measure(mu, kStd, HomPoly(1, 2)), ValidationError);
}

TEST_CASE("theorem harness on the closed-form example") {
  ConvergenceReport rep = theorem_harness(kStd, kX1, 20);
  CHECK(rep.rhs == Rat(-1, 2));
  REQUIRE(rep.rows.size() == 20);
  const auto& row4 = rep.rows[3];
  CHECK(row4.n == 4);
  CHECK(row4.chi == 5);
  CHECK(row4.lhs == Rat(-2, 5));
  CHECK(row4.err == Rat(1, 10));
  for (const auto& row : rep.rows) {
    CHECK(rat_abs(row.n_err) <= 1);
    // closed form: err_n = 1/2 - ceil(n/2)/(n+1)
    Rat expect = Rat(1, 2) - Rat((row.n + 1) / 2, row.n + 1);
    CHECK(row.err == expect);
  }
}

TEST_CASE("theorem harness is exact on one-point specs") {
  MetricSpec single(1, {mp({0, 3}, Rat(-1, 2))});
  HomPoly s = HomPoly::monomial(1, {1, 0}, HahnSeries::monomial(Rat(2), Rat(1, 2))) + kX1;
  ConvergenceReport rep = theorem_harness(single, s, 10);
  for (const auto& row : rep.rows) CHECK(row.err == 0);
  CHECK(rep.fitted_c == 0);
}

TEST_CASE("csv serialization is stable") {
  ConvergenceReport rep = theorem_harness(kStd, kX1, 2);
  CHECK(report_csv(rep) ==
        "n,chi,lhs,rhs,err,n_err\n"
        "1,2,-1/2,-1/2,0,0\n"
        "2,3,-1/3,-1/2,1/6,1/3\n");
}

TEST_CASE("measure distance check on the spec pairs") {
  MeasureDistanceCheck same = measure_distance_check(kStd, kStd);
  CHECK(same.d_mono == 0);
  CHECK(same.bound == 0);
  CHECK(same.holds);

  MetricSpec shifted(1, {mp({0, 1}), mp({1, 0}, Rat(1, 10))});
  MeasureDistanceCheck c2 = measure_distance_check(kStd, shifted);
  CHECK(c2.d_mono > 0);
  CHECK(c2.bound > 0);
  CHECK(c2.holds);
  CHECK(c2.d_mono == c2.bound);  // this pair is tight

  MeasureDistanceCheck c3 =
      measure_distance_check(MetricSpec(1, {mp({0, 0})}), MetricSpec(1, {mp({0, 1})}));
  CHECK(c3.d_mono == 1);
  CHECK(c3.bound == 1);
  CHECK(c3.holds);
}

TEST_CASE("randomized equidistribution properties") {
  std::ostringstream silent;
  auto r = props::props_equidistribution(20240811u, silent);
  INFO(silent.str());
  CHECK(r.failed == 0);
}
