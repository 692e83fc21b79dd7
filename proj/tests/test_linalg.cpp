#include "shilov/linalg.hpp"
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

HahnSeries tpow(int e) { return HahnSeries::monomial(Rat(1), Rat(e)); }

}  // namespace

TEST_CASE("diag_norm weights are envelope minima") {
  MetricSpec spec(1, {mp({0, 1}), mp({1, 0})});
  DiagNorm n2 = diag_norm(spec, 2);
  REQUIRE(n2.weights.size() == 3);
  CHECK(n2.weights[0] == 0);  // x_0^2
  CHECK(n2.weights[1] == 1);  // x_0 x_1
  CHECK(n2.weights[2] == 0);  // x_1^2

  MetricSpec flat(1, {mp({0, 0})});
  for (const Rat& w : diag_norm(flat, 5).weights) CHECK(w == 0);

  MetricSpec shifted(1, {mp({0, 1}, Rat(1))});
  CHECK(diag_norm(shifted, 3).weights[0] == 3);  // alpha = (3,0)
}

TEST_CASE("operator norm valuation") {
  ValMatrix id = ValMatrix::zero(2, 2, DiagNorm::uniform(0, 2), DiagNorm::uniform(0, 2));
  id.a[0][0] = HahnSeries::one();
  id.a[1][1] = HahnSeries::one();
  CHECK(op_norm_val(id) == LogVal(Rat(0)));

  ValMatrix one = ValMatrix::zero(1, 1, DiagNorm::uniform(0, 1), DiagNorm::uniform(0, 1));
  one.a[0][0] = tpow(2);
  CHECK(op_norm_val(one) == LogVal(Rat(2)));

  MetricSpec spec(1, {mp({0, 1}), mp({1, 0})});
  HomPoly x1 = HomPoly::monomial(1, {0, 1});
  CHECK(op_norm_val(val_matrix(mult_operator(x1, 1), spec)) == LogVal(Rat(0)));

  CHECK(!op_norm_val(ValMatrix::zero(2, 3, DiagNorm::uniform(0, 3), DiagNorm::uniform(0, 2)))
             .is_finite());
}

TEST_CASE("na_svd on small matrices") {
  ValMatrix d = ValMatrix::zero(3, 3, DiagNorm::uniform(0, 3), DiagNorm::uniform(0, 3));
  d.a[0][0] = tpow(0);
  d.a[1][1] = tpow(1);
  d.a[2][2] = tpow(3);
  SingularProfile p = na_svd(d);
  REQUIRE(p.rank() == 3);
  CHECK(p.sigma[0] == LogVal(Rat(0)));
  CHECK(p.sigma[1] == LogVal(Rat(1)));
  CHECK(p.sigma[2] == LogVal(Rat(3)));
  CHECK(p.all_certified());

  // [[1,1],[1,1+t]] has determinant t
  ValMatrix m = ValMatrix::zero(2, 2, DiagNorm::uniform(0, 2), DiagNorm::uniform(0, 2));
  m.a[0][0] = HahnSeries::one();
  m.a[0][1] = HahnSeries::one();
  m.a[1][0] = HahnSeries::one();
  m.a[1][1] = HahnSeries::one() + tpow(1);
  SingularProfile q = na_svd(m);
  REQUIRE(q.rank() == 2);
  CHECK(q.sigma[0] == LogVal(Rat(0)));
  CHECK(q.sigma[1] == LogVal(Rat(1)));

  CHECK(q.sigma[0] == op_norm_val(m));
}

TEST_CASE("wedge_top_val identities") {
  // one Gauss point: chi(n) copies of the section's valuation
  MetricSpec single(1, {mp({0, 2}, Rat(1, 2))});
  HomPoly s = HomPoly::monomial(1, {1, 0}, HahnSeries::monomial(Rat(3), Rat(1, 3))) +
              HomPoly::monomial(1, {0, 1});
  for (int n = 0; n <= 5; ++n) {
    ValMatrix m = val_matrix(mult_operator(s, n), single);
    Rat vs = point_val(single.points()[0], s).value();
    CHECK(wedge_top_val(m) == LogVal(Rat(hilbert_chi(1, n)) * vs));
  }

  MetricSpec spec(1, {mp({0, 1}), mp({1, 0})});
  HomPoly x1 = HomPoly::monomial(1, {0, 1});
  CHECK(wedge_top_val(val_matrix(mult_operator(x1, 2), spec)) == LogVal(Rat(1)));
  CHECK(wedge_top_val(val_matrix(mult_operator(x1, 4), spec)) == LogVal(Rat(2)));

  // rank-deficient map is rejected
  ValMatrix z = ValMatrix::zero(2, 2, DiagNorm::uniform(0, 2), DiagNorm::uniform(0, 2));
  z.a[0][0] = HahnSeries::one();
  CHECK_THROWS_AS(wedge_top_val(z), ComputeError);
}

TEST_CASE("minor oracle basics") {
  props::Rng rng(7);
  for (int i = 0; i < 10; ++i) {
    ValMatrix m = props::rand_matrix(rng, 3, 3, 2);
    CHECK(minor_oracle(m, 1) == op_norm_val(m));
  }

  // full square minor: val(det) plus the weight correction
  ValMatrix m = ValMatrix::zero(2, 2, DiagNorm{0, {Rat(1), Rat(0)}}, DiagNorm{0, {Rat(0), Rat(2)}});
  m.a[0][0] = HahnSeries::one();
  m.a[1][1] = tpow(1);
  // det = t, tau sum = 2, rho sum = 1
  CHECK(minor_oracle(m, 2) == LogVal(Rat(2)));

  // random 4x3 at full rank agrees with the elimination profile
  for (int i = 0; i < 10; ++i) {
    ValMatrix r = props::rand_matrix(rng, 4, 3, 2);
    SingularProfile p = na_svd(r);
    if (p.rank() < 3) continue;
    LogVal acc = Rat(0);
    for (const auto& s : p.sigma) acc += s;
    CHECK(acc == minor_oracle(r, 3));
  }

  CHECK_THROWS_AS(minor_oracle(ValMatrix::zero(20, 20, DiagNorm::uniform(0, 20),
                                               DiagNorm::uniform(0, 20)),
                               2),
                  ValidationError);
}

TEST_CASE("precision certification under truncated pivots") {
  // hidden content above every visible pivot is harmless
  ValMatrix ok = ValMatrix::zero(2, 2, DiagNorm::uniform(0, 2), DiagNorm::uniform(0, 2));
  ok.a[0][0] = HahnSeries::tail(LogVal(Rat(5)));
  ok.a[0][1] = HahnSeries::one();
  ok.a[1][0] = HahnSeries::one();
  ok.a[1][1] = tpow(6);
  SingularProfile p = na_svd(ok);
  CHECK(p.rank() == 2);
  CHECK(p.all_certified());

  // an entry known only as O(t) could hide a better pivot than val 3:
  // no cap doubling can reveal it, so the elimination must give up
  ValMatrix blind = ValMatrix::zero(2, 2, DiagNorm::uniform(0, 2), DiagNorm::uniform(0, 2));
  blind.a[0][0] = HahnSeries::tail(LogVal(Rat(1)));
  blind.a[0][1] = tpow(3);
  blind.a[1][0] = tpow(3);
  CHECK_THROWS_AS(na_svd(blind), ComputeError);
}

TEST_CASE("randomized linear algebra properties") {
  std::ostringstream silent;
  auto r = props::props_ultralinalg(20240811u, silent);
  INFO(silent.str());
  CHECK(r.failed == 0);
}
