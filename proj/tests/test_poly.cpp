#include "shilov/poly.hpp"
#include "shilov/props.hpp"

#include <doctest.h>

using namespace shilov;

TEST_CASE("monomials enumerate in graded-lex order") {
  auto m = monomials(1, 2);
  REQUIRE(m.size() == 3);
  CHECK(m[0] == ExpVec{2, 0});
  CHECK(m[1] == ExpVec{1, 1});
  CHECK(m[2] == ExpVec{0, 2});

  CHECK(monomials(2, 1).size() == 3);
  CHECK(monomials(2, 10).size() == 66);
  CHECK(hilbert_chi(2, 10) == 66);
  CHECK(monomials(1, 0).size() == 1);
}

TEST_CASE("basis index lookup is the enumeration inverse") {
  MonomialBasis b(2, 4);
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(b.index_of(b.at(i)) == i);
  CHECK_THROWS(b.index_of(ExpVec{5, 0, 0}));
}

TEST_CASE("polynomial products") {
  HomPoly x0 = HomPoly::monomial(1, {1, 0});
  HomPoly x1 = HomPoly::monomial(1, {0, 1});
  HomPoly p = x0 * x1;
  REQUIRE(p.term_count() == 1);
  CHECK(p.terms().begin()->first == ExpVec{1, 1});

  HomPoly s = x0 + x1;
  HomPoly sq = s * s;
  REQUIRE(sq.term_count() == 3);
  CHECK(sq.terms().at({1, 1}) == HahnSeries::scalar(Rat(2)));

  HomPoly tx0 = HomPoly::monomial(1, {1, 0}, HahnSeries::monomial(Rat(1), Rat(1, 2)));
  HomPoly tsq = tx0 * tx0;
  REQUIRE(tsq.term_count() == 1);
  CHECK(tsq.terms().at({2, 0}) == HahnSeries::monomial(Rat(1), Rat(1)));
}

TEST_CASE("mult_operator columns expand s * x^alpha") {
  // s = x_0 on P^1 at level 1: a 3x2 sub-permutation matrix
  HomPoly x0 = HomPoly::monomial(1, {1, 0});
  MultOpMatrix m = mult_operator(x0, 1);
  CHECK(m.src.size() == 2);
  CHECK(m.tgt.size() == 3);
  REQUIRE(m.columns[0].size() == 1);
  CHECK(m.tgt.at(m.columns[0][0].first) == ExpVec{2, 0});
  REQUIRE(m.columns[1].size() == 1);
  CHECK(m.tgt.at(m.columns[1][0].first) == ExpVec{1, 1});

  HomPoly s = x0 + HomPoly::monomial(1, {0, 1});
  MultOpMatrix m2 = mult_operator(s, 1);
  REQUIRE(m2.columns[0].size() == 2);
  CHECK(m2.tgt.at(m2.columns[0][0].first) == ExpVec{2, 0});
  CHECK(m2.tgt.at(m2.columns[0][1].first) == ExpVec{1, 1});

  // s = t^(1/2) x_0 + x_1 at level 2: 4x3, column valuations {1/2, 0}
  HomPoly tw = HomPoly::monomial(1, {1, 0}, HahnSeries::monomial(Rat(1), Rat(1, 2))) +
               HomPoly::monomial(1, {0, 1});
  MultOpMatrix m3 = mult_operator(tw, 2);
  CHECK(m3.tgt.size() == 4);
  CHECK(m3.src.size() == 3);
  for (const auto& col : m3.columns) {
    REQUIRE(col.size() == 2);
    CHECK(col[0].second.valuation() == LogVal(Rat(1, 2)));
    CHECK(col[1].second.valuation() == LogVal(Rat(0)));
  }

  CHECK_THROWS(mult_operator(HomPoly(1, 1), 1));
}

TEST_CASE("randomized algebra properties") {
  std::ostringstream silent;
  auto r = props::props_graded_algebra(20240811u, silent);
  INFO(silent.str());
  CHECK(r.failed == 0);
}
