#include "shilov/io.hpp"
#include "shilov/config.hpp"
#include "shilov/errors.hpp"
#include "shilov/props.hpp"

#include <doctest.h>

using namespace shilov;

TEST_CASE("hahn text round trip") {
  CHECK(hahn_parse("0").is_exact_zero());
  CHECK(hahn_parse("5").terms()[0].coeff == 5);
  CHECK(hahn_parse("-3/4*t^(1/2)").terms()[0].exponent == Rat(1, 2));
  CHECK(hahn_parse("t") == HahnSeries::monomial(Rat(1), Rat(1)));
  CHECK(hahn_parse("2*t^(1/2) + 3*t^(1/2)") == HahnSeries::monomial(Rat(5), Rat(1, 2)));
  CHECK(hahn_parse("1 - t + t^2").terms().size() == 3);

  HahnSeries tail = hahn_parse("1 + O(t^(3))");
  CHECK(tail.precision() == LogVal(Rat(3)));

  props::Rng rng(99);
  for (int i = 0; i < 50; ++i) {
    HahnSeries h = props::rand_hahn(rng, 4, 4);
    CHECK(hahn_parse(h.str()) == h);
  }

  CHECK_THROWS_AS(hahn_parse("t^"), ValidationError);
  CHECK_THROWS_AS(hahn_parse(""), ValidationError);
}

TEST_CASE("polynomial text round trip") {
  HomPoly p = poly_parse("x0^2 x1 + 2*x1^3", 1);
  CHECK(p.degree() == 3);
  CHECK(p.term_count() == 2);

  HomPoly q = poly_parse("t^(1/2)*x0 + x1", 1);
  CHECK(q.terms().at({1, 0}) == HahnSeries::monomial(Rat(1), Rat(1, 2)));

  HomPoly r = poly_parse("(1 + t)*x0 x1 - x1^2", 1);
  CHECK(r.terms().at({1, 1}).terms().size() == 2);
  CHECK(r.terms().at({0, 2}) == HahnSeries::scalar(Rat(-1)));

  props::Rng rng(7);
  for (int i = 0; i < 40; ++i) {
    int d = 1 + (i % 2);
    HomPoly f = props::rand_poly(rng, d, 1 + (i % 4), 4);
    CHECK(poly_parse(f.str(), d).str() == f.str());
  }

  CHECK_THROWS_AS(poly_parse("x0 + x1^2", 1), ValidationError);  // mixed degree
  CHECK_THROWS_AS(poly_parse("x7", 1), ValidationError);
}

TEST_CASE("toml config parsing") {
  const std::string text = R"(# experiment
[metric]
d = 1
points = [
  { w = ["0", "1"], c = "0" },
  { w = ["1", "0"], c = "1/2" },
]

[sections]
s = "x1"

[params]
nmax = 12
tol = "1e-9"
prec = 64
)";
  ExperimentConfig cfg = config_from_toml(text);
  REQUIRE(cfg.metric.has_value());
  CHECK(cfg.metric->size() == 2);
  CHECK(cfg.metric->points()[1].c == Rat(1, 2));
  CHECK(cfg.sections.at("s") == "x1");
  CHECK(cfg.nmax == 12);
  CHECK(cfg.tol == Rat(1, 1000000000));
  CHECK(cfg.prec == 64);
}

TEST_CASE("toml array-of-tables form") {
  const std::string text = R"([metric]
d = 1

[[metric.points]]
w = [0, 1]
c = 0

[[metric.points]]
w = [1, 0]

[solve]
target = ["3/4", "1/4"]
)";
  ExperimentConfig cfg = config_from_toml(text);
  REQUIRE(cfg.metric.has_value());
  CHECK(cfg.metric->size() == 2);
  REQUIRE(cfg.target.has_value());
  CHECK((*cfg.target)[0] == Rat(3, 4));
}

TEST_CASE("toml errors carry line numbers") {
  try {
    config_from_toml("[metric]\nd = 1\npoints = oops\n");
    FAIL("expected a ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("json config parsing") {
  const std::string text = R"({
    "metric": {"d": 1, "points": [{"w": ["0", "1"], "c": "0"}, {"w": ["1", "0"], "c": "0"}]},
    "sections": {"s": "x1"},
    "params": {"nmax": 6}
  })";
  ExperimentConfig cfg = config_from_json(text);
  REQUIRE(cfg.metric.has_value());
  CHECK(cfg.metric->size() == 2);
  CHECK(cfg.nmax == 6);
}

TEST_CASE("metric export round trips") {
  props::Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    MetricSpec spec = props::rand_spec(rng, 1 + (i % 2), 1 + (i % 4));
    ExperimentConfig from_toml = config_from_toml(metric_to_toml(spec));
    ExperimentConfig from_json = config_from_json(metric_to_json(spec));
    for (const ExperimentConfig* cfg : {&from_toml, &from_json}) {
      REQUIRE(cfg->metric.has_value());
      REQUIRE(cfg->metric->size() == spec.size());
      for (std::size_t k = 0; k < spec.size(); ++k) {
        CHECK(cfg->metric->points()[k].w == spec.points()[k].w);
        CHECK(cfg->metric->points()[k].c == spec.points()[k].c);
      }
    }
  }
}

TEST_CASE("config validation failures") {
  CHECK_THROWS_AS(config_from_toml("[metric]\nd = 1\npoints = []\n"), ValidationError);
  CHECK_THROWS_AS(config_from_toml("[metric]\nd = 0\npoints = [{ w = [\"0\"], c = \"0\" }]\n"),
                  ValidationError);
  CHECK_THROWS_AS(config_from_json("{\"metric\": {\"d\": 1}}"), ValidationError);
  CHECK_THROWS_AS(config_from_json("not json"), ValidationError);
}
