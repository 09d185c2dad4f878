#include <doctest.h>

#include <random>

#include "arclike/error.hpp"
#include "arclike/map_io.hpp"
#include "arclike/plmap.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace arclike;
using fixtures::pl;
using fixtures::q;

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("2/4") == Rational(1, 2));
  CHECK(Rational::parse("-3/6").str() == "-1/2");
  CHECK(Rational::parse("7").str() == "7");
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  CHECK(Rational::from_double(0.375) == Rational(3, 8));
}

TEST_CASE("evaluate") {
  CHECK(PLMap::identity()(Rational(1, 3)) == Rational(1, 3));
  const PLMap f = fixtures::f_A();
  // two-point line formula through (1/4,1/2) and (0,0)
  CHECK(f(q("1/8")) == oracle::line_through(0, 0, q("1/4"), q("1/2"), q("1/8")));
  CHECK(f(q("1/8")) == q("1/4"));
  CHECK(f(q("3/8")) == q("1/8"));
  CHECK(f(q("5/12")) == 0);
  CHECK(oracle::bisect_zero(f, q("1/4"), q("1/2"), 60).to_double() == doctest::Approx(5.0 / 12));
  CHECK_THROWS_AS(f(q("-1/8")), DomainError);
  CHECK_THROWS_AS(f(q("9/8")), DomainError);
}

TEST_CASE("construction rejects bad breakpoint lists") {
  CHECK_THROWS_AS(pl({{"0", "0"}}), DomainError);
  CHECK_THROWS_AS(pl({{"0", "0"}, {"0", "1"}}), DomainError);
  CHECK_THROWS_AS(pl({{"0", "0"}, {"1", "2"}}), DomainError);
}

TEST_CASE("normalization drops collinear points without changing values") {
  const PLMap raw = pl({{"-1", "-1"}, {"-1/2", "-1/2"}, {"0", "0"}, {"1", "1"}});
  CHECK(raw.breakpoints().size() == 2);
  CHECK(raw == PLMap::identity());
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const PLMap f = oracle::random_map(rng, 8);
    std::vector<Breakpoint> dense;
    for (int k = 0; k <= 40; ++k) {
      const Rational x = Rational(-1) + Rational(k, 20);
      dense.push_back({x, f(x)});
    }
    for (const auto& b : f.breakpoints()) {
      auto it = std::lower_bound(dense.begin(), dense.end(), b.x,
                                 [](const Breakpoint& p, const Rational& v) { return p.x < v; });
      if (it == dense.end() || it->x != b.x) dense.insert(it, b);
    }
    const PLMap g(dense);
    CHECK(g == f);
    for (int k = 0; k <= 400; ++k) {
      const Rational x = Rational(-1) + Rational(k, 200);
      REQUIRE(f(x) == oracle::interpolate_raw(dense, x));
    }
  }
}

TEST_CASE("compose") {
  const PLMap id = PLMap::identity();
  const PLMap g = fixtures::f_B();
  CHECK(compose(id, g) == g);
  CHECK(compose(g, id) == g);
  CHECK(compose(PLMap::negation(), PLMap::negation()) == id);

  const PLMap right = glue(pl({{"-1", "0"}, {"0", "0"}}), fixtures::f_A());
  const PLMap tent = fixtures::tent();
  const PLMap h = compose(right, tent);
  CHECK(h(q("1/4")) == q("-1/4"));
  for (int k = 0; k <= 1000; ++k) {
    const Rational x(k, 1000);
    REQUIRE(h(x) == right(tent(x)));
  }
  CHECK_THROWS_AS(compose(fixtures::f_A(), PLMap::identity()), CompositionError);
}

TEST_CASE("compose is associative and pointwise exact") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const PLMap f = oracle::random_map(rng, 6);
    const PLMap g = oracle::random_map(rng, 6);
    const PLMap h = oracle::random_map(rng, 6);
    REQUIRE(compose(f, compose(g, h)) == compose(compose(f, g), h));
    const PLMap fg = compose(f, g);
    for (int k = 0; k <= 200; ++k) {
      const Rational x = Rational(-1) + Rational(k, 100);
      REQUIRE(fg(x) == f(g(x)));
    }
    const std::vector<PLMap> chain{f, g, h};
    REQUIRE(compose_all(chain) == compose(f, compose(g, h)));
  }
}

TEST_CASE("recenter") {
  const PLMap id = PLMap::identity();
  CHECK(recenter(id, 0, 0) == id);
  CHECK(recenter(id, Rational(1, 2), Rational(1, 2)) == id);
  const PLMap v = pl({{"-1", "1"}, {"0", "0"}, {"1", "1"}});
  CHECK(recenter(v, 0, 0) == v);
  CHECK_THROWS_AS(recenter(id, Rational(1, 2), Rational(1, 3)), InconsistentCenterError);
  CHECK_THROWS_AS(recenter(id, 1, 1), BoundaryError);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const PLMap f = oracle::random_map(rng, 7);
    const Rational x = Rational(static_cast<long>(rng() % 19) - 9, 10);
    const Rational p = f(x);
    if (p == 1 || p == -1) continue;
    const PLMap g = recenter(f, p, x);
    REQUIRE(validate(g).centered);
  }
}

TEST_CASE("validate flags") {
  const MapFlags id = validate(PLMap::identity());
  CHECK(id == MapFlags{true, true, true, true});
  CHECK_FALSE(validate(pl({{"-1", "-1"}, {"0", "0"}, {"1", "0"}})).half_nonconstant);
  const MapFlags b = validate(fixtures::f_B());
  CHECK(b.centered);
  CHECK(b.half_nonconstant);
  CHECK_FALSE(b.sign_preserving);
  CHECK_THROWS_AS(require_standing_hypothesis(pl({{"-1", "-1"}, {"0", "0"}, {"1", "0"}}), "t"),
                  HypothesisError);
}

TEST_CASE("json round trip") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const PLMap f = oracle::random_map(rng, 9);
    const MapFile file{f, "m", Provenance::exact, ""};
    const MapFile back = map_file_from_json(nlohmann::json::parse(map_file_to_json(file).dump()));
    REQUIRE(back.map == f);
  }
  auto parse = [](const char* text) { return map_from_json(nlohmann::json::parse(text)); };
  CHECK(parse(R"({"domain":["-1","1"],"breakpoints":[["-1","-1"],["1","1"]]})") == PLMap::identity());
  CHECK_THROWS_AS(parse(R"({"domain":["-1","1"],"breakpoints":[["1","1"],["-1","-1"]]})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"domain":["-1","1"],"breakpoints":[["-1","1"],["-1","0"],["1","1"]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse(R"({"domain":["0","1"],"breakpoints":[["-1","-1"],["1","1"]]})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"domain":["-1","1"],"breakpoints":[["-1","x"],["1","1"]]})"), ParseError);
}
