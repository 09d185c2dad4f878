#include <doctest.h>

#include <random>

#include "arclike/contour.hpp"
#include "arclike/error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace arclike;
using fixtures::pl;
using fixtures::q;

namespace {

PLMap unit_identity() { return PLMap::identity({Rational(0), Rational(1)}); }

// Every grid point and every breakpoint classified by the definition agrees
// with the sweep.
void check_against_grid(const PLMap& f, long den) {
  const DepartureReport rep = departures(f);
  std::vector<Rational> xs;
  for (long k = 1; k <= den; ++k) xs.push_back(Rational(k, den));
  for (const auto& b : f.breakpoints()) xs.push_back(b.x);
  for (const auto& blk : rep.blocks) {
    for (const auto& iv : blk.intervals) {
      xs.push_back(iv.lo);
      xs.push_back(iv.hi);
    }
  }
  for (const auto& x : xs) {
    if (x.sign() <= 0) continue;
    const auto expect = oracle::departure_at(f, x);
    const auto got = rep.orientation_at(x);
    INFO("x = " << x);
    REQUIRE(expect.has_value() == got.has_value());
    if (expect) {
      REQUIRE((*expect == oracle::Side::pos) == (*got == Orientation::positive));
    }
  }
}

}  // namespace

TEST_CASE("departures of basic maps") {
  const auto id = departures(unit_identity());
  REQUIRE(id.blocks.size() == 1);
  CHECK(id.blocks[0].orientation == Orientation::positive);
  CHECK(id.blocks[0].intervals == std::vector<DepartureInterval>{{0, 1}});
  CHECK(id.contour_points == std::vector<ContourPoint>{{1, 1, Orientation::positive}});

  const auto tent = departures(fixtures::tent());
  REQUIRE(tent.blocks.size() == 1);
  CHECK(tent.blocks[0].intervals == std::vector<DepartureInterval>{{0, q("1/2")}});
  CHECK(tent.contour_points == std::vector<ContourPoint>{{q("1/2"), 1, Orientation::positive}});
  check_against_grid(fixtures::tent(), 10000);
}

TEST_CASE("departures of f_A") {
  const auto rep = departures(fixtures::f_A());
  REQUIRE(rep.blocks.size() == 3);
  CHECK(rep.blocks[0].orientation == Orientation::positive);
  CHECK(rep.blocks[0].intervals == std::vector<DepartureInterval>{{0, q("1/4")}});
  CHECK(rep.blocks[1].orientation == Orientation::negative);
  // the segment from (1/4,1/2) to (1/2,-1/4) leaves [0,1/2] at 5/12
  CHECK(rep.blocks[1].intervals == std::vector<DepartureInterval>{{q("5/12"), q("1/2")}});
  CHECK(rep.blocks[2].orientation == Orientation::positive);
  CHECK(rep.blocks[2].intervals == std::vector<DepartureInterval>{{q("7/8"), 1}});
  CHECK(rep.contour_points == std::vector<ContourPoint>{{q("1/4"), q("1/2"), Orientation::positive},
                                                         {q("1/2"), q("-1/4"), Orientation::negative},
                                                         {1, q("3/4"), Orientation::positive}});
  CHECK(rep.blocks[1].record_before == 0);
  CHECK(rep.blocks[1].opposite_extreme == q("1/2"));
  CHECK(rep.blocks[2].record_before == q("1/2"));
  check_against_grid(fixtures::f_A(), 10000);
}

TEST_CASE("ties with an earlier record are not departures") {
  const PLMap f = pl({{"0", "0"}, {"1/4", "1/2"}, {"1/2", "0"}, {"3/4", "1/2"}, {"1", "1"}});
  const auto rep = departures(f);
  CHECK_FALSE(rep.is_departure(q("3/4")));
  CHECK(rep.is_departure(q("7/8")));
  CHECK(rep.blocks[0].intervals ==
        std::vector<DepartureInterval>{{0, q("1/4")}, {q("3/4"), 1}});
  check_against_grid(f, 400);
}

TEST_CASE("hypothesis errors") {
  CHECK_THROWS_AS(departures(PLMap::identity()), HypothesisError);
  CHECK_THROWS_AS(departures(pl({{"0", "0"}, {"1", "0"}})), HypothesisError);
  CHECK_THROWS_AS(departures(pl({{"0", "1/2"}, {"1", "0"}})), HypothesisError);
}

TEST_CASE("contour factor") {
  CHECK(contour_factor(unit_identity()) == unit_identity());
  CHECK(contour_factor(fixtures::tent()) == unit_identity());
  CHECK(contour_factor(fixtures::f_A()) ==
        pl({{"0", "0"}, {"1/3", "1/2"}, {"2/3", "-1/4"}, {"1", "3/4"}}));
}

TEST_CASE("meandering factor") {
  CHECK(meandering_factor(unit_identity()) == unit_identity());
  CHECK(meandering_factor(fixtures::tent()) == fixtures::tent().with_codomain({0, 1}));
  const PLMap s = meandering_factor(fixtures::f_A());
  CHECK(s(q("1/8")) == q("1/6"));
  CHECK(contour_factor(fixtures::f_A())(q("1/6")) == q("1/4"));
  CHECK(compose(contour_factor(fixtures::f_A()), s) == fixtures::f_A());
}

TEST_CASE("random one-sided maps: sweep, recomposition, idempotence") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const PLMap f = oracle::random_one_sided(rng, 10);
    check_against_grid(f, 200);
    const PLMap t = contour_factor(f);
    const PLMap s = meandering_factor(f);
    REQUIRE(compose(t, s) == f);
    REQUIRE(s(Rational(0)) == 0);
    REQUIRE(s.range() == Interval{0, 1});
    REQUIRE(contour_factor(t) == t);
    const auto ct = contour_points(t);
    const auto cf = contour_points(f);
    REQUIRE(ct.size() == cf.size());
    for (std::size_t i = 0; i < ct.size(); ++i) {
      REQUIRE(ct[i].x == Rational(static_cast<long>(i + 1), static_cast<long>(ct.size())));
      REQUIRE(ct[i].value == cf[i].value);
    }
  }
}

TEST_CASE("contour equivalence") {
  CHECK(contour_equivalent(fixtures::tent(), unit_identity()).equal);
  CHECK(contour_equivalent(fixtures::f_A(), fixtures::f_A()).equal);
  const auto r = contour_equivalent(fixtures::f_A(), unit_identity());
  CHECK_FALSE(r.equal);
  REQUIRE(r.witness);
  CHECK(r.witness->map == 0);
  CHECK(r.witness->x == q("1/2"));
  CHECK(r.witness->orientation == Orientation::negative);
  CHECK(r.witness->image.closed_end == q("1/2"));
  CHECK(r.witness->image.open_end == q("-1/4"));
}

TEST_CASE("contour equivalence agrees with the level matcher") {
  std::mt19937 rng(23);
  int equal_pairs = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const PLMap f = oracle::random_one_sided(rng, 8);
    // half the pairs share a contour factor by construction
    const PLMap g = trial % 2 ? compose(f, oracle::random_onto_unit(rng, 4))
                              : oracle::random_one_sided(rng, 8);
    const auto r = contour_equivalent(f, g);
    REQUIRE(r.equal == oracle::departures_match(f, g));
    REQUIRE(r.equal == (contour_factor(f) == contour_factor(g)));
    if (r.equal) {
      ++equal_pairs;
      continue;
    }
    // the witness really is unmatched
    REQUIRE(r.witness);
    const PLMap& w = r.witness->map == 0 ? f : g;
    const PLMap& other = r.witness->map == 0 ? g : f;
    REQUIRE(oracle::departure_at(w, r.witness->x).has_value());
    const Rational y = r.witness->image.open_end;
    const auto hit = oracle::first_hit(other, y);
    if (hit) {
      const Rational e = y.sign() > 0 ? other.min_on(0, *hit) : other.max_on(0, *hit);
      REQUIRE(e != r.witness->image.closed_end);
    }
  }
  CHECK(equal_pairs >= 150);
}

TEST_CASE("precomposition with an onto map keeps the contour factor") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const PLMap tau = oracle::random_one_sided(rng, 6);
    const PLMap sigma = oracle::random_onto_unit(rng, 5);
    REQUIRE(contour_factor(compose(tau, sigma)) == contour_factor(tau));
  }
}

TEST_CASE("postcomposition respects equal contour factors") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const PLMap f1 = oracle::random_one_sided(rng, 6);
    const PLMap f2 = compose(f1, oracle::random_onto_unit(rng, 5));
    PLMap g = oracle::random_map(rng, 6);
    if (!(g.restrict(0, 1).range().lo != g.restrict(0, 1).range().hi &&
          g.restrict(-1, 0).range().lo != g.restrict(-1, 0).range().hi)) continue;
    const PLMap gf1 = compose(g, f1);
    const PLMap gf2 = compose(g, f2);
    if (gf1.range().lo == gf1.range().hi) continue;
    REQUIRE(contour_factor(gf1) == contour_factor(gf2));
  }
}
