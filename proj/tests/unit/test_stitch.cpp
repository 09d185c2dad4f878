#include <doctest.h>

#include <random>

#include "arclike/error.hpp"
#include "arclike/stitch.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace arclike;
using fixtures::pl;
using fixtures::q;

TEST_CASE("contour stability") {
  CHECK(contour_stable(PLMap::identity(), PLMap::identity()));
  CHECK_FALSE(contour_stable(PLMap::identity(), fixtures::f_B()));
  CHECK(contour_stable(fixtures::f_B(), PLMap::identity()));
}

TEST_CASE("stitched factor of trivial inputs") {
  const PLMap id = PLMap::identity();
  const StitchResult r = stitched_factor(id, id);
  CHECK(r.s_tilde == id);
  CHECK(r.recomposes);
  CHECK(verify_stitch(r, id).ok);

  std::mt19937 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const PLMap g = oracle::random_sign_preserving_onto(rng, 4);
    if (!no_contour_twins(g).ok) continue;
    const StitchResult rg = stitched_factor(id, g);
    CHECK(rg.s12 == g);
    CHECK(rg.s_tilde == g);
    CHECK(rg.recomposes);
  }
}

TEST_CASE("stitched factor preconditions") {
  // f_C has 0 as a local minimum
  CHECK_THROWS_AS(stitched_factor(fixtures::f_C(), PLMap::identity()), PreconditionError);
  CHECK_NOTHROW(stitched_factor(fixtures::f_C(), PLMap::identity(), StitchVariant::naive));
  CHECK_THROWS_AS(stitched_factor(PLMap::identity(), fixtures::f_B()), PreconditionError);
  CHECK(parse_stitch_variant("swapped") == StitchVariant::swapped);
  CHECK_THROWS_AS(parse_stitch_variant("other"), ParseError);
}

TEST_CASE("stitched factor pieces") {
  std::mt19937 rng(59);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 40; ++trial) {
    const PLMap f1 = oracle::random_map(rng, 6);
    const PLMap f2 = compose(oracle::random_sign_preserving_onto(rng, 3), oracle::random_map(rng, 4));
    if (!validate(f2).half_nonconstant) continue;
    if (!validate(compose(f1, f2)).half_nonconstant || !contour_stable(f1, f2)) continue;
    for (auto variant : {StitchVariant::naive, StitchVariant::swapped}) {
      const StitchResult r = stitched_factor(f1, f2, variant);
      REQUIRE(r.recomposes);
      const PLMap s1f2 = compose(r.s1, f2);
      const PLMap& left = variant == StitchVariant::naive ? r.s12 : s1f2;
      const PLMap& right = variant == StitchVariant::naive ? s1f2 : r.s12;
      REQUIRE(r.s_tilde.restrict(-1, 0) == left.restrict(-1, 0));
      REQUIRE(r.s_tilde.restrict(0, 1) == right.restrict(0, 1));
      REQUIRE(r.s_tilde(Rational(0)) == 0);
    }
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("reindexing") {
  const std::vector<PLMap> ids(4, PLMap::identity());
  const SystemReindex r = reindex_system(ids);
  REQUIRE(r.derived.size() == 1);
  CHECK(r.derived[0] == PLMap::identity());

  const std::vector<PLMap> ds(4, fixtures::f_D());
  // f_D's left half starts by going down, its right half by going up, so
  // twins are absent; stability decides.
  if (contour_stable(fixtures::f_D(), fixtures::f_D())) {
    CHECK_NOTHROW(reindex_system(ds));
  } else {
    try {
      reindex_system(ds);
      FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
      CHECK(e.index() == std::optional<std::size_t>(1));
    }
  }

  const std::vector<PLMap> mixed{PLMap::identity(), fixtures::f_B(), PLMap::identity()};
  try {
    reindex_system(mixed);
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(e.index() == std::optional<std::size_t>(1));
  }
  CHECK_THROWS_AS(reindex_system(std::vector<PLMap>(2, PLMap::identity())), PreconditionError);
}
