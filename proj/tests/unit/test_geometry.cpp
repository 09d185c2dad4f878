#include <doctest.h>

#include <random>
#include <vector>

#include "arclike/geometry.hpp"
#include "arclike/rational.hpp"

using namespace arclike;

namespace {

int exact_orient(Point a, Point b, Point c) {
  auto r = [](double v) { return Rational::from_double(v); };
  const Rational e = (r(b.x) - r(a.x)) * (r(c.y) - r(a.y)) - (r(b.y) - r(a.y)) * (r(c.x) - r(a.x));
  return e.sign();
}

// every non-adjacent pair, plus adjacent pairs that overlap beyond the shared vertex
bool brute_simple(const std::vector<Point>& p) {
  const std::size_t n = p.size() - 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] == p[i + 1]) return false;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (exact_orient(p[i], p[i + 1], p[i + 2]) == 0) {
      const Point u = p[i] - p[i + 1], v = p[i + 2] - p[i + 1];
      if (u.x * v.x + u.y * v.y > 0) return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (segments_intersect(p[i], p[i + 1], p[j], p[j + 1])) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("orientation is exact near degeneracy") {
  CHECK(orient({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orient({0, 0}, {1, 0}, {0, -1}) == -1);
  CHECK(orient({0, 0}, {1, 1}, {2, 2}) == 0);
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int k = 0; k < 2000; ++k) {
    const Point a{u(rng), u(rng)}, b{u(rng), u(rng)};
    const double w = u(rng);
    // c on the line through a and b up to rounding
    const Point c{a.x + w * (b.x - a.x), a.y + w * (b.y - a.y)};
    REQUIRE(orient(a, b, c) == exact_orient(a, b, c));
  }
}

TEST_CASE("segment intersection cases") {
  CHECK(segments_intersect({0, 0}, {1, 1}, {0, 1}, {1, 0}));
  CHECK(segments_intersect({0, 0}, {1, 0}, {1, 0}, {2, 5}));      // shared endpoint
  CHECK(segments_intersect({0, 0}, {2, 0}, {1, 0}, {1, 3}));      // T junction
  CHECK(segments_intersect({0, 0}, {2, 0}, {1, 0}, {3, 0}));      // collinear overlap
  CHECK_FALSE(segments_intersect({0, 0}, {1, 0}, {2, 0}, {3, 0}));
  CHECK_FALSE(segments_intersect({0, 0}, {1, 1}, {0, 1}, {0.4, 0.6}));
}

TEST_CASE("self intersection fixtures") {
  CHECK(is_simple(std::vector<Point>{{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  CHECK(is_simple(std::vector<Point>{{0, 0}, {1, 1}, {2, 0}, {3, 1}, {4, 0}}));
  const std::vector<Point> bowtie{{0, 0}, {1, 1}, {1, 0}, {0, 1}};
  const auto hit = find_self_intersection(bowtie);
  REQUIRE(hit.has_value());
  CHECK(hit->first == 0);
  CHECK(hit->second == 2);
  CHECK_FALSE(is_simple(std::vector<Point>{{0, 0}, {1, 0}, {1, 0}, {2, 0}}));
  CHECK_FALSE(is_simple(std::vector<Point>{{0, 0}, {2, 0}, {1, 0}}));  // folds back on itself
  CHECK_FALSE(is_simple(std::vector<Point>{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 0}}));
  // closing on the first vertex
  CHECK_FALSE(is_simple(std::vector<Point>{{0, 0}, {1, 0}, {1, 1}, {0, 0}}));
  // vertical strands
  CHECK(is_simple(std::vector<Point>{{0, 0}, {0, 1}, {1, 1}, {1, 0}, {2, 0}, {2, 1}}));
  CHECK_FALSE(is_simple(std::vector<Point>{{0, 0}, {0, 2}, {1, 2}, {1, 1}, {0, 1}}));
}

TEST_CASE("sweep agrees with all-pairs test on random polylines") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coord(0, 6);
  std::uniform_real_distribution<double> jitter(-1e-9, 1e-9);
  int simple = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int len = 3 + trial % 7;
    std::vector<Point> p;
    for (int k = 0; k < len; ++k) {
      Point q{static_cast<double>(coord(rng)), static_cast<double>(coord(rng))};
      if (trial % 3 == 0) q = q + Point{jitter(rng), jitter(rng)};
      p.push_back(q);
    }
    const bool expect = brute_simple(p);
    simple += expect;
    REQUIRE(is_simple(p) == expect);
  }
  CHECK(simple > 100);
}

TEST_CASE("dense bundles of near-parallel strands") {
  // a serpentine of 4000 strands 1e-9 apart
  std::vector<Point> p;
  for (int k = 0; k < 4000; ++k) {
    const double x = 1e-2 + 1e-9 * k;
    if (k % 2 == 0) {
      p.push_back({x, -1});
      p.push_back({x, 1});
    } else {
      p.push_back({x, 1});
      p.push_back({x, -1});
    }
  }
  CHECK(is_simple(p));
  p.push_back({1e-2 + 1e-9 * 1000.5, 0});
  CHECK_FALSE(is_simple(p));
}

TEST_CASE("local feature size") {
  const std::vector<Point> hairpin{{0, 0}, {0, 1}, {0.01, 1}, {0.01, 0}};
  const auto lfs = local_feature_size(hairpin, 5.0);
  CHECK(lfs[0] == doctest::Approx(0.01));
  CHECK(lfs[3] == doctest::Approx(0.01));
  CHECK(lfs[1] == doctest::Approx(0.01));  // only the far strand counts

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Point> p;
    for (int k = 0; k < 40; ++k) p.push_back({u(rng), u(rng)});
    const double fallback = 0.3;
    const auto got = local_feature_size(p, fallback);
    for (std::size_t i = 0; i < p.size(); ++i) {
      double best = fallback;
      for (std::size_t j = 0; j + 1 < p.size(); ++j) {
        if (j + 1 == i || j == i) continue;
        best = std::min(best, point_segment_distance(p[i], p[j], p[j + 1]));
      }
      REQUIRE(got[i] <= fallback);
      REQUIRE(got[i] >= best - 1e-15);
      // exact whenever the nearest segment is inside the search window
      if (best < 0.05) REQUIRE(got[i] == doctest::Approx(best));
    }
  }
}

TEST_CASE("interpolation by parameter") {
  const std::vector<Point> p{{0, 0}, {1, 0}, {1, 2}};
  const std::vector<double> t{-1, 0, 1};
  CHECK(interpolate_by_parameter(p, t, -1) == Point{0, 0});
  CHECK(interpolate_by_parameter(p, t, 1) == Point{1, 2});
  const Point m = interpolate_by_parameter(p, t, 0.5);
  CHECK(m.x == doctest::Approx(1));
  CHECK(m.y == doctest::Approx(1));
  const Point h = interpolate_by_parameter(p, t, -0.25);
  CHECK(h.x == doctest::Approx(0.75));
}
