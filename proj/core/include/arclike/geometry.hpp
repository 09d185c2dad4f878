#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace arclike {

struct Point {
  double x = 0;
  double y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double k, Point a) { return {k * a.x, k * a.y}; }
double distance(Point a, Point b);

// Sign of the cross product (b - a) x (c - a), exact for any finite inputs:
// a floating-point filter with an exact rational fallback.
int orient(Point a, Point b, Point c);

// Closed segments [a, b] and [c, d] share a point (exact).
bool segments_intersect(Point a, Point b, Point c, Point d);

// Indices (i, j), i <= j, of polyline segments [p_i, p_{i+1}] that meet
// where they should not: non-adjacent segments touching, adjacent ones
// overlapping along a line, or a zero-length segment (i == j). Found by a
// sweep with exact predicates; which pair is reported is deterministic but
// not necessarily the first.
std::optional<std::pair<std::size_t, std::size_t>> find_self_intersection(
    std::span<const Point> polyline);

inline bool is_simple(std::span<const Point> polyline) {
  return !find_self_intersection(polyline).has_value();
}

double point_segment_distance(Point p, Point a, Point b);

// For each vertex, the distance to the nearest segment not incident to it,
// searched within a few grid cells; `fallback` bounds the result.
std::vector<double> local_feature_size(std::span<const Point> polyline, double fallback);

// Point at parameter t on a polyline whose vertices carry increasing
// parameters.
Point interpolate_by_parameter(std::span<const Point> polyline, std::span<const double> params,
                               double t);

}  // namespace arclike
