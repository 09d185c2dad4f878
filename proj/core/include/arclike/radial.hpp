#pragma once

#include <optional>
#include <vector>

#include "arclike/contour.hpp"

// Two-sided analysis of a centered map f on [a, b] with a < 0 < b.

namespace arclike {

// f on [0, b], and u -> f(-u) on [0, -a].
PLMap right_half(const PLMap& f);
PLMap left_half(const PLMap& f);

struct RadialDeparture {
  Rational x1;
  Rational x2;
  Orientation orientation;
  Rational y1;  // f(x1)
  Rational y2;  // f(x2)

  friend bool operator==(const RadialDeparture&, const RadialDeparture&) = default;
};

// Throws HypothesisError when f is not centered with non-constant halves and
// DomainError unless a <= x1 < 0 < x2 <= b.
std::optional<RadialDeparture> radial_departure_check(const PLMap& f, const Rational& x1,
                                                      const Rational& x2);

struct ValueRange {
  Rational lo;
  Rational hi;
  bool lo_open = false;
  bool hi_open = false;

  bool contains(const Rational& v) const {
    return (lo_open ? lo < v : lo <= v) && (hi_open ? v < hi : v <= hi);
  }
  bool empty() const { return hi < lo || (lo == hi && (lo_open || hi_open)); }
};

// All value pairs (y1, y2) of radial departures pairing one right departure
// block with one left departure block. `corner` is the departure at the two
// contour points.
struct RadialRegion {
  Orientation orientation;
  ValueRange y1;
  ValueRange y2;
  std::size_t left_block;
  std::size_t right_block;
  RadialDeparture corner;

  bool contains(const Rational& v1, const Rational& v2) const {
    return y1.contains(v1) && y2.contains(v2);
  }
};

struct RadialProfile {
  std::vector<RadialRegion> regions;
  bool has_positive = false;
  bool has_negative = false;

  bool contains(const Rational& y1, const Rational& y2) const;
  std::vector<RadialDeparture> pairs() const;
};

RadialProfile radial_profile(const PLMap& f);

// Contour factors of the two halves glued at 0.
PLMap radial_contour_factor(const PLMap& f);
// Canonical meandering factors of the two halves glued at 0; sign preserving,
// and compose(radial_contour_factor(f), radial_meandering_factor(f)) = f.
PLMap radial_meandering_factor(const PLMap& f);

// Equality of the full sets of radial departure value pairs.
bool same_radial_departures(const PLMap& f, const PLMap& g);

struct TwinsReport {
  bool ok = true;
  bool zero_extremal = false;
  // right and left contour points sharing a value
  std::optional<std::pair<Rational, Rational>> twins;
};

TwinsReport no_contour_twins(const PLMap& f);

}  // namespace arclike
