#pragma once

#include <optional>
#include <vector>

#include "arclike/plmap.hpp"

// One-sided analysis of a map f on [0, b] with f(0) = 0.

namespace arclike {

enum class Orientation { positive, negative };

inline Orientation opposite(Orientation o) {
  return o == Orientation::positive ? Orientation::negative : Orientation::positive;
}
const char* to_string(Orientation o);  // "pos" / "neg"

// Half-open interval (lo, hi] of departures.
struct DepartureInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo < x && x <= hi; }
  friend bool operator==(const DepartureInterval&, const DepartureInterval&) = default;
};

struct DepartureBlock {
  Orientation orientation;
  std::vector<DepartureInterval> intervals;
  // Record of this orientation in force just before the block starts, and
  // the record reached at its end. Values of the block fill (record_before,
  // record] (or [record, record_before) for a negative block).
  Rational record_before;
  Rational record;
  // Extreme of the other orientation, constant throughout the block.
  Rational opposite_extreme;

  const Rational& last() const { return intervals.back().hi; }
  bool contains(const Rational& x) const;
};

struct ContourPoint {
  Rational x;
  Rational value;
  Orientation orientation;

  friend bool operator==(const ContourPoint&, const ContourPoint&) = default;
};

struct DepartureReport {
  std::vector<DepartureBlock> blocks;
  std::vector<ContourPoint> contour_points;  // alpha_1 < ... < alpha_n

  bool is_departure(const Rational& x) const;
  std::optional<Orientation> orientation_at(const Rational& x) const;
};

// All throw HypothesisError unless f lives on [0, b], f(0) = 0 and f is not
// constant.
DepartureReport departures(const PLMap& f);
std::vector<ContourPoint> contour_points(const PLMap& f);

// t_f: breakpoints (b*i/n, f(alpha_i)).
PLMap contour_factor(const PLMap& f);

// The canonical s with compose(contour_factor(f), s) = f:
// on [alpha_{i-1}, alpha_i) (and on [alpha_n, b] with i = n),
// s(x) = b * ((i - 1) + w) / n where w interpolates f(x) between
// f(alpha_{i-1}) and f(alpha_i).
PLMap meandering_factor(const PLMap& f);

// The image f([0, x)) of a departure x: a half-open interval closed at the
// opposite extreme.
struct DepartureImage {
  Rational closed_end;  // attained extreme
  Rational open_end;    // f(x), not attained before x
};

struct ContourWitness {
  int map = 0;  // 0: the first argument, 1: the second
  Rational x;
  Orientation orientation;
  DepartureImage image;
};

struct ContourEquivalence {
  bool equal = false;
  // When unequal: a departure of one map whose image f([0, x)) is not the
  // image g([0, x')) of any departure x' of the other.
  std::optional<ContourWitness> witness;
};

ContourEquivalence contour_equivalent(const PLMap& f, const PLMap& g);

}  // namespace arclike
