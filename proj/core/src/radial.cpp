#include "arclike/radial.hpp"

#include <algorithm>
#include <map>

#include "arclike/error.hpp"

namespace arclike {

namespace {

const Rational kZero;

void require_two_sided(const PLMap& f, std::string_view op) {
  if (!(f.domain().lo < kZero && kZero < f.domain().hi)) {
    throw HypothesisError(std::string(op) + ": domain must contain 0 in its interior");
  }
  require_standing_hypothesis(f, op);
}

}  // namespace

PLMap right_half(const PLMap& f) { return f.restrict(kZero, f.domain().hi); }

PLMap left_half(const PLMap& f) { return reflect_domain(f.restrict(f.domain().lo, kZero)); }

std::optional<RadialDeparture> radial_departure_check(const PLMap& f, const Rational& x1,
                                                      const Rational& x2) {
  require_two_sided(f, "radial_departure_check");
  if (!(f.domain().lo <= x1 && x1 < kZero && kZero < x2 && x2 <= f.domain().hi)) {
    throw DomainError("radial pair needs a <= x1 < 0 < x2 <= b, got <" + x1.str() + ", " +
                      x2.str() + ">");
  }
  const Rational y1 = f(x1);
  const Rational y2 = f(x2);
  // f(0) = 0 is an interior sample whether or not 0 is a breakpoint.
  Rational lo = kZero;
  Rational hi = kZero;
  for (const auto& b : f.breakpoints()) {
    if (x1 < b.x && b.x < x2) {
      lo = min(lo, b.y);
      hi = max(hi, b.y);
    }
  }
  if (y1 < lo && hi < y2) return RadialDeparture{x1, x2, Orientation::positive, y1, y2};
  if (y2 < lo && hi < y1) return RadialDeparture{x1, x2, Orientation::negative, y1, y2};
  return std::nullopt;
}

bool RadialProfile::contains(const Rational& y1, const Rational& y2) const {
  return std::any_of(regions.begin(), regions.end(),
                     [&](const RadialRegion& r) { return r.contains(y1, y2); });
}

std::vector<RadialDeparture> RadialProfile::pairs() const {
  std::vector<RadialDeparture> out;
  for (const auto& r : regions) out.push_back(r.corner);
  return out;
}

RadialProfile radial_profile(const PLMap& f) {
  require_two_sided(f, "radial_profile");
  const DepartureReport right = departures(right_half(f));
  const DepartureReport left = departures(left_half(f));
  RadialProfile profile;
  for (std::size_t j = 0; j < right.blocks.size(); ++j) {
    const DepartureBlock& rb = right.blocks[j];
    for (std::size_t l = 0; l < left.blocks.size(); ++l) {
      const DepartureBlock& lb = left.blocks[l];
      if (lb.orientation == rb.orientation) continue;
      RadialRegion region{Orientation::positive, {}, {}, l, j, {}};
      if (rb.orientation == Orientation::positive) {
        // y2 beats everything on the left before x1, y1 undercuts everything
        // on the right before x2.
        region.orientation = Orientation::positive;
        region.y2 = {max(rb.record_before, lb.opposite_extreme), rb.record, true, false};
        region.y1 = {lb.record, min(lb.record_before, rb.opposite_extreme), false, true};
      } else {
        region.orientation = Orientation::negative;
        region.y1 = {max(lb.record_before, rb.opposite_extreme), lb.record, true, false};
        region.y2 = {rb.record, min(rb.record_before, lb.opposite_extreme), false, true};
      }
      if (region.y1.empty() || region.y2.empty()) continue;
      const auto corner = radial_departure_check(f, -lb.last(), rb.last());
      if (!corner || corner->orientation != region.orientation) {
        throw InternalConsistencyError("radial_profile: corner <" + (-lb.last()).str() + ", " +
                                       rb.last().str() + "> fails the definition");
      }
      region.corner = *corner;
      (region.orientation == Orientation::positive ? profile.has_positive
                                                   : profile.has_negative) = true;
      profile.regions.push_back(std::move(region));
    }
  }
  return profile;
}

PLMap radial_contour_factor(const PLMap& f) {
  require_two_sided(f, "radial_contour_factor");
  return glue(reflect_domain(contour_factor(left_half(f))), contour_factor(right_half(f)))
      .with_codomain(f.codomain());
}

PLMap radial_meandering_factor(const PLMap& f) {
  require_two_sided(f, "radial_meandering_factor");
  const PLMap sl = meandering_factor(left_half(f));
  const PLMap sr = meandering_factor(right_half(f));
  return glue(reflect_domain(negate_values(sl)), sr).with_codomain(f.domain());
}

namespace {

// Membership grid over the cells of a common refinement: even index 2k is the
// k-th critical value, odd index 2k+1 the open gap after it.
struct CellGrid {
  std::vector<Rational> ys1;
  std::vector<Rational> ys2;

  static std::size_t low_cell(const std::vector<Rational>& ys, const Rational& v, bool open) {
    const auto k = static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), v) - ys.begin());
    return 2 * k + (open ? 1 : 0);
  }
  static std::size_t high_cell(const std::vector<Rational>& ys, const Rational& v, bool open) {
    const auto k = static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), v) - ys.begin());
    return 2 * k - (open ? 1 : 0);
  }

  std::vector<std::vector<bool>> paint(const RadialProfile& p) const {
    std::vector<std::vector<bool>> cells(2 * ys1.size(), std::vector<bool>(2 * ys2.size(), false));
    for (const auto& r : p.regions) {
      const std::size_t a0 = low_cell(ys1, r.y1.lo, r.y1.lo_open);
      const std::size_t a1 = high_cell(ys1, r.y1.hi, r.y1.hi_open);
      const std::size_t b0 = low_cell(ys2, r.y2.lo, r.y2.lo_open);
      const std::size_t b1 = high_cell(ys2, r.y2.hi, r.y2.hi_open);
      for (std::size_t a = a0; a <= a1; ++a) {
        for (std::size_t b = b0; b <= b1; ++b) cells[a][b] = true;
      }
    }
    return cells;
  }
};

void add_bounds(const RadialProfile& p, std::vector<Rational>& ys1, std::vector<Rational>& ys2) {
  for (const auto& r : p.regions) {
    ys1.push_back(r.y1.lo);
    ys1.push_back(r.y1.hi);
    ys2.push_back(r.y2.lo);
    ys2.push_back(r.y2.hi);
  }
}

void sort_unique(std::vector<Rational>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

bool same_radial_departures(const PLMap& f, const PLMap& g) {
  const RadialProfile pf = radial_profile(f);
  const RadialProfile pg = radial_profile(g);
  CellGrid grid;
  add_bounds(pf, grid.ys1, grid.ys2);
  add_bounds(pg, grid.ys1, grid.ys2);
  if (grid.ys1.empty()) return true;
  sort_unique(grid.ys1);
  sort_unique(grid.ys2);
  return grid.paint(pf) == grid.paint(pg);
}

TwinsReport no_contour_twins(const PLMap& f) {
  require_two_sided(f, "no_contour_twins");
  const PLMap r = right_half(f);
  const PLMap l = left_half(f);
  TwinsReport report;
  // Signs of f just right and just left of 0 decide local extremality.
  const int sr = r.breakpoints()[1].y.sign();
  const int sl = l.breakpoints()[1].y.sign();
  const bool local_min = sr >= 0 && sl >= 0;
  const bool local_max = sr <= 0 && sl <= 0;
  report.zero_extremal = local_min || local_max;
  const auto rc = contour_points(r);
  const auto lc = contour_points(l);
  for (const auto& a : rc) {
    if (a.x == r.domain().hi) continue;
    for (const auto& b : lc) {
      if (b.x == l.domain().hi) continue;
      if (a.value == b.value && !report.twins) report.twins = {a.x, -b.x};
    }
  }
  report.ok = !report.zero_extremal && !report.twins;
  return report;
}

}  // namespace arclike
