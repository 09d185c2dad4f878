#include "arclike/contour.hpp"

#include "arclike/error.hpp"

namespace arclike {

const char* to_string(Orientation o) { return o == Orientation::positive ? "pos" : "neg"; }

bool DepartureBlock::contains(const Rational& x) const {
  for (const auto& i : intervals) {
    if (i.contains(x)) return true;
  }
  return false;
}

bool DepartureReport::is_departure(const Rational& x) const {
  return orientation_at(x).has_value();
}

std::optional<Orientation> DepartureReport::orientation_at(const Rational& x) const {
  for (const auto& b : blocks) {
    if (b.contains(x)) return b.orientation;
  }
  return std::nullopt;
}

DepartureReport departures(const PLMap& f) {
  require_one_sided(f, "departures");
  DepartureReport report;
  Rational hi_rec;  // sup f([0, x))
  Rational lo_rec;  // inf f([0, x))
  const auto bps = f.breakpoints();
  for (std::size_t k = 0; k + 1 < bps.size(); ++k) {
    const Breakpoint& a = bps[k];
    const Breakpoint& b = bps[k + 1];
    std::optional<Orientation> o;
    Rational level;
    if (b.y > hi_rec) {
      o = Orientation::positive;
      level = hi_rec;
    } else if (b.y < lo_rec) {
      o = Orientation::negative;
      level = lo_rec;
    }
    if (!o) continue;
    // a.y lies in [lo_rec, hi_rec], so the segment crosses `level` once.
    const Rational u = a.x + (level - a.y) * (b.x - a.x) / (b.y - a.y);
    if (report.blocks.empty() || report.blocks.back().orientation != *o) {
      DepartureBlock block{*o, {}, level, b.y, *o == Orientation::positive ? lo_rec : hi_rec};
      report.blocks.push_back(std::move(block));
    }
    DepartureBlock& block = report.blocks.back();
    if (!block.intervals.empty() && block.intervals.back().hi == u) {
      block.intervals.back().hi = b.x;
    } else {
      block.intervals.push_back({u, b.x});
    }
    block.record = b.y;
    (*o == Orientation::positive ? hi_rec : lo_rec) = b.y;
  }
  for (const auto& block : report.blocks) {
    report.contour_points.push_back({block.last(), block.record, block.orientation});
  }
  return report;
}

std::vector<ContourPoint> contour_points(const PLMap& f) { return departures(f).contour_points; }

PLMap contour_factor(const PLMap& f) {
  const auto cps = contour_points(f);
  const Rational& b = f.domain().hi;
  const Rational n(static_cast<long>(cps.size()));
  std::vector<Breakpoint> pts{{Rational(0), Rational(0)}};
  for (std::size_t i = 0; i < cps.size(); ++i) {
    pts.push_back({b * Rational(static_cast<long>(i + 1)) / n, cps[i].value});
  }
  return PLMap(std::move(pts), f.codomain());
}

PLMap meandering_factor(const PLMap& f) {
  const auto cps = contour_points(f);
  const Rational& b = f.domain().hi;
  const std::size_t n = cps.size();
  std::vector<Rational> alpha{Rational(0)};
  std::vector<Rational> value{Rational(0)};
  for (const auto& c : cps) {
    alpha.push_back(c.x);
    value.push_back(c.value);
  }
  auto s_at = [&](const Rational& x) {
    std::size_t i = 1;
    while (i < n && alpha[i] <= x) ++i;
    const Rational w = (f(x) - value[i - 1]) / (value[i] - value[i - 1]);
    return b * (Rational(static_cast<long>(i - 1)) + w) / Rational(static_cast<long>(n));
  };
  std::vector<Breakpoint> pts;
  for (const auto& p : f.breakpoints()) pts.push_back({p.x, s_at(p.x)});
  return PLMap(std::move(pts), {Rational(0), b});
}

namespace {

DepartureImage image_of(const DepartureBlock& block, const Rational& x, const PLMap& f) {
  return {block.opposite_extreme, f(x)};
}

ContourWitness witness_at(int which, const DepartureBlock& block, const PLMap& f) {
  return {which, block.last(), block.orientation, image_of(block, block.last(), f)};
}

bool more_extreme(Orientation o, const Rational& a, const Rational& b) {
  return o == Orientation::positive ? a > b : a < b;
}

}  // namespace

ContourEquivalence contour_equivalent(const PLMap& f, const PLMap& g) {
  const DepartureReport rf = departures(f);
  const DepartureReport rg = departures(g);
  const std::size_t nf = rf.blocks.size();
  const std::size_t ng = rg.blocks.size();
  for (std::size_t i = 0; i < std::min(nf, ng); ++i) {
    const DepartureBlock& bf = rf.blocks[i];
    const DepartureBlock& bg = rg.blocks[i];
    if (bf.orientation != bg.orientation) {
      return {false, witness_at(0, bf, f)};
    }
    if (bf.record != bg.record) {
      if (more_extreme(bf.orientation, bf.record, bg.record)) return {false, witness_at(0, bf, f)};
      // Every later departure of f has bf.record as its attained extreme,
      // which g never records.
      if (i + 1 < nf) return {false, witness_at(0, rf.blocks[i + 1], f)};
      return {false, witness_at(1, bg, g)};
    }
  }
  if (nf > ng) return {false, witness_at(0, rf.blocks[ng], f)};
  if (ng > nf) return {false, witness_at(1, rg.blocks[nf], g)};
  return {true, std::nullopt};
}

}  // namespace arclike
