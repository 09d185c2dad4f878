#include "arclike/plmap.hpp"

#include <algorithm>
#include <string>

#include "arclike/error.hpp"

namespace arclike {

namespace {

bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
  return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

std::vector<Breakpoint> normalized(std::vector<Breakpoint> pts) {
  std::vector<Breakpoint> out;
  out.reserve(pts.size());
  for (auto& p : pts) {
    while (out.size() >= 2 && collinear(out[out.size() - 2], out.back(), p)) {
      out.pop_back();
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::string fmt_interval(const Interval& i) {
  return "[" + i.lo.str() + ", " + i.hi.str() + "]";
}

// Value on the segment [a, b] at x, with a.x <= x <= b.x.
Rational lerp(const Breakpoint& a, const Breakpoint& b, const Rational& x) {
  if (x == a.x) return a.y;
  if (x == b.x) return b.y;
  return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

}  // namespace

PLMap::PLMap(std::vector<Breakpoint> breakpoints, Interval codomain)
    : codomain_(std::move(codomain)) {
  if (breakpoints.size() < 2) {
    throw DomainError("a PL map needs at least two breakpoints");
  }
  if (codomain_.hi < codomain_.lo) throw DomainError("empty codomain");
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (i > 0 && !(breakpoints[i - 1].x < breakpoints[i].x)) {
      throw DomainError("breakpoint abscissae must be strictly increasing (at x = " +
                        breakpoints[i].x.str() + ")");
    }
    if (!codomain_.contains(breakpoints[i].y)) {
      throw DomainError("value " + breakpoints[i].y.str() + " at x = " +
                        breakpoints[i].x.str() + " lies outside the codomain " +
                        fmt_interval(codomain_));
    }
  }
  domain_ = {breakpoints.front().x, breakpoints.back().x};
  breakpoints_ = normalized(std::move(breakpoints));
}

PLMap PLMap::identity(Interval domain) {
  return PLMap({{domain.lo, domain.lo}, {domain.hi, domain.hi}}, domain);
}

PLMap PLMap::negation() { return PLMap({{-1, 1}, {1, -1}}); }

PLMap PLMap::constant(Interval domain, const Rational& value, Interval codomain) {
  return PLMap({{domain.lo, value}, {domain.hi, value}}, std::move(codomain));
}

Rational PLMap::operator()(const Rational& x) const {
  if (!domain_.contains(x)) {
    throw DomainError("x = " + x.str() + " outside domain " + fmt_interval(domain_));
  }
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x,
                             [](const Rational& v, const Breakpoint& b) { return v < b.x; });
  if (it == breakpoints_.end()) return breakpoints_.back().y;
  return lerp(*(it - 1), *it, x);
}

Rational PLMap::min_on(const Rational& lo, const Rational& hi) const {
  Rational best = min((*this)(lo), (*this)(hi));
  for (const auto& b : breakpoints_) {
    if (lo < b.x && b.x < hi) best = min(best, b.y);
  }
  return best;
}

Rational PLMap::max_on(const Rational& lo, const Rational& hi) const {
  Rational best = max((*this)(lo), (*this)(hi));
  for (const auto& b : breakpoints_) {
    if (lo < b.x && b.x < hi) best = max(best, b.y);
  }
  return best;
}

Interval PLMap::range() const {
  const auto [lo, hi] = std::minmax_element(
      breakpoints_.begin(), breakpoints_.end(),
      [](const Breakpoint& a, const Breakpoint& b) { return a.y < b.y; });
  return {lo->y, hi->y};
}

PLMap PLMap::restrict(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi) || !domain_.contains(lo) || !domain_.contains(hi)) {
    throw DomainError("cannot restrict " + fmt_interval(domain_) + " to [" + lo.str() +
                      ", " + hi.str() + "]");
  }
  std::vector<Breakpoint> pts;
  pts.push_back({lo, (*this)(lo)});
  for (const auto& b : breakpoints_) {
    if (lo < b.x && b.x < hi) pts.push_back(b);
  }
  pts.push_back({hi, (*this)(hi)});
  return PLMap(std::move(pts), codomain_);
}

PLMap PLMap::with_codomain(Interval codomain) const {
  return PLMap({breakpoints_.begin(), breakpoints_.end()}, std::move(codomain));
}

Rational evaluate(const PLMap& f, const Rational& x) { return f(x); }

PLMap compose(const PLMap& f, const PLMap& g) {
  const Interval g_range = g.range();
  if (!f.domain().contains(g_range)) {
    throw CompositionError("range " + fmt_interval(g_range) + " of the inner map is not inside the domain " +
                           fmt_interval(f.domain()) + " of the outer map");
  }
  const auto gb = g.breakpoints();
  const auto fb = f.breakpoints();
  std::vector<Rational> xs;
  xs.push_back(gb.front().x);
  for (std::size_t i = 0; i + 1 < gb.size(); ++i) {
    const Breakpoint& a = gb[i];
    const Breakpoint& b = gb[i + 1];
    if (a.y != b.y) {
      std::vector<Rational> cuts;
      const Rational& lo = min(a.y, b.y);
      const Rational& hi = max(a.y, b.y);
      for (const auto& p : fb) {
        if (lo < p.x && p.x < hi) cuts.push_back(a.x + (p.x - a.y) * (b.x - a.x) / (b.y - a.y));
      }
      if (b.y < a.y) std::reverse(cuts.begin(), cuts.end());
      xs.insert(xs.end(), cuts.begin(), cuts.end());
    }
    xs.push_back(b.x);
  }
  std::vector<Breakpoint> pts;
  pts.reserve(xs.size());
  for (auto& x : xs) {
    Rational y = f(g(x));
    pts.push_back({std::move(x), std::move(y)});
  }
  return PLMap(std::move(pts), f.codomain());
}

PLMap compose_all(std::span<const PLMap> maps) {
  if (maps.empty()) throw CompositionError("compose_all needs at least one map");
  PLMap result = maps.back();
  for (std::size_t i = maps.size() - 1; i-- > 0;) result = compose(maps[i], result);
  return result;
}

PLMap negate_values(const PLMap& f) {
  std::vector<Breakpoint> pts;
  for (const auto& b : f.breakpoints()) pts.push_back({b.x, -b.y});
  return PLMap(std::move(pts), {-f.codomain().hi, -f.codomain().lo});
}

PLMap reflect_domain(const PLMap& f) {
  std::vector<Breakpoint> pts;
  const auto bs = f.breakpoints();
  for (auto it = bs.rbegin(); it != bs.rend(); ++it) pts.push_back({-it->x, it->y});
  return PLMap(std::move(pts), f.codomain());
}

PLMap glue(const PLMap& left, const PLMap& right) {
  if (left.domain().hi != right.domain().lo) {
    throw DomainError("glue: domains " + fmt_interval(left.domain()) + " and " +
                      fmt_interval(right.domain()) + " do not abut");
  }
  const auto lb = left.breakpoints();
  const auto rb = right.breakpoints();
  if (lb.back().y != rb.front().y) {
    throw DomainError("glue: the two pieces disagree at x = " + right.domain().lo.str());
  }
  std::vector<Breakpoint> pts(lb.begin(), lb.end());
  pts.insert(pts.end(), rb.begin() + 1, rb.end());
  const Interval cod{min(left.codomain().lo, right.codomain().lo),
                     max(left.codomain().hi, right.codomain().hi)};
  return PLMap(std::move(pts), cod);
}

PLMap two_piece_homeomorphism(const Interval& domain, const Rational& from,
                              const Rational& to) {
  if (!(domain.lo < from && from < domain.hi) || !(domain.lo < to && to < domain.hi)) {
    throw BoundaryError("two-piece homeomorphism needs interior points, got " + from.str() +
                        " -> " + to.str() + " on " + fmt_interval(domain));
  }
  return PLMap({{domain.lo, domain.lo}, {from, to}, {domain.hi, domain.hi}}, domain);
}

PLMap recenter(const PLMap& f, const Rational& p, const Rational& q) {
  const Interval& dom = f.domain();
  const Interval& cod = f.codomain();
  const Rational zero;
  if (!(dom.lo < q && q < dom.hi) || !(dom.lo < zero && zero < dom.hi)) {
    throw BoundaryError("recenter: q = " + q.str() + " and 0 must be interior to the domain " +
                        fmt_interval(dom));
  }
  if (!(cod.lo < p && p < cod.hi) || !(cod.lo < zero && zero < cod.hi)) {
    throw BoundaryError("recenter: p = " + p.str() + " and 0 must be interior to the codomain " +
                        fmt_interval(cod));
  }
  if (f(q) != p) {
    throw InconsistentCenterError("recenter: f(" + q.str() + ") = " + f(q).str() +
                                  " differs from p = " + p.str());
  }
  const PLMap h = two_piece_homeomorphism(cod, p, zero);
  const PLMap k_inverse = two_piece_homeomorphism(dom, zero, q);
  return compose(h, compose(f, k_inverse)).with_codomain(cod);
}

MapFlags validate(const PLMap& f) {
  MapFlags flags;
  const Interval& dom = f.domain();
  const Rational zero;
  flags.centered = dom.contains(zero) && f(zero).is_zero();
  if (flags.centered && dom.lo < zero && zero < dom.hi) {
    const Interval left = f.restrict(dom.lo, zero).range();
    const Interval right = f.restrict(zero, dom.hi).range();
    flags.half_nonconstant = left.lo != left.hi && right.lo != right.hi;
  }
  flags.onto = f.range() == f.codomain();
  flags.sign_preserving = true;
  for (const auto& b : f.breakpoints()) {
    if ((b.x.sign() > 0 && b.y.sign() < 0) || (b.x.sign() < 0 && b.y.sign() > 0) ||
        (b.x.is_zero() && !b.y.is_zero())) {
      flags.sign_preserving = false;
    }
  }
  // A segment crossing x = 0 without a breakpoint there carries its sign
  // through 0, so breakpoint checks plus f(0) = 0 are exhaustive.
  if (dom.contains(zero) && !f(zero).is_zero()) flags.sign_preserving = false;
  return flags;
}

void require_standing_hypothesis(const PLMap& f, std::string_view operation) {
  const MapFlags flags = validate(f);
  if (!flags.centered) {
    throw HypothesisError(std::string(operation) + ": map must satisfy f(0) = 0 with 0 in its domain");
  }
  if (!flags.half_nonconstant) {
    throw HypothesisError(std::string(operation) +
                          ": map must be non-constant on both [a, 0] and [0, b]");
  }
}

void require_one_sided(const PLMap& f, std::string_view operation) {
  if (!f.domain().lo.is_zero()) {
    throw HypothesisError(std::string(operation) + ": one-sided maps must have domain [0, b]");
  }
  if (!f(Rational(0)).is_zero()) {
    throw HypothesisError(std::string(operation) + ": map must send 0 to 0");
  }
  const Interval r = f.range();
  if (r.lo == r.hi) throw HypothesisError(std::string(operation) + ": map must not be constant");
}

}  // namespace arclike
