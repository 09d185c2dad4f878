#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "arclike/rational.hpp"

namespace arclike {

struct Breakpoint {
  Rational x;
  Rational y;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

// Closed interval [lo, hi] with lo <= hi.
struct Interval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

inline Interval unit_interval() { return {Rational(-1), Rational(1)}; }

// A continuous piecewise-linear map on a closed interval, given by its
// breakpoints. Instances are immutable and always stored normalized: no
// interior breakpoint is collinear with its neighbours, so two maps are equal
// exactly when they agree pointwise on the same domain.
class PLMap {
 public:
  // Throws DomainError on fewer than two breakpoints, non-increasing x, or a
  // value outside the codomain.
  explicit PLMap(std::vector<Breakpoint> breakpoints,
                 Interval codomain = unit_interval());

  static PLMap identity(Interval domain = unit_interval());
  // The map x -> -x on [-1, 1].
  static PLMap negation();
  static PLMap constant(Interval domain, const Rational& value,
                        Interval codomain = unit_interval());

  const Interval& domain() const { return domain_; }
  const Interval& codomain() const { return codomain_; }
  std::span<const Breakpoint> breakpoints() const { return breakpoints_; }
  std::size_t segment_count() const { return breakpoints_.size() - 1; }

  // Throws DomainError when x lies outside the domain.
  Rational operator()(const Rational& x) const;

  // Extremes over a closed sub-interval of the domain.
  Rational min_on(const Rational& lo, const Rational& hi) const;
  Rational max_on(const Rational& lo, const Rational& hi) const;
  Interval range() const;

  // Restriction to [lo, hi], which must lie inside the domain with lo < hi.
  PLMap restrict(const Rational& lo, const Rational& hi) const;
  PLMap with_codomain(Interval codomain) const;

  friend bool operator==(const PLMap& a, const PLMap& b) {
    return a.domain_ == b.domain_ && a.breakpoints_ == b.breakpoints_;
  }

 private:
  std::vector<Breakpoint> breakpoints_;
  Interval domain_;
  Interval codomain_;
};

Rational evaluate(const PLMap& f, const Rational& x);

// f o g. Breakpoints of the result are those of g together with the
// preimages under g of the breakpoints of f. Throws CompositionError when the
// range of g is not inside the domain of f.
PLMap compose(const PLMap& f, const PLMap& g);

// Composition of a chain: compose_all({f1, f2, f3}) = f1 o f2 o f3.
PLMap compose_all(std::span<const PLMap> maps);

// x -> -f(x), with the codomain reflected.
PLMap negate_values(const PLMap& f);

// x -> f(-x) on the reflected domain.
PLMap reflect_domain(const PLMap& f);

// Joins a map on [a, c] with a map on [c, b]; they must agree at c.
PLMap glue(const PLMap& left, const PLMap& right);

// The two-piece PL homeomorphism of `domain` that fixes both endpoints and
// sends `from` to `to`.
PLMap two_piece_homeomorphism(const Interval& domain, const Rational& from,
                              const Rational& to);

// Conjugates f so that the coordinate pair (p, q) with f(q) = p moves to 0:
// returns h o f o k^-1 where h sends p to 0 on the codomain and k sends q to 0
// on the domain. Throws BoundaryError when p or q is not interior (or 0 is
// not interior), and InconsistentCenterError when f(q) != p.
PLMap recenter(const PLMap& f, const Rational& p, const Rational& q);

struct MapFlags {
  bool centered = false;
  bool half_nonconstant = false;
  bool onto = false;
  bool sign_preserving = false;

  friend bool operator==(const MapFlags&, const MapFlags&) = default;
};

MapFlags validate(const PLMap& f);

// Throws HypothesisError unless f is centered with both halves non-constant.
void require_standing_hypothesis(const PLMap& f, std::string_view operation);

// Throws HypothesisError unless f lives on [0, b], sends 0 to 0, and is not
// constant.
void require_one_sided(const PLMap& f, std::string_view operation);

}  // namespace arclike
