#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arclike/radial.hpp"

namespace arclike {

// radial_contour_factor(f) == radial_contour_factor(f o g).
bool contour_stable(const PLMap& f, const PLMap& g);

// lemma: s12 on [-1,0], s1 o f2 on [0,1], hypotheses enforced.
// naive: the same formula with the twins hypothesis left unchecked.
// swapped: s1 o f2 on the left, s12 on the right, twins unchecked.
enum class StitchVariant { lemma, naive, swapped };

const char* to_string(StitchVariant v);
// Throws ParseError.
StitchVariant parse_stitch_variant(std::string_view name);

struct StitchResult {
  StitchVariant variant = StitchVariant::lemma;
  PLMap f1;
  PLMap f2;
  PLMap t1;   // radial contour factor of f1
  PLMap s1;   // radial meandering factor of f1
  PLMap s12;  // radial meandering factor of f1 o f2
  PLMap s_tilde;
  bool recomposes = false;  // t1 o s_tilde == f1 o f2
};

// Throws PreconditionError naming the failed hypothesis: stability of
// (f1, f2) always, and no contour twins for f1 and f2 under `lemma`.
StitchResult stitched_factor(const PLMap& f1, const PLMap& f2,
                             StitchVariant variant = StitchVariant::lemma);

struct StitchVerdict {
  bool ok = true;
  std::optional<RadialDeparture> witness;
  std::vector<RadialDeparture> negatives;  // corners of every negative region
};

// Looks for negative radial departures of s_tilde o t3. Under the lemma
// variant with (f2, f3) stable as well, finding one raises
// InternalConsistencyError.
StitchVerdict verify_stitch(const StitchResult& result, const PLMap& f3);

struct SystemReindex {
  std::vector<PLMap> original;
  std::vector<StitchResult> stitches;  // for n = 1, 3, 5, ...
  std::vector<PLMap> derived;          // s_tilde_n o t_{n+2}

  // h(<x_n>) = <s_tilde_{2k-1}(x_{2k+1})>, for as many k as x allows.
  std::vector<Rational> map_point(std::span<const Rational> x) const;
};

// Needs at least three maps. Throws PreconditionError with the 1-based index
// of the first map that breaks stability (with its successor) or has twins.
SystemReindex reindex_system(std::span<const PLMap> maps);

}  // namespace arclike
