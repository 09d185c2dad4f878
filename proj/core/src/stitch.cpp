#include "arclike/stitch.hpp"

#include "arclike/error.hpp"

namespace arclike {

bool contour_stable(const PLMap& f, const PLMap& g) {
  return radial_contour_factor(f) == radial_contour_factor(compose(f, g));
}

const char* to_string(StitchVariant v) {
  switch (v) {
    case StitchVariant::lemma: return "lemma";
    case StitchVariant::naive: return "naive";
    case StitchVariant::swapped: return "swapped";
  }
  return "lemma";
}

StitchVariant parse_stitch_variant(std::string_view name) {
  if (name == "lemma") return StitchVariant::lemma;
  if (name == "naive") return StitchVariant::naive;
  if (name == "swapped") return StitchVariant::swapped;
  throw ParseError("unknown stitch variant '" + std::string(name) + "'");
}

namespace {

void require_no_twins(const PLMap& f, const char* label, std::optional<std::size_t> index) {
  const TwinsReport tw = no_contour_twins(f);
  if (tw.ok) return;
  std::string why = tw.zero_extremal ? "0 is a local extremum"
                                     : "contour twins at " + tw.twins->first.str() + " and " +
                                           tw.twins->second.str();
  throw PreconditionError(std::string(label) + " has contour twins (" + why + ")", index);
}

}  // namespace

StitchResult stitched_factor(const PLMap& f1, const PLMap& f2, StitchVariant variant) {
  const PLMap f12 = compose(f1, f2);
  if (!contour_stable(f1, f2)) {
    throw PreconditionError("f1 and f1 o f2 have different radial contour factors");
  }
  if (variant == StitchVariant::lemma) {
    require_no_twins(f1, "f1", std::nullopt);
    require_no_twins(f2, "f2", std::nullopt);
  }
  const Rational zero;
  PLMap t1 = radial_contour_factor(f1);
  PLMap s1 = radial_meandering_factor(f1);
  PLMap s12 = radial_meandering_factor(f12);
  const PLMap s1f2 = compose(s1, f2);
  const PLMap& left = variant == StitchVariant::swapped ? s1f2 : s12;
  const PLMap& right = variant == StitchVariant::swapped ? s12 : s1f2;
  PLMap s_tilde = glue(left.restrict(left.domain().lo, zero), right.restrict(zero, right.domain().hi))
                      .with_codomain(f1.domain());
  const bool recomposes = compose(t1, s_tilde) == f12;
  return {variant, f1, f2, std::move(t1), std::move(s1), std::move(s12), std::move(s_tilde),
          recomposes};
}

StitchVerdict verify_stitch(const StitchResult& result, const PLMap& f3) {
  const PLMap h = compose(result.s_tilde, radial_contour_factor(f3));
  StitchVerdict verdict;
  for (const auto& r : radial_profile(h).regions) {
    if (r.orientation == Orientation::negative) verdict.negatives.push_back(r.corner);
  }
  if (verdict.negatives.empty()) return verdict;
  verdict.ok = false;
  verdict.witness = verdict.negatives.front();
  if (result.variant == StitchVariant::lemma && contour_stable(result.f2, f3)) {
    throw InternalConsistencyError(
        "stitched factor composed with t3 has a negative radial departure <" +
        verdict.witness->x1.str() + ", " + verdict.witness->x2.str() +
        "> although every hypothesis holds");
  }
  return verdict;
}

std::vector<Rational> SystemReindex::map_point(std::span<const Rational> x) const {
  std::vector<Rational> out;
  for (std::size_t k = 1; k <= stitches.size() && 2 * k + 1 <= x.size(); ++k) {
    out.push_back(stitches[k - 1].s_tilde(x[2 * k]));  // x is 0-based: x_{2k+1} = x[2k]
  }
  return out;
}

SystemReindex reindex_system(std::span<const PLMap> maps) {
  if (maps.size() < 3) throw PreconditionError("reindexing needs at least three maps");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const std::size_t n = i + 1;
    try {
      require_standing_hypothesis(maps[i], "reindex_system");
    } catch (const HypothesisError& e) {
      throw PreconditionError("map " + std::to_string(n) + ": " + e.what(), n);
    }
    if (i + 1 < maps.size() && !contour_stable(maps[i], maps[i + 1])) {
      throw PreconditionError("map " + std::to_string(n) + " and its composition with map " +
                                  std::to_string(n + 1) + " have different radial contour factors",
                              n);
    }
    require_no_twins(maps[i], ("map " + std::to_string(n)).c_str(), n);
  }
  SystemReindex out;
  out.original.assign(maps.begin(), maps.end());
  for (std::size_t i = 0; i + 2 < maps.size(); i += 2) {
    StitchResult st = stitched_factor(maps[i], maps[i + 1]);
    if (!st.recomposes) {
      throw InternalConsistencyError("stitched factor for map " + std::to_string(i + 1) +
                                     " does not recompose");
    }
    verify_stitch(st, maps[i + 2]);
    out.derived.push_back(compose(st.s_tilde, radial_contour_factor(maps[i + 2])));
    out.stitches.push_back(std::move(st));
  }
  return out;
}

}  // namespace arclike
