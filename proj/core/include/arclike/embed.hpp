#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "arclike/geometry.hpp"
#include "arclike/plmap.hpp"

namespace arclike {

// psi_plus: [0, r_plus] -> [0, 1] non-decreasing onto, psi_minus: [0, r_minus]
// -> [-1, 0] non-increasing onto. Every linear run takes one unit of time.
// When `reflected` is set the schedule belongs to -f (f had only negative
// radial departures). `joint_end` is where the simultaneous construction
// stops and one side alone is extended.
struct TraversalSchedule {
  PLMap psi_plus;
  PLMap psi_minus;
  Rational r_plus;
  Rational r_minus;
  Rational joint_end;
  bool reflected = false;
};

// Requires domain [-1, 1], the standing hypothesis, and radial departures of
// one orientation only (PreconditionError otherwise).
TraversalSchedule traversal_schedule(const PLMap& f);

struct ScheduleCheck {
  bool starts_at_zero = false;
  bool monotone = false;
  bool dominance = false;     // on [0, min(r_plus, r_minus)], exact
  bool plateaus_at_contour_points = false;
  bool onto = false;
  bool left_end_ok = false;   // at joint_end psi_minus sits at 0 or a negative left contour point
  bool ok() const {
    return starts_at_zero && monotone && dominance && plateaus_at_contour_points && onto &&
           left_end_ok;
  }
};

// f is the map the schedule was requested for (reflection is applied here).
ScheduleCheck check_schedule(const PLMap& f, const TraversalSchedule& s);

struct StageFlags {
  bool simple = false;
  bool boundary_contact_origin_only = false;
  bool tube_ok = false;
  bool accessible = false;
  bool all() const { return simple && boundary_contact_origin_only && tube_ok && accessible; }
  friend bool operator==(const StageFlags&, const StageFlags&) = default;
};

struct ParamMark {
  Rational x;
  double arclength;
};

struct EmbeddingStage {
  std::vector<Point> polyline;
  std::vector<double> params;  // increasing, one per vertex, from -1 to 1
  Rational epsilon;
  StageFlags valid;
  bool reflected = false;
  int attempts = 1;

  Point at(double x) const { return interpolate_by_parameter(polyline, params, x); }
  // Arclength position of each grid point k/den in [-1, 1].
  std::vector<ParamMark> param_marks(int den = 100) const;
};

EmbeddingStage tuck_embed(const PLMap& f, const Rational& eps);
EmbeddingStage refine_stage(const EmbeddingStage& prev, const PLMap& f, const Rational& eps);
std::vector<EmbeddingStage> build_embedding(std::span<const PLMap> maps, std::size_t stages,
                                            std::span<const Rational> eps_schedule);

constexpr int kValidationGrid = 1000;

// Without prev the tube is measured against (0, f(x)); with prev against
// prev(f(x)). Grid: x = -1 + 2k/kValidationGrid.
StageFlags validate_embedding(const EmbeddingStage& stage, const PLMap& f,
                              const EmbeddingStage* prev, const Rational& eps);

// Largest ||stage(x) - target(x)|| on the validation grid.
double tube_deviation(const EmbeddingStage& stage, const PLMap& f, const EmbeddingStage* prev);

nlohmann::json flags_to_json(const StageFlags& flags);
nlohmann::json stage_to_json(const EmbeddingStage& stage);
nlohmann::json chain_to_json(std::span<const EmbeddingStage> chain);

// SVG 1.1: one group per stage (last stage drawn on top) and the access arc
// as a dashed path.
std::string chain_to_svg(std::span<const EmbeddingStage> chain);

}  // namespace arclike
