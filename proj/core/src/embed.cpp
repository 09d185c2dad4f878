#include "arclike/embed.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "arclike/contour.hpp"
#include "arclike/error.hpp"
#include "arclike/radial.hpp"

namespace arclike {

namespace {

void require_embeddable(const PLMap& f, std::string_view op) {
  if (f.domain() != unit_interval()) {
    throw PreconditionError(std::string(op) + ": the map must be defined on [-1, 1]");
  }
  require_standing_hypothesis(f, op);
}

struct SideContour {
  std::vector<ContourPoint> right;  // x > 0, outward
  std::vector<ContourPoint> left;   // x < 0, outward
};

SideContour side_contours(const PLMap& g) {
  SideContour out;
  out.right = contour_points(right_half(g));
  for (auto c : contour_points(left_half(g))) {
    c.x = -c.x;
    out.left.push_back(c);
  }
  return out;
}

Rational lipschitz(const PLMap& g) {
  Rational best(0);
  const auto bp = g.breakpoints();
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    best = max(best, abs((bp[i + 1].y - bp[i].y) / (bp[i + 1].x - bp[i].x)));
  }
  return best;
}

// sup{x < beta : g(x) > c}, given g(beta) <= c and that some such x exists.
Rational last_exceedance(const PLMap& g, const Rational& beta, const Rational& c) {
  const PLMap part = g.restrict(g.domain().lo, beta);
  const auto bp = part.breakpoints();
  for (std::size_t i = bp.size() - 1; i-- > 0;) {
    if (bp[i].y > c) {
      const auto& a = bp[i];
      const auto& b = bp[i + 1];
      return a.x + (c - a.y) * (b.x - a.x) / (b.y - a.y);
    }
  }
  throw InternalConsistencyError("traversal schedule: no point above the pause level");
}

}  // namespace

TraversalSchedule traversal_schedule(const PLMap& f) {
  require_embeddable(f, "traversal_schedule");
  const RadialProfile profile = radial_profile(f);
  if (profile.has_positive && profile.has_negative) {
    throw PreconditionError(
        "traversal_schedule: radial departures of both orientations, no tuck embedding");
  }
  const bool reflected = profile.has_negative;
  const PLMap g = reflected ? negate_values(f) : f;
  const SideContour sc = side_contours(g);
  const Rational one(1), minus_one(-1);

  struct Knot {
    Rational t, p, m;
  };
  std::vector<Knot> knots{{Rational(0), Rational(0), Rational(0)}};
  auto run_plus = [&](const Rational& to) {
    const Knot k = knots.back();
    knots.push_back({k.t + 1, to, k.m});
  };
  auto run_minus = [&](const Rational& to) {
    const Knot k = knots.back();
    knots.push_back({k.t + 1, k.p, to});
  };
  const std::size_t n = sc.right.size();
  auto target = [&](std::size_t k) { return k + 1 == n ? one : sc.right[k].x; };

  bool left_done = false;
  const ContourPoint& a1 = sc.right.front();
  if (a1.value.sign() > 0) {
    run_plus(target(0));
  } else {
    if (sc.left.empty() || sc.left.front().orientation != Orientation::negative) {
      throw PreconditionError("traversal_schedule: first left contour point is not negative");
    }
    const ContourPoint& b1 = sc.left.front();
    if (sc.left.size() == 1) {
      run_minus(minus_one);
      left_done = true;
    } else {
      if (b1.value > a1.value) {
        throw PreconditionError("traversal_schedule: negative radial departure at the center");
      }
      run_minus(b1.x);
      run_plus(target(0));
    }
  }
  for (std::size_t k = 1; k < n && !left_done; ++k) {
    const Rational beta = knots.back().m;
    const Rational alpha = knots.back().p;
    const Rational next_value = sc.right[k].value;
    if (next_value >= g(beta)) {
      run_plus(target(k));
      continue;
    }
    const Rational cap = g(alpha);
    if (g.max_on(minus_one, beta) <= cap) {
      run_minus(minus_one);
      left_done = true;
      break;
    }
    const Rational xs = last_exceedance(g, beta, cap);
    const ContourPoint* pick = nullptr;
    for (const auto& c : sc.left) {
      if (c.x < beta && c.x > xs && c.value <= next_value) {
        if (!pick || c.x > pick->x) pick = &c;
      }
    }
    if (!pick) {
      throw InternalConsistencyError("traversal schedule: no left contour point to pause at");
    }
    run_minus(pick->x);
    run_plus(target(k));
  }

  TraversalSchedule s{PLMap::identity(), PLMap::identity(), Rational(0), Rational(0),
                      knots.back().t, reflected};
  std::vector<Breakpoint> plus, minus;
  for (const auto& k : knots) {
    plus.push_back({k.t, k.p});
    minus.push_back({k.t, k.m});
  }
  const Rational end = knots.back().t;
  if (plus.back().y != one) plus.push_back({end + 1, one});
  if (minus.back().y != minus_one) minus.push_back({end + 1, minus_one});
  s.r_plus = plus.back().x;
  s.r_minus = minus.back().x;
  s.psi_plus = PLMap(std::move(plus), {Rational(0), one});
  s.psi_minus = PLMap(std::move(minus), {minus_one, Rational(0)});
  return s;
}

ScheduleCheck check_schedule(const PLMap& f, const TraversalSchedule& s) {
  ScheduleCheck c;
  const PLMap g = s.reflected ? negate_values(f) : f;
  const auto pp = s.psi_plus.breakpoints();
  const auto pm = s.psi_minus.breakpoints();
  c.starts_at_zero = s.psi_plus(Rational(0)).is_zero() && s.psi_minus(Rational(0)).is_zero();
  c.monotone = true;
  for (std::size_t i = 0; i + 1 < pp.size(); ++i) c.monotone &= pp[i].y <= pp[i + 1].y;
  for (std::size_t i = 0; i + 1 < pm.size(); ++i) c.monotone &= pm[i].y >= pm[i + 1].y;
  c.onto = pp.back().y == Rational(1) && pm.back().y == Rational(-1);

  const Rational t_end = min(s.r_plus, s.r_minus);
  const PLMap hp = compose(g, s.psi_plus.restrict(Rational(0), t_end));
  const PLMap hm = compose(g, s.psi_minus.restrict(Rational(0), t_end));
  std::set<Rational> ts;
  for (const auto& b : hp.breakpoints()) ts.insert(b.x);
  for (const auto& b : hm.breakpoints()) ts.insert(b.x);
  c.dominance = std::all_of(ts.begin(), ts.end(), [&](const Rational& t) { return hp(t) >= hm(t); });

  const SideContour sc = side_contours(g);
  auto right_ok = [&](const Rational& v) {
    return v.is_zero() || std::any_of(sc.right.begin(), sc.right.end(), [&](const ContourPoint& p) {
             return p.x == v && p.orientation == Orientation::positive;
           });
  };
  auto left_ok = [&](const Rational& v) {
    return v.is_zero() || std::any_of(sc.left.begin(), sc.left.end(), [&](const ContourPoint& p) {
             return p.x == v && p.orientation == Orientation::negative;
           });
  };
  c.plateaus_at_contour_points = true;
  for (std::size_t i = 0; i + 1 < pp.size(); ++i) {
    if (pp[i].y == pp[i + 1].y) c.plateaus_at_contour_points &= right_ok(pp[i].y);
  }
  for (std::size_t i = 0; i + 1 < pm.size(); ++i) {
    if (pm[i].y == pm[i + 1].y) c.plateaus_at_contour_points &= left_ok(pm[i].y);
  }
  const Rational m_end = s.psi_minus(min(s.joint_end, s.r_minus));
  c.left_end_ok = m_end == Rational(-1) || left_ok(m_end);
  return c;
}

// ---- tuck pictures ----

namespace {

struct TuckPicture {
  std::vector<Rational> params;
  std::vector<Rational> xs;
  std::vector<Rational> ys;
};

// Strictly increasing stand-in for the inverse of a monotone schedule, as
// (u, t) vertices with u = |psi|. A pause at u over [t0, t1] becomes a ramp
// across [u - e, u + e].
std::vector<Breakpoint> ramped_inverse(const PLMap& psi, bool negate, const Rational& eta) {
  struct Group {
    Rational u, t_lo, t_hi;
  };
  std::vector<Group> groups;
  for (const auto& b : psi.breakpoints()) {
    const Rational u = negate ? -b.y : b.y;
    if (!groups.empty() && groups.back().u == u) {
      groups.back().t_hi = b.x;
    } else {
      groups.push_back({u, b.x, b.x});
    }
  }
  std::vector<Breakpoint> out;
  const std::size_t m = groups.size() - 1;
  for (std::size_t i = 0; i <= m; ++i) {
    const Group& g = groups[i];
    if (g.t_lo == g.t_hi) {
      out.push_back({g.u, g.t_lo});
      continue;
    }
    Rational gap(1);
    if (i > 0) gap = min(gap, g.u - groups[i - 1].u);
    if (i < m) gap = min(gap, groups[i + 1].u - g.u);
    const Rational e = min(eta, gap / 4);
    if (i == 0) {
      out.push_back({g.u, g.t_lo});
    } else {
      const Group& p = groups[i - 1];
      out.push_back({g.u - e, g.t_lo - (g.t_lo - p.t_hi) * e / (g.u - p.u)});
    }
    if (i == m) {
      out.push_back({g.u, g.t_hi});
    } else {
      const Group& nx = groups[i + 1];
      out.push_back({g.u + e, g.t_hi + (nx.t_lo - g.t_hi) * e / (nx.u - g.u)});
    }
  }
  return out;
}

TuckPicture tuck_picture(const PLMap& g, const TraversalSchedule& s, const Rational& eps,
                         const Rational& eta) {
  const Rational delta = eps / 4;
  const Rational scale = eps / (4 * max(s.r_plus, s.r_minus));
  const auto vp = ramped_inverse(s.psi_plus, false, eta);
  const auto vm = ramped_inverse(s.psi_minus, true, eta);
  const PLMap tau_plus(vp, {Rational(0), s.r_plus});
  const PLMap tau_minus(vm, {Rational(0), s.r_minus});

  std::set<Rational> params;
  for (const auto& b : g.breakpoints()) params.insert(b.x);
  for (const auto& v : vp) params.insert(v.x);
  for (const auto& v : vm) params.insert(-v.x);
  // Extra vertices just beside each turning point: once times are spread
  // out below, the two arms of a fold separate right at its tip.
  const auto& bp = g.breakpoints();
  std::vector<Rational> flank;
  for (std::size_t k = 1; k + 1 < bp.size(); ++k) {
    const Rational dl = bp[k].y - bp[k - 1].y, dr = bp[k + 1].y - bp[k].y;
    if (dl.sign() * dr.sign() >= 0) continue;
    const Rational& x = bp[k].x;
    auto it = params.find(x);
    const Rational lo = *std::prev(it), hi = *std::next(it);
    const Rational e = min(eta / 8, min(x - lo, hi - x) / 4);
    flank.push_back(x - e);
    flank.push_back(x + e);
  }
  params.insert(flank.begin(), flank.end());

  // Any increasing relabelling of time keeps the picture embedded; spacing
  // the vertex times evenly keeps neighbouring strands apart.
  std::vector<Rational> times;
  for (const auto& x : params) times.push_back(x.sign() >= 0 ? tau_plus(x) : tau_minus(-x));
  std::vector<Rational> levels(times);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  const Rational top = max(s.r_plus, s.r_minus);
  const Rational steps(static_cast<std::int64_t>(levels.size() - 1));

  TuckPicture pic;
  std::size_t k = 0;
  for (const auto& x : params) {
    const auto rank = std::lower_bound(levels.begin(), levels.end(), times[k++]) - levels.begin();
    Rational y = g(x) + delta * x;
    if (s.reflected) y = -y;
    pic.params.push_back(x);
    pic.xs.push_back(scale * top * Rational(static_cast<std::int64_t>(rank)) / steps);
    pic.ys.push_back(std::move(y));
  }
  return pic;
}

EmbeddingStage stage_from_picture(const TuckPicture& pic) {
  EmbeddingStage st;
  for (std::size_t i = 0; i < pic.params.size(); ++i) {
    st.polyline.push_back({pic.xs[i].to_double(), pic.ys[i].to_double()});
    st.params.push_back(pic.params[i].to_double());
  }
  return st;
}

std::string describe(const StageFlags& f) {
  std::string s;
  auto add = [&](bool ok, const char* name) {
    if (!ok) s += std::string(s.empty() ? "" : ", ") + name;
  };
  add(f.simple, "simple");
  add(f.boundary_contact_origin_only, "boundary contact");
  add(f.tube_ok, "tube");
  add(f.accessible, "accessible");
  return s.empty() ? "none" : s;
}

struct TuckResult {
  TuckPicture picture;
  EmbeddingStage stage;
  StageFlags last;
  int attempts = 0;
  bool ok = false;
};

constexpr int kMaxRetries = 20;

TuckResult try_tuck(const PLMap& f, const TraversalSchedule& s, const Rational& eps) {
  const PLMap g = s.reflected ? negate_values(f) : f;
  Rational eta = eps / (8 * (lipschitz(g) + 1));
  TuckResult r;
  for (int attempt = 0; attempt <= kMaxRetries; ++attempt, eta /= 2) {
    r.attempts = attempt + 1;
    r.picture = tuck_picture(g, s, eps, eta);
    r.stage = stage_from_picture(r.picture);
    r.stage.epsilon = eps;
    r.stage.reflected = s.reflected;
    r.stage.attempts = r.attempts;
    r.last = validate_embedding(r.stage, f, nullptr, eps);
    r.stage.valid = r.last;
    if (r.last.all()) {
      r.ok = true;
      return r;
    }
  }
  return r;
}

// Offset chart around a stage: (u, v) goes to the point at parameter v pushed
// by (u / width) * scale along the vertex offsets (miter directions)
// interpolated linearly, on the side of the curve away from the access arc.
// Each cell [p_i, p_{i+1}] is a bilinear patch, injective when its quad is
// convex. Images of segments are parabolic arcs, flattened to a tolerance
// well below the offset scale.
class TubeChart {
 public:
  // Offsets at each vertex are capped by the local feature size, by the
  // incident segment lengths, and by `bound`. Sharp corners that open towards
  // the chart side get a round join: a few zero-length cells at the corner
  // whose offsets sweep from one normal to the other, squeezed into a short
  // parameter window so the base curve stays within bound / 2 of prev.
  TubeChart(const EmbeddingStage& prev, double bound) {
    const std::vector<double>& pp = prev.params;
    const std::vector<Point>& pv = prev.polyline;
    const std::size_t z = static_cast<std::size_t>(
        std::find(pp.begin(), pp.end(), 0.0) - pp.begin());
    const Point into = unit(pv[z - 1]) + unit(pv[z + 1]);
    const Point travel = pv[z + 1] - pv[z - 1];
    side_ = travel.x * into.y - travel.y * into.x > 0 ? 1.0 : -1.0;
    const std::size_t n = pv.size();
    const std::vector<double> lfs = local_feature_size(pv, bound);
    auto push = [&](double t, Point q, Point off) {
      p_.push_back(t);
      pts_.push_back(q);
      offsets_.push_back(off);
    };
    for (std::size_t i = 0; i < n; ++i) {
      const Point n1 = i > 0 ? normal(pv[i - 1], pv[i]) : normal(pv[i], pv[i + 1]);
      const Point n2 = i + 1 < n ? normal(pv[i], pv[i + 1]) : n1;
      double incident = bound;
      if (i > 0) incident = std::min(incident, distance(pv[i - 1], pv[i]));
      if (i + 1 < n) incident = std::min(incident, distance(pv[i], pv[i + 1]));
      const double room = std::min({bound, lfs[i] / 4, incident / 2});
      if (i == z) {
        push(pp[i], pv[i], room * unit(into));
        continue;
      }
      const double cross = n1.x * n2.y - n1.y * n2.x;
      const double turn = std::atan2(cross, n1.x * n2.x + n1.y * n2.y);
      const bool outer = i > 0 && i + 1 < n && opens_outward(pv[i - 1], pv[i], pv[i + 1]);
      if (outer && std::fabs(turn) > kFanAngle) {
        const double left = (pp[i] - pp[i - 1]) *
                            std::min(0.25, bound / (2 * distance(pv[i - 1], pv[i])));
        const double right = (pp[i + 1] - pp[i]) *
                             std::min(0.25, bound / (2 * distance(pv[i], pv[i + 1])));
        const int k = static_cast<int>(std::ceil(std::fabs(turn) / kFanAngle));
        for (int j = 0; j <= k; ++j) {
          const double w = static_cast<double>(j) / k;
          const double ang = turn * w;
          const Point dir{n1.x * std::cos(ang) - n1.y * std::sin(ang),
                          n1.x * std::sin(ang) + n1.y * std::cos(ang)};
          const double t = j == k ? pp[i] + right : pp[i] - left + w * (left + right);
          push(t, pv[i], room * dir);
        }
        continue;
      }
      const Point sum = n1 + n2;
      const double c = 1 + (n1.x * n2.x + n1.y * n2.y);
      const double len = std::hypot(sum.x, sum.y);
      Point m;
      if (c * kMiterCap > len) {
        m = (1 / c) * sum;
      } else {
        const Point dir = len > 1e-12 ? (1 / len) * sum : unit(pv[i] - pv[i - 1]);
        m = kMiterCap * dir;
      }
      // normal thickness t, reaching along the miter up to half an incident
      const double reach = std::hypot(m.x, m.y);
      const double t = std::min(bound, lfs[i] / 4);
      push(pp[i], pv[i], (std::min(t * reach, incident / 2) / reach) * m);
    }
  }

  void set_scale(double width, double height) {
    width_ = width;
    h_ = height;
  }

  // Every quad is strictly convex with one orientation and the boundary of
  // the tube is a simple closed polygon.
  bool embedded() const {
    const std::size_t n = pts_.size();
    std::vector<Point> q(n);
    for (std::size_t i = 0; i < n; ++i) q[i] = pts_[i] + h_ * offsets_[i];
    int sign = 0;
    auto agree = [&](int o) {
      if (o == 0 || (sign != 0 && o != sign)) return false;
      sign = o;
      return true;
    };
    std::vector<Point> loop;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const Point a = pts_[i], b = pts_[i + 1], c = q[i + 1], d = q[i];
      if (a == b) {
        if (!agree(orient(b, c, d))) return false;
        continue;
      }
      for (int o : {orient(a, b, c), orient(b, c, d), orient(c, d, a), orient(d, a, b)}) {
        if (!agree(o)) return false;
      }
    }
    for (const Point& p : pts_) {
      if (loop.empty() || !(loop.back() == p)) loop.push_back(p);
    }
    loop.insert(loop.end(), q.rbegin(), q.rend());
    if (find_self_intersection(loop)) return false;
    const Point a = q.front(), b = pts_.front();
    for (std::size_t i = 1; i + 2 < loop.size(); ++i) {
      if (segments_intersect(a, b, loop[i], loop[i + 1])) return false;
    }
    return true;
  }

  // Appends the image of the source segment from a to b (excluding a).
  void map_segment(Point a, double ta, Point b, double tb, EmbeddingStage& out) const {
    std::vector<double> ws;
    const double lo = std::min(a.y, b.y), hi = std::max(a.y, b.y);
    auto first = std::upper_bound(p_.begin(), p_.end(), lo);
    for (auto it = first; it != p_.end() && *it < hi; ++it) ws.push_back((*it - a.y) / (b.y - a.y));
    if (b.y < a.y) std::reverse(ws.begin(), ws.end());
    ws.push_back(1.0);
    auto at = [&](double w) { return w == 1.0 ? tb : ta + w * (tb - ta); };
    double w0 = 0;
    for (double w1 : ws) {
      if (w1 <= w0) continue;
      const std::size_t i = cell(lerp(a, b, 0.5 * (w0 + w1)).y);
      const Point s0 = lerp(a, b, w0), s1 = lerp(a, b, w1);
      // the only quadratic term is a * sigma * scale * (o_{i+1} - o_i)
      const Point dm = offsets_[i + 1] - offsets_[i];
      const double curve = std::fabs((s1.x - s0.x) / width_ * (sigma(s1.y, i) - sigma(s0.y, i))) *
                           h_ * std::hypot(dm.x, dm.y);
      const double floor_len =
          kFlatness * h_ * std::max(1e-300, std::min(norm(offsets_[i]), norm(offsets_[i + 1])));
      const int pieces = static_cast<int>(
          std::clamp(std::ceil(std::sqrt(curve / (4 * floor_len))), 1.0, 64.0));
      for (int k = 1; k <= pieces; ++k) {
        const double w = k == pieces ? w1 : w0 + (w1 - w0) * k / pieces;
        emit(lerp(a, b, w), i, at(w), out);
      }
      w0 = w1;
    }
  }

  Point map_point(Point s) const { return apply(s, cell(s.y)); }

 private:
  static constexpr double kMiterCap = 1e6;
  static constexpr double kFlatness = 1e-4;
  static constexpr double kFanAngle = 0.5;

  static Point unit(Point d) { return (1 / std::hypot(d.x, d.y)) * d; }
  static Point lerp(Point a, Point b, double w) { return a + w * (b - a); }
  // true when the turn at b leaves a reflex angle on the chart side
  bool opens_outward(Point a, Point b, Point c) const {
    const Point d1 = b - a, d2 = c - b;
    return (d1.x * d2.y - d1.y * d2.x) * side_ < 0;
  }
  Point normal(Point a, Point b) const {
    const Point d = unit(b - a);
    return side_ * Point{-d.y, d.x};
  }
  std::size_t cell(double v) const {
    const auto it = std::upper_bound(p_.begin(), p_.end(), v);
    const auto k = static_cast<std::size_t>(it - p_.begin());
    return std::clamp<std::size_t>(k, 1, p_.size() - 1) - 1;
  }
  double sigma(double v, std::size_t i) const { return (v - p_[i]) / (p_[i + 1] - p_[i]); }
  static double norm(Point d) { return std::hypot(d.x, d.y); }
  Point apply(Point s, std::size_t i) const {
    const double a = s.x / width_, sg = sigma(s.y, i);
    const Point base = pts_[i] + sg * (pts_[i + 1] - pts_[i]);
    return base + (a * h_) * (offsets_[i] + sg * (offsets_[i + 1] - offsets_[i]));
  }
  void emit(Point s, std::size_t i, double t, EmbeddingStage& out) const {
    const Point q = apply(s, i);
    if (q == out.polyline.back()) return;
    out.polyline.push_back(q);
    out.params.push_back(t);
  }

  std::vector<double> p_;
  std::vector<Point> pts_;
  std::vector<Point> offsets_;
  double width_ = 1;
  double h_ = 0;
  double side_ = 1;
};

constexpr int kMaxHeightHalvings = 80;

}  // namespace

std::vector<ParamMark> EmbeddingStage::param_marks(int den) const {
  std::vector<double> arc(polyline.size(), 0.0);
  for (std::size_t i = 1; i < polyline.size(); ++i) {
    arc[i] = arc[i - 1] + distance(polyline[i - 1], polyline[i]);
  }
  std::vector<ParamMark> out;
  for (int k = -den; k <= den; ++k) {
    const Rational x(k, den);
    const double t = x.to_double();
    const auto it = std::lower_bound(params.begin(), params.end(), t);
    double s;
    if (it == params.begin()) {
      s = 0;
    } else if (it == params.end()) {
      s = arc.back();
    } else {
      const auto j = static_cast<std::size_t>(it - params.begin());
      const double w = (t - params[j - 1]) / (params[j] - params[j - 1]);
      s = arc[j - 1] + w * (arc[j] - arc[j - 1]);
    }
    out.push_back({x, s});
  }
  return out;
}

EmbeddingStage tuck_embed(const PLMap& f, const Rational& eps) {
  if (eps.sign() <= 0) throw PreconditionError("tuck_embed: eps must be positive");
  const TraversalSchedule s = traversal_schedule(f);
  TuckResult r = try_tuck(f, s, eps);
  if (!r.ok) {
    throw ConstructionError("tuck_embed: validation failed after " + std::to_string(r.attempts) +
                            " attempts (ramp width halved each time); failing checks: " +
                            describe(r.last));
  }
  return r.stage;
}

EmbeddingStage refine_stage(const EmbeddingStage& prev, const PLMap& f, const Rational& eps) {
  if (!prev.valid.all()) {
    throw PreconditionError("refine_stage: previous stage failed validation (" +
                            describe(prev.valid) + ")");
  }
  if (eps.sign() <= 0) throw PreconditionError("refine_stage: eps must be positive");
  const TraversalSchedule s = traversal_schedule(f);

  TubeChart chart(prev, eps.to_double() / 4);
  double height = 1;
  int halvings = 0;
  for (;; height /= 2, ++halvings) {
    if (halvings > kMaxHeightHalvings) {
      throw RefineError("refine_stage: tube width underflow around the previous stage; try a smaller upstream eps");
    }
    chart.set_scale(1, height);
    if (chart.embedded()) break;
  }

  Rational inner = eps / 4;
  std::string last = "none";
  for (int attempt = 0; attempt <= kMaxRetries; ++attempt, inner /= 2) {
    const TuckResult t = try_tuck(f, s, inner);
    if (!t.ok) {
      last = "inner tuck: " + describe(t.last);
      continue;
    }
    // keep the source heights inside [-1, 1], the parameter range of prev
    const double shrink = 1 / (1 + (inner / 4).to_double());
    std::vector<Point> src = t.stage.polyline;
    double width = 0;
    for (auto& q : src) {
      q.y *= shrink;
      width = std::max(width, q.x);
    }
    const auto& par = t.stage.params;
    chart.set_scale(width, height);
    EmbeddingStage st;
    st.epsilon = eps;
    st.reflected = s.reflected;
    st.attempts = attempt + 1;
    st.polyline.push_back(chart.map_point(src[0]));
    st.params.push_back(par[0]);
    for (std::size_t i = 1; i < src.size(); ++i) {
      chart.map_segment(src[i - 1], par[i - 1], src[i], par[i], st);
    }
    st.valid = validate_embedding(st, f, &prev, eps);
    if (st.valid.all()) return st;
    last = describe(st.valid);
  }
  throw RefineError("refine_stage: no valid refinement after " + std::to_string(kMaxRetries + 1) +
                    " halvings of the inner eps (last failing checks: " + last +
                    "); the previous stage is too convoluted for this eps, try a smaller upstream eps");
}

std::vector<EmbeddingStage> build_embedding(std::span<const PLMap> maps, std::size_t stages,
                                            std::span<const Rational> eps_schedule) {
  if (stages == 0) throw PreconditionError("build_embedding: at least one stage is required");
  if (maps.size() < stages) throw PreconditionError("build_embedding: fewer maps than stages");
  if (eps_schedule.size() < stages) {
    throw PreconditionError("build_embedding: eps schedule shorter than the number of stages");
  }
  Rational total(0);
  for (std::size_t k = 0; k < stages; ++k) {
    if (eps_schedule[k].sign() <= 0) {
      throw PreconditionError("build_embedding: eps " + std::to_string(k + 1) + " is not positive",
                              k + 1);
    }
    total += eps_schedule[k];
  }
  if (total >= Rational(1)) {
    throw PreconditionError("build_embedding: eps budget must sum to less than 1 (access arc length)");
  }
  for (std::size_t k = 0; k < stages; ++k) {
    try {
      traversal_schedule(maps[k]);
    } catch (const HypothesisError& e) {
      throw PreconditionError("map " + std::to_string(k + 1) + ": " + e.what(), k + 1);
    } catch (const PreconditionError& e) {
      throw PreconditionError("map " + std::to_string(k + 1) + ": " + e.what(), k + 1);
    }
  }
  std::vector<EmbeddingStage> chain;
  for (std::size_t k = 0; k < stages; ++k) {
    const std::string tag = "stage " + std::to_string(k + 1) + ": ";
    try {
      chain.push_back(k == 0 ? tuck_embed(maps[0], eps_schedule[0])
                             : refine_stage(chain.back(), maps[k], eps_schedule[k]));
    } catch (const ConstructionError& e) {
      throw ConstructionError(tag + e.what(), k + 1);
    } catch (const RefineError& e) {
      throw RefineError(tag + e.what());
    }
  }
  return chain;
}

// ---- validation ----

double tube_deviation(const EmbeddingStage& stage, const PLMap& f, const EmbeddingStage* prev) {
  double worst = 0;
  for (int k = 0; k <= kValidationGrid; ++k) {
    const Rational x = Rational(-1) + Rational(2 * k, kValidationGrid);
    const double fx = f(x).to_double();
    const Point target = prev ? prev->at(fx) : Point{0, fx};
    worst = std::max(worst, distance(stage.at(x.to_double()), target));
  }
  return worst;
}

StageFlags validate_embedding(const EmbeddingStage& stage, const PLMap& f,
                              const EmbeddingStage* prev, const Rational& eps) {
  StageFlags fl;
  const auto& p = stage.polyline;
  if (p.size() < 2 || p.size() != stage.params.size()) return fl;
  fl.simple = is_simple(p);

  const Point origin{0, 0};
  std::size_t on_axis = 0;
  bool origin_at_zero = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].x <= 0) {
      ++on_axis;
      origin_at_zero = p[i] == origin && stage.params[i] == 0.0;
    }
  }
  fl.boundary_contact_origin_only = on_axis == 1 && origin_at_zero;

  const Point a{-1, 0};
  fl.accessible = true;
  for (std::size_t i = 0; i + 1 < p.size() && fl.accessible; ++i) {
    const Point u = p[i], v = p[i + 1];
    if (!segments_intersect(u, v, a, origin)) continue;
    const bool touches_origin_only =
        (u == origin && !(orient(a, origin, v) == 0 && v.x < 0)) ||
        (v == origin && !(orient(a, origin, u) == 0 && u.x < 0));
    fl.accessible = touches_origin_only;
  }

  fl.tube_ok = f.domain() == unit_interval() && tube_deviation(stage, f, prev) < eps.to_double();
  return fl;
}

// ---- output ----

nlohmann::json flags_to_json(const StageFlags& f) {
  return {{"simple", f.simple},
          {"boundary_contact_origin_only", f.boundary_contact_origin_only},
          {"tube_ok", f.tube_ok},
          {"accessible", f.accessible}};
}

nlohmann::json stage_to_json(const EmbeddingStage& s) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& q : s.polyline) pts.push_back({q.x, q.y});
  nlohmann::json marks = nlohmann::json::array();
  for (const auto& m : s.param_marks()) marks.push_back({{"x", m.x.str()}, {"arclength", m.arclength}});
  return {{"epsilon", s.epsilon.str()},
          {"reflected", s.reflected},
          {"attempts", s.attempts},
          {"valid", flags_to_json(s.valid)},
          {"points", std::move(pts)},
          {"params", s.params},
          {"param_marks", std::move(marks)}};
}

nlohmann::json chain_to_json(std::span<const EmbeddingStage> chain) {
  nlohmann::json stages = nlohmann::json::array();
  for (const auto& s : chain) stages.push_back(stage_to_json(s));
  return {{"access_arc", {{-1.0, 0.0}, {0.0, 0.0}}}, {"stages", std::move(stages)}};
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string chain_to_svg(std::span<const EmbeddingStage> chain) {
  double minx = -1, maxx = 0, miny = -0.1, maxy = 0.1;
  for (const auto& s : chain) {
    for (const auto& q : s.polyline) {
      minx = std::min(minx, q.x);
      maxx = std::max(maxx, q.x);
      miny = std::min(miny, q.y);
      maxy = std::max(maxy, q.y);
    }
  }
  const double pad = 0.05 * std::max(maxx - minx, maxy - miny);
  minx -= pad;
  maxx += pad;
  miny -= pad;
  maxy += pad;
  const double w = maxx - minx, h = maxy - miny;
  const double stroke = std::max(w, h) / 600;
  static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                 "#9467bd", "#8c564b", "#e377c2", "#17becf"};
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\""
      << static_cast<int>(std::lround(800 * h / w)) << "\" viewBox=\"" << num(minx) << ' '
      << num(-maxy) << ' ' << num(w) << ' ' << num(h) << "\">\n";
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const bool last = k + 1 == chain.size();
    out << "  <g id=\"stage-" << k + 1 << "\" fill=\"none\" stroke=\"" << colors[k % 8]
        << "\" stroke-width=\"" << num(last ? 1.5 * stroke : stroke) << "\""
        << (last ? "" : " opacity=\"0.45\"") << ">\n    <path d=\"";
    const auto& p = chain[k].polyline;
    for (std::size_t i = 0; i < p.size(); ++i) {
      out << (i == 0 ? "M" : " L") << num(p[i].x) << ',' << num(-p[i].y);
    }
    out << "\"/>\n  </g>\n";
  }
  out << "  <g id=\"access-arc\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" << num(stroke)
      << "\" stroke-dasharray=\"" << num(4 * stroke) << ',' << num(3 * stroke)
      << "\">\n    <path d=\"M-1.000000,0.000000 L0.000000,0.000000\"/>\n  </g>\n";
  out << "  <circle cx=\"0\" cy=\"0\" r=\"" << num(2 * stroke) << "\" fill=\"#000000\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace arclike
