#include "arclike/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "arclike/rational.hpp"

namespace arclike {

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

int orient(Point a, Point b, Point c) {
  const double l = (b.x - a.x) * (c.y - a.y);
  const double r = (b.y - a.y) * (c.x - a.x);
  const double det = l - r;
  // Bound in the style of Shewchuk's ccwerrboundA, padded for the rounding
  // of the differences themselves.
  constexpr double eps = std::numeric_limits<double>::epsilon() / 2;
  const double bound = (4 + 64 * eps) * eps * (std::fabs(l) + std::fabs(r));
  if (det > bound) return 1;
  if (-det > bound) return -1;
  const Rational ax = Rational::from_double(a.x), ay = Rational::from_double(a.y);
  const Rational e = (Rational::from_double(b.x) - ax) * (Rational::from_double(c.y) - ay) -
                     (Rational::from_double(b.y) - ay) * (Rational::from_double(c.x) - ax);
  return e.sign();
}

namespace {

// c lies in the bounding box of [a, b]; with orient == 0 this means on it.
bool within_box(Point a, Point b, Point c) {
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
         c.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(Point a, Point b, Point c, Point d) {
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4 && o1 * o2 <= 0 && o3 * o4 <= 0) {
    if (o1 != 0 || o2 != 0) return true;
  }
  if (o1 == 0 && within_box(a, b, c)) return true;
  if (o2 == 0 && within_box(a, b, d)) return true;
  if (o3 == 0 && within_box(c, d, a)) return true;
  if (o4 == 0 && within_box(c, d, b)) return true;
  return false;
}

namespace {

bool lex_less(Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

struct Seg {
  Point a, b;  // a precedes b lexicographically
  std::size_t idx;
};

using Hit = std::optional<std::pair<std::size_t, std::size_t>>;

Hit hit(std::size_t i, std::size_t j) { return std::pair{std::min(i, j), std::max(i, j)}; }

bool adjacent(std::size_t i, std::size_t j) { return i + 1 == j || j + 1 == i; }

// Order of two segments crossing the sweep line, valid while no two active
// segments meet. A touch noticed on the way is recorded in `found`.
struct Below {
  const std::vector<Seg>* segs;
  Hit* found;
  bool operator()(std::size_t si, std::size_t ti) const {
    if (si == ti) return false;
    const Seg& s = (*segs)[si];
    const Seg& t = (*segs)[ti];
    const bool t_later = !lex_less(t.a, s.a);
    const Seg& base = t_later ? s : t;
    const Seg& other = t_later ? t : s;
    int o = orient(base.a, base.b, other.a);
    if (o == 0) {
      if (!adjacent(si, ti) && !*found) *found = hit(si, ti);
      o = orient(base.a, base.b, other.b);
      if (o == 0) return si < ti;
    }
    // o > 0: other lies above base
    return t_later ? o > 0 : o < 0;
  }
};

}  // namespace

std::optional<std::pair<std::size_t, std::size_t>> find_self_intersection(
    std::span<const Point> p) {
  if (p.size() < 3) {
    if (p.size() == 2 && p[0] == p[1]) return std::pair<std::size_t, std::size_t>{0, 0};
    return std::nullopt;
  }
  const std::size_t n = p.size() - 1;  // segments
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] == p[i + 1]) return std::pair{i, i};
  }
  // adjacent segments may only share their common vertex
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Point a = p[i], b = p[i + 1], c = p[i + 2];
    if (orient(a, b, c) == 0) {
      const Point u = a - b, v = c - b;
      if (u.x * v.x + u.y * v.y > 0 || within_box(b, c, a) || within_box(a, b, c)) {
        return std::pair{i, i + 1};
      }
    }
  }

  // Shamos-Hoey sweep in lexicographic order.
  std::vector<Seg> segs(n);
  struct Event {
    Point at;
    bool remove;
    std::size_t seg;
  };
  std::vector<Event> events;
  events.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    Point a = p[i], b = p[i + 1];
    if (lex_less(b, a)) std::swap(a, b);
    segs[i] = {a, b, i};
    events.push_back({a, false, i});
    events.push_back({b, true, i});
  }
  std::sort(events.begin(), events.end(), [](const Event& e, const Event& f) {
    if (e.at != f.at) return lex_less(e.at, f.at);
    if (e.remove != f.remove) return !e.remove;
    return e.seg < f.seg;
  });

  Hit found;
  std::set<std::size_t, Below> active(Below{&segs, &found});
  std::vector<std::set<std::size_t, Below>::iterator> where(n);
  auto check = [&](std::size_t i, std::size_t j) {
    if (!found && !adjacent(i, j) && segments_intersect(segs[i].a, segs[i].b, segs[j].a, segs[j].b)) {
      found = hit(i, j);
    }
  };
  std::size_t k = 0;
  while (k < events.size() && !found) {
    // a vertex may end at most the two consecutive segments through it
    std::size_t end = k;
    while (end < events.size() && events[end].at == events[k].at) ++end;
    if (end - k > 2) return hit(events[k].seg, events[k + 2].seg);
    if (end - k == 2 && !adjacent(events[k].seg, events[k + 1].seg)) {
      return hit(events[k].seg, events[k + 1].seg);
    }
    for (std::size_t e = k; e < end && !found; ++e) {
      const std::size_t i = events[e].seg;
      if (!events[e].remove) {
        const auto it = active.insert(i).first;
        where[i] = it;
        if (it != active.begin()) check(*std::prev(it), i);
        if (std::next(it) != active.end()) check(i, *std::next(it));
      } else {
        const auto it = where[i];
        if (it != active.begin() && std::next(it) != active.end()) {
          check(*std::prev(it), *std::next(it));
        }
        active.erase(it);
      }
    }
    k = end;
  }
  return found;
}

double point_segment_distance(Point p, Point a, Point b) {
  const Point d = b - a;
  const double len2 = d.x * d.x + d.y * d.y;
  double w = len2 > 0 ? ((p.x - a.x) * d.x + (p.y - a.y) * d.y) / len2 : 0.0;
  w = std::clamp(w, 0.0, 1.0);
  return distance(p, a + w * d);
}

std::vector<double> local_feature_size(std::span<const Point> p, double fallback) {
  const std::size_t n = p.size();
  std::vector<double> out(n, fallback);
  if (n < 3) return out;
  double minx = p[0].x, maxx = p[0].x, miny = p[0].y, maxy = p[0].y;
  for (const auto& q : p) {
    minx = std::min(minx, q.x);
    maxx = std::max(maxx, q.x);
    miny = std::min(miny, q.y);
    maxy = std::max(maxy, q.y);
  }
  const auto side = static_cast<long>(std::clamp(std::sqrt(static_cast<double>(n)), 1.0, 1024.0));
  const double cw = std::max(maxx - minx, 1e-300) / static_cast<double>(side);
  const double ch = std::max(maxy - miny, 1e-300) / static_cast<double>(side);
  auto cx = [&](double x) { return std::clamp(static_cast<long>((x - minx) / cw), 0L, side - 1); };
  auto cy = [&](double y) { return std::clamp(static_cast<long>((y - miny) / ch), 0L, side - 1); };
  std::vector<std::vector<std::size_t>> cells(static_cast<std::size_t>(side * side));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (long x = cx(std::min(p[i].x, p[i + 1].x)); x <= cx(std::max(p[i].x, p[i + 1].x)); ++x) {
      for (long y = cy(std::min(p[i].y, p[i + 1].y)); y <= cy(std::max(p[i].y, p[i + 1].y)); ++y) {
        cells[static_cast<std::size_t>(x * side + y)].push_back(i);
      }
    }
  }
  constexpr long kRings = 6;
  const double step = std::min(cw, ch);
  for (std::size_t v = 0; v < n; ++v) {
    const long x0 = cx(p[v].x), y0 = cy(p[v].y);
    double best = fallback;
    for (long r = 0; r <= kRings; ++r) {
      for (long x = x0 - r; x <= x0 + r; ++x) {
        for (long y = y0 - r; y <= y0 + r; ++y) {
          if (std::max(std::labs(x - x0), std::labs(y - y0)) != r) continue;
          if (x < 0 || y < 0 || x >= side || y >= side) continue;
          for (std::size_t i : cells[static_cast<std::size_t>(x * side + y)]) {
            if (i == v || i + 1 == v) continue;
            best = std::min(best, point_segment_distance(p[v], p[i], p[i + 1]));
          }
        }
      }
      if (best <= static_cast<double>(r) * step) break;
      if (r == kRings) best = std::min(best, static_cast<double>(r) * step);
    }
    out[v] = best;
  }
  return out;
}

Point interpolate_by_parameter(std::span<const Point> polyline, std::span<const double> params,
                               double t) {
  if (t <= params.front()) return polyline.front();
  if (t >= params.back()) return polyline.back();
  const auto it = std::upper_bound(params.begin(), params.end(), t);
  const std::size_t k = static_cast<std::size_t>(it - params.begin());
  const double t0 = params[k - 1], t1 = params[k];
  const double w = t1 > t0 ? (t - t0) / (t1 - t0) : 0.0;
  return polyline[k - 1] + w * (polyline[k] - polyline[k - 1]);
}

}  // namespace arclike
