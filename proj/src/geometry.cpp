#include "bsweep/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <tuple>

namespace bsweep {

double dot(Point2D a, Point2D b) { return a.x * b.x + a.y * b.y; }
double cross(Point2D a, Point2D b) { return a.x * b.y - a.y * b.x; }
double norm(Point2D a) { return std::hypot(a.x, a.y); }
double distance(Point2D a, Point2D b) { return norm(b - a); }

Point2D lerp(Point2D a, Point2D b, double u) {
  return {a.x + (b.x - a.x) * u, a.y + (b.y - a.y) * u};
}

Point2D Segment::point_at(double s) const {
  const double len = length();
  if (len <= 0.0) return a;
  return lerp(a, b, std::clamp(s / len, 0.0, 1.0));
}

Projection project_onto(const Segment& seg, Point2D p) {
  const Point2D d = seg.b - seg.a;
  const double len2 = dot(d, d);
  if (len2 <= 0.0) return {distance(p, seg.a), 0.0, seg.a};
  const double u = std::clamp(dot(p - seg.a, d) / len2, 0.0, 1.0);
  const Point2D q = lerp(seg.a, seg.b, u);
  return {distance(p, q), u * std::sqrt(len2), q};
}

// ---------------------------------------------------------------------------
// Polyline

Polyline::Polyline(std::vector<Point2D> vertices, bool closed)
    : vertices_(std::move(vertices)), closed_(closed) {
  for (const auto& v : vertices_) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
      throw std::invalid_argument("polyline vertex is not finite");
    }
  }
  cumulative_.reserve(vertices_.size() + 1);
  double acc = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i > 0) acc += distance(vertices_[i - 1], vertices_[i]);
    cumulative_.push_back(acc);
  }
  if (closed_ && vertices_.size() >= 2) {
    acc += distance(vertices_.back(), vertices_.front());
    cumulative_.push_back(acc);
  }
}

Polyline Polyline::from_segment(const Segment& seg) {
  return Polyline({seg.a, seg.b}, false);
}

double Polyline::length() const {
  return cumulative_.empty() ? 0.0 : cumulative_.back();
}

std::size_t Polyline::piece_count() const {
  const std::size_t n = vertices_.size();
  if (n == 0) return 0;
  if (n == 1) return 1;
  return closed_ ? n : n - 1;
}

Segment Polyline::piece(std::size_t i) const {
  const std::size_t n = vertices_.size();
  if (n == 1) return {vertices_[0], vertices_[0]};
  return {vertices_[i], vertices_[(i + 1) % n]};
}

double Polyline::piece_start(std::size_t i) const { return cumulative_[i]; }

namespace {

std::size_t locate_piece(const Polyline& curve, double s) {
  const auto& cum = curve.cumulative();
  const std::size_t pieces = curve.piece_count();
  // Largest i with cum[i] <= s, restricted to valid piece indices.
  auto it = std::upper_bound(cum.begin(), cum.begin() + static_cast<long>(pieces), s);
  if (it == cum.begin()) return 0;
  return static_cast<std::size_t>(it - cum.begin()) - 1;
}

double wrap(double s, double period) {
  double r = std::fmod(s, period);
  if (r < 0.0) r += period;
  if (r >= period) r = 0.0;
  return r;
}

}  // namespace

Point2D arc_point(const Polyline& curve, double s) {
  if (curve.empty()) throw std::invalid_argument("arc_point: empty polyline");
  const double len = curve.length();
  if (len <= 0.0) return curve.vertices().front();
  if (curve.closed()) {
    s = wrap(s, len);
  } else {
    if (s < -kGeomTol || s > len + kGeomTol) {
      throw std::invalid_argument("arc_point: s=" + std::to_string(s) +
                                  " outside [0, " + std::to_string(len) + "]");
    }
    s = std::clamp(s, 0.0, len);
  }
  const std::size_t i = locate_piece(curve, s);
  return curve.piece(i).point_at(s - curve.piece_start(i));
}

double arc_distance(const Polyline& curve, double from, double to) {
  const double len = curve.length();
  if (curve.closed()) {
    if (len <= 0.0) return 0.0;
    return wrap(to - from, len);
  }
  if (to < from - kGeomTol) {
    throw std::invalid_argument("arc_distance: open curve traversed backwards");
  }
  return std::max(0.0, to - from);
}

std::vector<Point2D> arc_waypoints(const Polyline& curve, double from,
                                   double to) {
  if (curve.empty()) throw std::invalid_argument("arc_waypoints: empty polyline");
  if (to < from - kGeomTol) {
    throw std::invalid_argument("arc_waypoints: end precedes start");
  }
  const double len = curve.length();
  std::vector<Point2D> out;
  out.push_back(arc_point(curve, from));
  if (len > 0.0) {
    const auto& verts = curve.vertices();
    const auto& cum = curve.cumulative();
    const int laps = curve.closed() ? 3 : 1;
    const double base = curve.closed() ? std::floor(from / len) * len : 0.0;
    std::vector<std::pair<double, std::size_t>> inner;
    for (int m = 0; m < laps; ++m) {
      for (std::size_t k = 0; k < verts.size(); ++k) {
        const double pos = base + cum[k] + m * len;
        if (pos > from + kGeomTol && pos < to - kGeomTol) inner.emplace_back(pos, k);
      }
    }
    std::sort(inner.begin(), inner.end());
    for (const auto& [pos, k] : inner) out.push_back(verts[k]);
  }
  out.push_back(curve.closed() || to <= len ? arc_point(curve, to)
                                            : arc_point(curve, len));
  return out;
}

// ---------------------------------------------------------------------------
// Closest points

namespace {

struct Candidate {
  double distance;
  double param_first;
  double param_second;
  Point2D p1;
  Point2D p2;
};

// Smallest distance wins; distances within tolerance tie and the
// lexicographically smallest parameter pair is kept.
bool better(const Candidate& c, const Candidate& best) {
  if (c.distance < best.distance - kGeomTol) return true;
  if (c.distance > best.distance + kGeomTol) return false;
  return std::tie(c.param_first, c.param_second) <
         std::tie(best.param_first, best.param_second);
}

ArcWitness to_witness(const Candidate& c) {
  return {c.distance, c.p1, c.p2, c.param_first, c.param_second};
}

}  // namespace

ArcWitness segment_distance(const Segment& s1, const Segment& s2) {
  const double len1 = s1.length();
  const double len2 = s2.length();

  Candidate cands[5];
  int count = 0;
  {
    const auto pr = project_onto(s2, s1.a);
    cands[count++] = {pr.distance, 0.0, pr.param, s1.a, pr.point};
  }
  {
    const auto pr = project_onto(s2, s1.b);
    cands[count++] = {pr.distance, len1, pr.param, s1.b, pr.point};
  }
  {
    const auto pr = project_onto(s1, s2.a);
    cands[count++] = {pr.distance, pr.param, 0.0, pr.point, s2.a};
  }
  {
    const auto pr = project_onto(s1, s2.b);
    cands[count++] = {pr.distance, pr.param, len2, pr.point, s2.b};
  }

  // Proper or touching crossing of non-parallel segments.
  const Point2D r = s1.b - s1.a;
  const Point2D q = s2.b - s2.a;
  const double denom = cross(r, q);
  if (len1 > 0.0 && len2 > 0.0 && std::abs(denom) > 1e-12 * len1 * len2) {
    const Point2D w = s2.a - s1.a;
    const double u = cross(w, q) / denom;
    const double v = cross(w, r) / denom;
    if (u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0) {
      const Point2D p1 = lerp(s1.a, s1.b, u);
      const Point2D p2 = lerp(s2.a, s2.b, v);
      cands[count++] = {distance(p1, p2), u * len1, v * len2, p1, p2};
    }
  }

  Candidate best = cands[0];
  for (int i = 1; i < count; ++i) {
    if (better(cands[i], best)) best = cands[i];
  }
  return to_witness(best);
}

ArcWitness polyline_distance(const Polyline& c1, const Polyline& c2) {
  if (c1.empty() || c2.empty()) {
    throw std::invalid_argument("polyline_distance: empty polyline");
  }
  Candidate best{};
  bool have = false;
  for (std::size_t i = 0; i < c1.piece_count(); ++i) {
    const Segment p = c1.piece(i);
    for (std::size_t j = 0; j < c2.piece_count(); ++j) {
      const ArcWitness w = segment_distance(p, c2.piece(j));
      const Candidate c{w.distance, c1.piece_start(i) + w.param_first,
                        c2.piece_start(j) + w.param_second, w.point_on_first,
                        w.point_on_second};
      if (!have || better(c, best)) {
        best = c;
        have = true;
      }
    }
  }
  return to_witness(best);
}

std::vector<Segment> split_segment(const Segment& seg,
                                   std::span<const double> params) {
  const double len = seg.length();
  std::vector<double> cuts;
  cuts.reserve(params.size());
  for (double p : params) {
    if (!(p >= -kGeomTol && p <= len + kGeomTol)) {
      throw std::invalid_argument("split_segment: parameter " + std::to_string(p) +
                                  " outside [0, " + std::to_string(len) + "]");
    }
    if (p > kGeomTol && p < len - kGeomTol) cuts.push_back(p);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](double a, double b) { return b - a <= kGeomTol; }),
             cuts.end());

  std::vector<Segment> out;
  out.reserve(cuts.size() + 1);
  Point2D prev = seg.a;
  for (double c : cuts) {
    const Point2D p = seg.point_at(c);
    out.push_back({prev, p});
    prev = p;
  }
  out.push_back({prev, seg.b});
  return out;
}

}  // namespace bsweep
