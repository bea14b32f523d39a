#pragma once

// Planar primitives: points, segments, polylines with arc-length
// parametrization, and closest-point queries that return witness points.

#include <cstddef>
#include <span>
#include <vector>

namespace bsweep {

/// Absolute tolerance (meters) for geometric equality tests.
inline constexpr double kGeomTol = 1e-9;

struct Point2D {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2D&, const Point2D&) = default;
};

inline Point2D operator+(Point2D a, Point2D b) { return {a.x + b.x, a.y + b.y}; }
inline Point2D operator-(Point2D a, Point2D b) { return {a.x - b.x, a.y - b.y}; }
inline Point2D operator*(double s, Point2D a) { return {s * a.x, s * a.y}; }

double dot(Point2D a, Point2D b);
double cross(Point2D a, Point2D b);
double norm(Point2D a);
double distance(Point2D a, Point2D b);

/// Point at fraction `u` in [0, 1] between `a` and `b`.
Point2D lerp(Point2D a, Point2D b, double u);

struct Segment {
  Point2D a;
  Point2D b;

  double length() const { return distance(a, b); }
  /// Point at arc length `s` from `a`, clamped to the segment.
  Point2D point_at(double s) const;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Shortest connection between two geometric objects. Parameters are arc
/// lengths measured along each object from its start.
struct ArcWitness {
  double distance = 0.0;
  Point2D point_on_first;
  Point2D point_on_second;
  double param_first = 0.0;
  double param_second = 0.0;
};

/// Open or closed curve made of straight pieces.
///
/// Arc length is measured from vertex 0 in increasing vertex order; this is
/// the "clockwise" direction used throughout the planners. A closed polyline
/// has an implicit closing piece from the last vertex back to the first.
class Polyline {
 public:
  Polyline() = default;
  Polyline(std::vector<Point2D> vertices, bool closed);

  static Polyline from_segment(const Segment& seg);

  const std::vector<Point2D>& vertices() const { return vertices_; }
  bool closed() const { return closed_; }
  bool empty() const { return vertices_.empty(); }

  double length() const;

  /// Number of straight pieces, including the closing piece when closed.
  /// A single-vertex polyline has one degenerate piece.
  std::size_t piece_count() const;
  Segment piece(std::size_t i) const;
  /// Arc length at which piece `i` starts.
  double piece_start(std::size_t i) const;

  /// Arc length of every vertex: 0 = cum[0] <= cum[1] <= ... ; for closed
  /// curves one extra entry holds the full length.
  const std::vector<double>& cumulative() const { return cumulative_; }

 private:
  std::vector<Point2D> vertices_;
  bool closed_ = false;
  std::vector<double> cumulative_;
};

/// Point at arc length `s` along `curve`. Closed curves reduce `s` modulo
/// the curve length; open curves reject `s` outside [0, length].
Point2D arc_point(const Polyline& curve, double s);

/// Clockwise arc distance from `from` to `to` (both arc lengths). On open
/// curves this is `to - from` and requires `from <= to`.
double arc_distance(const Polyline& curve, double from, double to);

/// Waypoints of the arc from `from` to `to` in traversal order: the start
/// point, every vertex strictly inside, and the end point. On closed curves
/// the arc may wrap past vertex 0; `to` may equal `from + length`.
std::vector<Point2D> arc_waypoints(const Polyline& curve, double from,
                                   double to);

ArcWitness segment_distance(const Segment& s1, const Segment& s2);
ArcWitness polyline_distance(const Polyline& c1, const Polyline& c2);

/// Splits `seg` at the given arc lengths. Duplicates and endpoint
/// parameters produce no zero-length pieces.
std::vector<Segment> split_segment(const Segment& seg,
                                   std::span<const double> params);

/// Distance from `p` to the closest point of `seg`, with that point's
/// arc-length parameter.
struct Projection {
  double distance;
  double param;
  Point2D point;
};
Projection project_onto(const Segment& seg, Point2D p);

}  // namespace bsweep
