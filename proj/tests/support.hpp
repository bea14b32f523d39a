#pragma once

// Test-only oracles and random instance helpers. None of these share code
// with the library implementations they check.

#include <algorithm>
#include <bit>
#include <tuple>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <vector>

#include "bsweep/geometry.hpp"
#include "bsweep/graph.hpp"

namespace testing {

using bsweep::Point2D;
using bsweep::Polyline;
using bsweep::Segment;

inline double uni(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Point2D rand_point(std::mt19937_64& rng, double lo = 0.0, double hi = 200.0) {
  return {uni(rng, lo, hi), uni(rng, lo, hi)};
}

inline Segment rand_segment(std::mt19937_64& rng, double lo = 0.0, double hi = 200.0) {
  return {rand_point(rng, lo, hi), rand_point(rng, lo, hi)};
}

/// Star-shaped closed polyline around `centre`.
inline Polyline rand_closed_polyline(std::mt19937_64& rng, Point2D centre, double rmin, double rmax,
                                     int min_vertices = 3, int max_vertices = 9) {
  const int k = std::uniform_int_distribution<int>(min_vertices, max_vertices)(rng);
  std::vector<double> angles;
  for (int i = 0; i < k; ++i) angles.push_back(uni(rng, 0.0, 2.0 * std::numbers::pi));
  std::sort(angles.begin(), angles.end());
  std::vector<Point2D> v;
  for (double a : angles) {
    const double r = uni(rng, rmin, rmax);
    v.push_back({centre.x + r * std::cos(a), centre.y + r * std::sin(a)});
  }
  return Polyline(v, true);
}

inline double eval_dist(const Segment& s1, const Segment& s2, double u, double w) {
  const Point2D p{s1.a.x + u * (s1.b.x - s1.a.x), s1.a.y + u * (s1.b.y - s1.a.y)};
  const Point2D q{s2.a.x + w * (s2.b.x - s2.a.x), s2.a.y + w * (s2.b.y - s2.a.y)};
  return std::hypot(p.x - q.x, p.y - q.y);
}

/// Distance from `p` to the segment by clamped projection.
inline double point_segment_distance(Point2D p, const Segment& s) {
  const double dx = s.b.x - s.a.x, dy = s.b.y - s.a.y;
  const double l2 = dx * dx + dy * dy;
  const double w = l2 > 0.0 ? std::clamp(((p.x - s.a.x) * dx + (p.y - s.a.y) * dy) / l2, 0.0, 1.0) : 0.0;
  return eval_dist(Segment{p, p}, s, 0.0, w);
}

/// f(u) = distance from s1(u) to s2 is convex, so a coarse scan followed by
/// ternary search around the best sample finds the global minimum.
inline double grid_segment_distance(const Segment& s1, const Segment& s2, int grid = 400) {
  auto f = [&](double u) { return point_segment_distance(lerp(s1.a, s1.b, u), s2); };
  int best = 0;
  for (int i = 1; i <= grid; ++i) {
    if (f(double(i) / grid) < f(double(best) / grid)) best = i;
  }
  double lo = std::max(0.0, double(best - 1) / grid), hi = std::min(1.0, double(best + 1) / grid);
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (f(m1) <= f(m2)) hi = m2;
    else lo = m1;
  }
  return std::min({f(lo), f(0.0), f(1.0), f(double(best) / grid)});
}

/// Minimum weight over every acyclic edge subset with exactly
/// vertex_count - k edges that contains all `forced` edge indices.
/// Returns +inf when no such forest exists. Exponential; tiny graphs only.
inline double brute_forest_weight(const bsweep::WeightedGraph& g, int k,
                                  const std::vector<int>& forced = {}) {
  const int m = static_cast<int>(g.edges.size());
  const int need = g.vertex_count - k;
  double best = std::numeric_limits<double>::infinity();
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != need) continue;
    bool ok = true;
    for (int f : forced) ok = ok && ((mask >> f) & 1u);
    if (!ok) continue;
    std::vector<int> parent(static_cast<std::size_t>(g.vertex_count));
    for (int i = 0; i < g.vertex_count; ++i) parent[static_cast<std::size_t>(i)] = i;
    std::function<int(int)> root = [&](int x) {
      return parent[static_cast<std::size_t>(x)] == x ? x : root(parent[static_cast<std::size_t>(x)]);
    };
    double w = 0.0;
    for (int e = 0; e < m && ok; ++e) {
      if (!((mask >> e) & 1u)) continue;
      const int a = root(g.edges[static_cast<std::size_t>(e)].u);
      const int b = root(g.edges[static_cast<std::size_t>(e)].v);
      if (a == b) ok = false;
      parent[static_cast<std::size_t>(a)] = b;
      w += g.edges[static_cast<std::size_t>(e)].weight;
    }
    if (ok) best = std::min(best, w);
  }
  return best;
}

/// Top-down memoised matching over subsets: match the first free point with
/// every other free point.
inline double dp_matching_weight(const std::vector<Point2D>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<double> memo(std::size_t{1} << n, -1.0);
  std::function<double(unsigned)> solve = [&](unsigned used) -> double {
    if (used == (1u << n) - 1u) return 0.0;
    double& slot = memo[used];
    if (slot >= 0.0) return slot;
    int i = 0;
    while ((used >> i) & 1u) ++i;
    double best = std::numeric_limits<double>::infinity();
    for (int j = i + 1; j < n; ++j) {
      if ((used >> j) & 1u) continue;
      const double d = std::hypot(pts[static_cast<std::size_t>(i)].x - pts[static_cast<std::size_t>(j)].x,
                                  pts[static_cast<std::size_t>(i)].y - pts[static_cast<std::size_t>(j)].y);
      best = std::min(best, d + solve(used | (1u << i) | (1u << j)));
    }
    slot = best;
    return best;
  };
  return solve(0u);
}

/// Every perfect matching enumerated explicitly.
inline double enumerate_matching_weight(std::vector<int> free, const std::vector<Point2D>& pts) {
  if (free.empty()) return 0.0;
  const int i = free.front();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < free.size(); ++k) {
    std::vector<int> rest;
    for (std::size_t r = 1; r < free.size(); ++r) {
      if (r != k) rest.push_back(free[r]);
    }
    const int j = free[k];
    const double d = std::hypot(pts[static_cast<std::size_t>(i)].x - pts[static_cast<std::size_t>(j)].x,
                                pts[static_cast<std::size_t>(i)].y - pts[static_cast<std::size_t>(j)].y);
    best = std::min(best, d + enumerate_matching_weight(rest, pts));
  }
  return best;
}

/// Undirected edge key with multiplicity-friendly ordering.
inline std::tuple<int, int, long long> edge_key(const bsweep::Edge& e) {
  return {std::min(e.u, e.v), std::max(e.u, e.v), static_cast<long long>(std::llround(e.weight * 1e9))};
}

/// Random tree on n vertices with weights in (0, 10).
inline bsweep::Forest rand_tree(std::mt19937_64& rng, int n) {
  bsweep::Forest f;
  f.vertex_count = n;
  f.component_count = 1;
  for (int v = 1; v < n; ++v) {
    const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    f.edges.push_back({u, v, uni(rng, 0.1, 10.0), -1});
  }
  return f;
}

}  // namespace testing
