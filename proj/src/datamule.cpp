#include "bsweep/datamule.hpp"

#include <stdexcept>

#include "bsweep/plan.hpp"

namespace bsweep {

namespace {

VertexId intern(std::vector<Point2D>& positions, Point2D p) {
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (distance(positions[i], p) <= kGeomTol) return static_cast<VertexId>(i);
  }
  positions.push_back(p);
  return static_cast<VertexId>(positions.size() - 1);
}

}  // namespace

EndpointGraph build_g2n(std::span<const Segment> segments) {
  if (segments.empty()) throw std::invalid_argument("build_g2n: no segments");
  EndpointGraph out;
  for (const auto& s : segments) {
    const VertexId a = intern(out.positions, s.a);
    const VertexId b = intern(out.positions, s.b);
    out.segment_vertices.emplace_back(a, b);
  }
  const int n = static_cast<int>(out.positions.size());
  out.graph.vertex_count = n;

  std::vector<std::vector<int>> forced_on(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < out.segment_vertices.size(); ++i) {
    const auto [a, b] = out.segment_vertices[i];
    if (a == b) continue;  // a point segment is just its vertex
    const auto key = static_cast<std::size_t>(std::min(a, b)) * static_cast<std::size_t>(n) +
                     static_cast<std::size_t>(std::max(a, b));
    forced_on[key].push_back(static_cast<int>(i));
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double w = distance(out.positions[static_cast<std::size_t>(u)],
                                out.positions[static_cast<std::size_t>(v)]);
      const auto& segs = forced_on[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                                   static_cast<std::size_t>(v)];
      if (segs.empty()) {
        out.graph.edges.push_back({u, v, w, -1});
      } else {
        for (int s : segs) out.graph.edges.push_back({u, v, w, s});
      }
    }
  }
  return out;
}

DataMulePlan plan_mdmdg(std::span<const Segment> segments, double speed, double period) {
  if (!(speed > 0.0) || !(period > 0.0)) {
    throw std::invalid_argument("speed and period must be positive");
  }
  const EndpointGraph g2n = build_g2n(segments);
  const auto& g = g2n.graph;

  // Segment edges seed Kruskal. Segments closing a cycle among themselves
  // cannot seed a tree; they are kept in the Eulerian graph regardless.
  std::vector<Edge> forced;
  std::vector<Edge> extra;
  DisjointSets seeded(g.vertex_count);
  for (const auto& e : g.edges) {
    if (e.tag < 0) continue;
    (seeded.unite(e.u, e.v) ? forced : extra).push_back(e);
  }
  const Forest tree = kruskal_forest(g, 1, forced);

  Multigraph euler;
  euler.vertex_count = g.vertex_count;
  euler.positions = g2n.positions;
  euler.edges = tree.edges;
  euler.edges.insert(euler.edges.end(), extra.begin(), extra.end());

  DataMulePlan plan;
  plan.tree_weight = euler.total_weight();

  const auto deg = euler.degrees();
  std::vector<VertexId> odd;
  std::vector<Point2D> odd_pos;
  for (int v = 0; v < euler.vertex_count; ++v) {
    if (deg[static_cast<std::size_t>(v)] % 2 != 0) {
      odd.push_back(v);
      odd_pos.push_back(g2n.positions[static_cast<std::size_t>(v)]);
    }
  }
  const Matching matching = min_weight_perfect_matching(odd_pos);
  for (const auto& [i, j] : matching.pairs) {
    const VertexId u = odd[static_cast<std::size_t>(i)];
    const VertexId v = odd[static_cast<std::size_t>(j)];
    euler.edges.push_back({u, v, distance(g2n.positions[static_cast<std::size_t>(u)],
                                          g2n.positions[static_cast<std::size_t>(v)]),
                           -2});
  }
  plan.matching_weight = matching.weight;
  plan.exact_matching = matching.exact;

  std::vector<Point2D> pts;
  if (euler.edges.empty()) {
    pts.push_back(g2n.positions.front());
  } else {
    const ClosedWalk walk = eulerian_tour(euler, g2n.segment_vertices.front().first);
    for (std::size_t i = 0; i + 1 < walk.vertices.size(); ++i) {
      pts.push_back(g2n.positions[static_cast<std::size_t>(walk.vertices[i])]);
    }
  }
  plan.tour = Polyline(std::move(pts), true);
  plan.tour_length = plan.tour.length();
  plan.speed = speed;
  plan.period = period;
  plan.offsets = partition_offsets(plan.tour_length, speed * period);
  const int m = static_cast<int>(plan.offsets.size());
  for (int i = 0; i < m; ++i) {
    plan.fleet_cw.push_back(i);
    plan.fleet_ccw.push_back(m + i);
  }
  return plan;
}

}  // namespace bsweep
