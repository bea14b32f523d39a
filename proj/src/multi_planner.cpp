#include "bsweep/multi_planner.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <stdexcept>
#include <string>

namespace bsweep {

namespace {

void validate_inputs(std::span<const Polyline> curves, double speed, double period) {
  if (curves.empty()) throw std::invalid_argument("no curves given");
  for (const auto& c : curves) {
    if (c.empty()) throw std::invalid_argument("curve without vertices");
  }
  if (!(speed > 0.0) || !(period > 0.0)) {
    throw std::invalid_argument("speed and period must be positive");
  }
}

// Sorted, deduplicated arc positions at which a curve is cut into skeleton
// pieces: its own vertices plus connector attachment points.
std::vector<double> breakpoints(const Polyline& curve, std::vector<double> attach) {
  const double len = curve.length();
  const auto& cum = curve.cumulative();
  std::vector<double> bp(cum.begin(), cum.begin() + static_cast<long>(curve.vertices().size()));
  for (double p : attach) {
    if (curve.closed() && p >= len - kGeomTol) p = 0.0;
    bp.push_back(std::clamp(p, 0.0, len));
  }
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end(),
                       [](double a, double b) { return b - a <= kGeomTol; }),
           bp.end());
  return bp;
}

std::size_t nearest_breakpoint(const std::vector<double>& bp, const Polyline& curve, double p) {
  if (curve.closed() && p >= curve.length() - kGeomTol) p = 0.0;
  auto it = std::lower_bound(bp.begin(), bp.end(), p);
  std::size_t idx = static_cast<std::size_t>(it - bp.begin());
  if (idx == bp.size()) return bp.size() - 1;
  if (idx > 0 && p - bp[idx - 1] < bp[idx] - p) return idx - 1;
  return idx;
}

DeploymentPlan plan_from_skeleton(const SkeletonGraph& sk, const char* algorithm,
                                  double speed, double period) {
  DeploymentPlan plan = make_plan(algorithm, skeleton_tour(sk), speed, period);
  plan.curves = sk.curves;
  plan.connectors = sk.connectors;
  return plan;
}

struct ForestSplit {
  std::vector<std::vector<int>> components;
  std::vector<std::vector<Edge>> edges;
};

ForestSplit split_components(int n, std::span<const Edge> forest) {
  DisjointSets sets(n);
  for (const auto& e : forest) sets.unite(e.u, e.v);
  std::map<int, std::size_t> slot;  // root -> component index, in order of smallest member
  ForestSplit out;
  for (int i = 0; i < n; ++i) {
    const int r = sets.find(i);
    auto [it, fresh] = slot.try_emplace(r, out.components.size());
    if (fresh) {
      out.components.emplace_back();
      out.edges.emplace_back();
    }
    out.components[it->second].push_back(i);
  }
  for (const auto& e : forest) out.edges[slot.at(sets.find(e.u))].push_back(e);
  return out;
}

std::vector<DeploymentPlan> plan_forest(std::span<const Polyline> curves,
                                        const ConnectivityGraph& cg,
                                        std::span<const Edge> forest, double speed,
                                        double period) {
  const auto split = split_components(static_cast<int>(curves.size()), forest);
  std::vector<DeploymentPlan> plans;
  plans.reserve(split.components.size());
  for (std::size_t c = 0; c < split.components.size(); ++c) {
    const auto sk = build_skeleton(curves, cg, split.components[c], split.edges[c]);
    plans.push_back(plan_from_skeleton(sk, "bscmc", speed, period));
  }
  return plans;
}

}  // namespace

ConnectivityGraph build_connectivity_graph(std::span<const Polyline> curves) {
  if (curves.empty()) throw std::invalid_argument("build_connectivity_graph: no curves");
  ConnectivityGraph cg;
  const int n = static_cast<int>(curves.size());
  cg.graph.vertex_count = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const ArcWitness w = polyline_distance(curves[static_cast<std::size_t>(i)],
                                             curves[static_cast<std::size_t>(j)]);
      cg.graph.edges.push_back({i, j, w.distance, static_cast<std::int64_t>(cg.witnesses.size())});
      cg.witnesses.push_back(w);
    }
  }
  return cg;
}

SkeletonGraph build_skeleton(std::span<const Polyline> curves, const ConnectivityGraph& cg,
                             std::span<const int> component,
                             std::span<const Edge> forest_edges) {
  SkeletonGraph sk;
  sk.curves.assign(component.begin(), component.end());

  std::map<int, std::vector<double>> attach;
  for (const auto& e : forest_edges) {
    const ArcWitness& w = cg.witnesses.at(static_cast<std::size_t>(e.tag));
    attach[e.u].push_back(w.param_first);
    attach[e.v].push_back(w.param_second);
  }

  struct CurveVertices {
    std::vector<double> bp;
    int base;
  };
  std::map<int, CurveVertices> layout;
  auto& g = sk.graph;

  for (int c : component) {
    const Polyline& curve = curves[static_cast<std::size_t>(c)];
    auto bp = breakpoints(curve, attach[c]);
    const int base = g.vertex_count;
    for (double s : bp) g.positions.push_back(arc_point(curve, s));
    g.vertex_count += static_cast<int>(bp.size());

    const int m = static_cast<int>(bp.size());
    for (int i = 0; i + 1 < m; ++i) {
      g.edges.push_back({base + i, base + i + 1, bp[static_cast<std::size_t>(i + 1)] - bp[static_cast<std::size_t>(i)], c});
    }
    const double len = curve.length();
    if (curve.closed() && len > 0.0) {
      g.edges.push_back({base + m - 1, base, len - bp.back(), c});
    }
    sk.curve_length += len;
    layout.emplace(c, CurveVertices{std::move(bp), base});
  }

  for (const auto& e : forest_edges) {
    const ArcWitness& w = cg.witnesses.at(static_cast<std::size_t>(e.tag));
    const auto& lu = layout.at(e.u);
    const auto& lv = layout.at(e.v);
    const int a = lu.base + static_cast<int>(nearest_breakpoint(lu.bp, curves[static_cast<std::size_t>(e.u)], w.param_first));
    const int b = lv.base + static_cast<int>(nearest_breakpoint(lv.bp, curves[static_cast<std::size_t>(e.v)], w.param_second));
    g.edges.push_back({a, b, w.distance, SkeletonGraph::kConnectorTag});
    sk.connectors.push_back({w.point_on_first, w.point_on_second});
    sk.connector_weight += w.distance;
  }
  return sk;
}

Polyline skeleton_tour(const SkeletonGraph& sk) {
  const auto& g = sk.graph;
  if (g.positions.empty()) throw std::invalid_argument("skeleton_tour: empty skeleton");
  if (g.edges.empty()) return Polyline({g.positions.front()}, true);
  const ClosedWalk walk = eulerian_tour(double_edges(g), 0);
  std::vector<Point2D> pts;
  pts.reserve(walk.vertices.size() - 1);
  for (std::size_t i = 0; i + 1 < walk.vertices.size(); ++i) {
    pts.push_back(g.positions[static_cast<std::size_t>(walk.vertices[i])]);
  }
  return Polyline(std::move(pts), true);
}

DeploymentPlan plan_special(std::span<const Polyline> curves, double speed, double period) {
  validate_inputs(curves, speed, period);
  const auto cg = build_connectivity_graph(curves);
  const Forest mst = kruskal_forest(cg.graph, 1);
  std::vector<int> all(curves.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  const auto sk = build_skeleton(curves, cg, all, mst.edges);
  return plan_from_skeleton(sk, "special", speed, period);
}

MultiDeploymentPlan plan_bscmc(std::span<const Polyline> curves, double speed, double period) {
  validate_inputs(curves, speed, period);
  const int n = static_cast<int>(curves.size());
  const auto cg = build_connectivity_graph(curves);
  const Forest mst = kruskal_forest(cg.graph, 1);

  // F_k is the MST without its k - 1 heaviest edges under the deterministic
  // edge order, which is exactly where Kruskal stopped early would end.
  std::vector<Edge> sorted;
  for (std::size_t i : sorted_edge_order(mst.edges)) sorted.push_back(mst.edges[i]);
  auto forest_for = [&](int k) {
    return std::span<const Edge>(sorted.data(), static_cast<std::size_t>(n - k));
  };

  MultiDeploymentPlan out;
  out.per_k_counts.assign(static_cast<std::size_t>(n), 0);
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic)
  for (int k = 1; k <= n; ++k) {
    try {
      std::size_t total = 0;
      for (const auto& p : plan_forest(curves, cg, forest_for(k), speed, period)) {
        total += p.sensor_count();
      }
      out.per_k_counts[static_cast<std::size_t>(k - 1)] = total;
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  const auto best = std::min_element(out.per_k_counts.begin(), out.per_k_counts.end());
  out.chosen_k = static_cast<int>(best - out.per_k_counts.begin()) + 1;
  out.total_sensors = *best;
  out.components = plan_forest(curves, cg, forest_for(out.chosen_k), speed, period);
  for (auto& p : out.components) p.metadata["chosen_k"] = std::to_string(out.chosen_k);
  return out;
}

}  // namespace bsweep
