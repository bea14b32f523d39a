#pragma once

// Sweep plans for several curves: one tour around the doubled MST skeleton,
// and the spanning-forest variant that may split the curves into several
// independently patrolled groups.

#include <span>
#include <vector>

#include "bsweep/geometry.hpp"
#include "bsweep/graph.hpp"
#include "bsweep/plan.hpp"

namespace bsweep {

/// Complete graph with one vertex per curve. Edge `tag` indexes
/// `witnesses`; the witness is oriented from curve `u` to curve `v`.
struct ConnectivityGraph {
  WeightedGraph graph;
  std::vector<ArcWitness> witnesses;
};

/// Geometric multigraph whose edges are curve pieces (split at connector
/// attachment points) and connector lines. Curve pieces carry the curve
/// index as `tag`; connectors carry `kConnectorTag`.
struct SkeletonGraph {
  static constexpr std::int64_t kConnectorTag = -1;

  Multigraph graph;
  std::vector<int> curves;
  std::vector<Segment> connectors;
  double curve_length = 0.0;
  double connector_weight = 0.0;

  double total_weight() const { return curve_length + connector_weight; }
};

struct MultiDeploymentPlan {
  std::vector<DeploymentPlan> components;
  int chosen_k = 1;
  std::size_t total_sensors = 0;
  /// N_k for k = 1..n (index k - 1).
  std::vector<std::size_t> per_k_counts;
};

ConnectivityGraph build_connectivity_graph(std::span<const Polyline> curves);

/// Skeleton of the curves in `component` joined by `forest_edges` (edges of
/// `cg.graph`, each with both ends inside the component).
SkeletonGraph build_skeleton(std::span<const Polyline> curves,
                             const ConnectivityGraph& cg,
                             std::span<const int> component,
                             std::span<const Edge> forest_edges);

/// Closed tour walking every skeleton edge twice.
Polyline skeleton_tour(const SkeletonGraph& skeleton);

/// Single tour over all curves from the minimum spanning tree.
DeploymentPlan plan_special(std::span<const Polyline> curves, double speed,
                            double period);

/// Best of the minimum spanning forests F_1..F_n by total sensor count;
/// ties go to the smallest k.
MultiDeploymentPlan plan_bscmc(std::span<const Polyline> curves, double speed,
                               double period);

}  // namespace bsweep
