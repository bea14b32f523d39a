#pragma once

// Data-mule schedules: a Christofides-style closed tour over segment end
// points that keeps every segment as a tour edge, patrolled by two equal
// fleets moving in opposite directions.

#include <span>
#include <vector>

#include "bsweep/geometry.hpp"
#include "bsweep/graph.hpp"

namespace bsweep {

/// Complete Euclidean graph on segment end points. Coincident end points
/// (within kGeomTol) share a vertex. Segment edges carry the segment index
/// as `tag`; all other edges carry -1.
struct EndpointGraph {
  WeightedGraph graph;
  std::vector<Point2D> positions;
  /// Vertex ids of (a_i, b_i) for each segment.
  std::vector<std::pair<VertexId, VertexId>> segment_vertices;
};

EndpointGraph build_g2n(std::span<const Segment> segments);

struct DataMulePlan {
  Polyline tour;  // closed
  double tour_length = 0.0;
  double speed = 0.0;
  double period = 0.0;
  std::vector<double> offsets;
  /// Mule ids; fleet_cw[i] and fleet_ccw[i] both start at offsets[i].
  std::vector<int> fleet_cw;
  std::vector<int> fleet_ccw;
  bool exact_matching = true;

  double tree_weight = 0.0;
  double matching_weight = 0.0;

  std::size_t mule_count() const { return fleet_cw.size() + fleet_ccw.size(); }
};

DataMulePlan plan_mdmdg(std::span<const Segment> segments, double speed, double period);

}  // namespace bsweep
