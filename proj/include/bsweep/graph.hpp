#pragma once

// Weighted graphs, spanning forests, edge doubling, Eulerian circuits and
// minimum-weight perfect matching.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bsweep/geometry.hpp"

namespace bsweep {

using VertexId = int;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double weight = 0.0;
  /// Caller payload; -1 when unused.
  std::int64_t tag = -1;
};

struct WeightedGraph {
  int vertex_count = 0;
  std::vector<Edge> edges;

  /// Throws std::invalid_argument on bad ids or non-finite/negative weights.
  void validate() const;
};

struct Forest {
  int vertex_count = 0;
  std::vector<Edge> edges;
  int component_count = 0;

  double weight() const;
};

/// Edge multiset with optional vertex positions; the carrier for Eulerian
/// constructions.
struct Multigraph {
  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<Point2D> positions;

  double total_weight() const;
  std::vector<int> degrees() const;
};

/// Union-find over [0, n) with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(int n);
  int find(int x);
  /// Returns false when `a` and `b` were already joined.
  bool unite(int a, int b);
  int set_count() const { return sets_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int sets_;
};

/// Deterministic edge order: (weight, min endpoint, max endpoint, index).
std::vector<std::size_t> sorted_edge_order(std::span<const Edge> edges);

/// Minimum-weight spanning forest of `g` with exactly `k` components that
/// contains every forced edge. Forced edges are joined first, the remaining
/// edges are scanned in `sorted_edge_order`.
///
/// Throws std::invalid_argument when the forced edges contain a cycle or
/// when `k` components cannot be reached.
Forest kruskal_forest(const WeightedGraph& g, int k,
                      std::span<const Edge> forced = {});

Multigraph double_edges(const Forest& f);
Multigraph double_edges(const Multigraph& m);

/// A closed walk: `vertices.front() == vertices.back()` and
/// `edges[i]` joins `vertices[i]` and `vertices[i + 1]`.
struct ClosedWalk {
  std::vector<VertexId> vertices;
  std::vector<std::size_t> edges;
  double length = 0.0;
};

/// Hierholzer's algorithm. Adjacency is ordered by (neighbour id, edge
/// index) so the walk is reproducible.
///
/// Throws std::invalid_argument on an odd-degree vertex, on an edge set
/// that is not connected, or when `start` has no incident edge.
ClosedWalk eulerian_tour(const Multigraph& m, VertexId start);

struct Matching {
  std::vector<std::pair<int, int>> pairs;
  double weight = 0.0;
  /// False when the greedy fallback was used.
  bool exact = true;
};

/// Largest point count solved exactly by subset dynamic programming.
inline constexpr std::size_t kExactMatchingLimit = 16;

/// Minimum-weight perfect matching under Euclidean distance. Exact up to
/// `kExactMatchingLimit` points; beyond that the globally-closest-pair
/// greedy is used and `exact` is cleared.
Matching min_weight_perfect_matching(std::span<const Point2D> points);

}  // namespace bsweep
