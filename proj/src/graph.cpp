#include "bsweep/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

namespace bsweep {

void WeightedGraph::validate() const {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (!std::isfinite(e.weight) || e.weight < 0.0) {
      throw std::invalid_argument("edge weight must be finite and non-negative");
    }
  }
}

double Forest::weight() const {
  double w = 0.0;
  for (const auto& e : edges) w += e.weight;
  return w;
}

double Multigraph::total_weight() const {
  double w = 0.0;
  for (const auto& e : edges) w += e.weight;
  return w;
}

std::vector<int> Multigraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(vertex_count), 0);
  for (const auto& e : edges) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  return deg;
}

DisjointSets::DisjointSets(int n)
    : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1), sets_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --sets_;
  return true;
}

std::vector<std::size_t> sorted_edge_order(std::span<const Edge> edges) {
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto key = [&](std::size_t i) {
    const Edge& e = edges[i];
    return std::make_tuple(e.weight, std::min(e.u, e.v), std::max(e.u, e.v), i);
  };
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  return order;
}

Forest kruskal_forest(const WeightedGraph& g, int k, std::span<const Edge> forced) {
  g.validate();
  if (k < 1 || k > std::max(g.vertex_count, 1)) {
    throw std::invalid_argument("kruskal_forest: k=" + std::to_string(k) +
                                " outside [1, vertex_count]");
  }
  Forest f;
  f.vertex_count = g.vertex_count;
  DisjointSets sets(g.vertex_count);
  for (const auto& e : forced) {
    if (e.u < 0 || e.u >= g.vertex_count || e.v < 0 || e.v >= g.vertex_count) {
      throw std::invalid_argument("kruskal_forest: forced edge out of range");
    }
    if (!sets.unite(e.u, e.v)) {
      throw std::invalid_argument("kruskal_forest: forced edges contain a cycle");
    }
    f.edges.push_back(e);
  }
  if (sets.set_count() < k) {
    throw std::invalid_argument("kruskal_forest: forced edges leave fewer than k components");
  }
  for (std::size_t i : sorted_edge_order(g.edges)) {
    if (sets.set_count() == k) break;
    const Edge& e = g.edges[i];
    if (sets.unite(e.u, e.v)) f.edges.push_back(e);
  }
  if (sets.set_count() != k) {
    throw std::invalid_argument("kruskal_forest: graph cannot be reduced to k components");
  }
  f.component_count = sets.set_count();
  return f;
}

Multigraph double_edges(const Forest& f) {
  Multigraph m;
  m.vertex_count = f.vertex_count;
  m.edges.reserve(2 * f.edges.size());
  for (const auto& e : f.edges) {
    m.edges.push_back(e);
    m.edges.push_back(e);
  }
  return m;
}

Multigraph double_edges(const Multigraph& in) {
  Multigraph m;
  m.vertex_count = in.vertex_count;
  m.positions = in.positions;
  m.edges.reserve(2 * in.edges.size());
  for (const auto& e : in.edges) {
    m.edges.push_back(e);
    m.edges.push_back(e);
  }
  return m;
}

ClosedWalk eulerian_tour(const Multigraph& m, VertexId start) {
  if (start < 0 || start >= m.vertex_count) {
    throw std::invalid_argument("eulerian_tour: start vertex out of range");
  }
  const auto n = static_cast<std::size_t>(m.vertex_count);
  std::vector<std::vector<std::pair<VertexId, std::size_t>>> adj(n);
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    const Edge& e = m.edges[i];
    if (e.u < 0 || e.u >= m.vertex_count || e.v < 0 || e.v >= m.vertex_count) {
      throw std::invalid_argument("eulerian_tour: edge endpoint out of range");
    }
    adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, i);
    adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, i);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (adj[v].size() % 2 != 0) {
      throw std::invalid_argument("eulerian_tour: vertex " + std::to_string(v) +
                                  " has odd degree");
    }
    std::sort(adj[v].begin(), adj[v].end());
  }
  if (adj[static_cast<std::size_t>(start)].empty()) {
    throw std::invalid_argument("eulerian_tour: start vertex has no edges");
  }

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<char> used(m.edges.size(), 0);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<std::pair<VertexId, std::size_t>> stack{{start, kNone}};
  std::vector<std::pair<VertexId, std::size_t>> circuit;
  circuit.reserve(m.edges.size() + 1);

  while (!stack.empty()) {
    const VertexId v = stack.back().first;
    auto& list = adj[static_cast<std::size_t>(v)];
    auto& pos = cursor[static_cast<std::size_t>(v)];
    while (pos < list.size() && used[list[pos].second]) ++pos;
    if (pos == list.size()) {
      circuit.push_back(stack.back());
      stack.pop_back();
    } else {
      const auto [w, id] = list[pos];
      used[id] = 1;
      stack.emplace_back(w, id);
    }
  }

  if (circuit.size() != m.edges.size() + 1) {
    throw std::invalid_argument("eulerian_tour: edge set is not connected");
  }

  std::reverse(circuit.begin(), circuit.end());
  ClosedWalk walk;
  walk.vertices.reserve(circuit.size());
  walk.edges.reserve(m.edges.size());
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    walk.vertices.push_back(circuit[i].first);
    if (i > 0) {
      walk.edges.push_back(circuit[i].second);
      walk.length += m.edges[circuit[i].second].weight;
    }
  }
  return walk;
}

namespace {

Matching exact_matching(std::span<const Point2D> pts) {
  const auto n = pts.size();
  const std::size_t full = (std::size_t{1} << n) - 1;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> cost(full + 1, kInf);
  std::vector<std::uint8_t> partner(full + 1, 0);
  cost[0] = 0.0;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    const int i = std::countr_zero(mask);
    const std::size_t rest = mask & ~(std::size_t{1} << i);
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < n; ++j) {
      if (!(rest & (std::size_t{1} << j))) continue;
      const double c = distance(pts[static_cast<std::size_t>(i)], pts[j]) +
                       cost[rest & ~(std::size_t{1} << j)];
      if (c < cost[mask]) {
        cost[mask] = c;
        partner[mask] = static_cast<std::uint8_t>(j);
      }
    }
  }
  Matching m;
  std::size_t mask = full;
  while (mask != 0) {
    const int i = std::countr_zero(mask);
    const int j = partner[mask];
    m.pairs.emplace_back(i, j);
    m.weight += distance(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]);
    mask &= ~(std::size_t{1} << i);
    mask &= ~(std::size_t{1} << j);
  }
  return m;
}

Matching greedy_matching(std::span<const Point2D> pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::tuple<double, int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      pairs.emplace_back(distance(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]), i, j);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<char> taken(static_cast<std::size_t>(n), 0);
  Matching m;
  m.exact = false;
  for (const auto& [d, i, j] : pairs) {
    if (taken[static_cast<std::size_t>(i)] || taken[static_cast<std::size_t>(j)]) continue;
    taken[static_cast<std::size_t>(i)] = taken[static_cast<std::size_t>(j)] = 1;
    m.pairs.emplace_back(i, j);
    m.weight += d;
  }
  return m;
}

}  // namespace

Matching min_weight_perfect_matching(std::span<const Point2D> points) {
  if (points.size() % 2 != 0) {
    throw std::invalid_argument("min_weight_perfect_matching: odd number of points (" +
                                std::to_string(points.size()) + ")");
  }
  if (points.empty()) return {};
  if (points.size() <= kExactMatchingLimit) return exact_matching(points);
  return greedy_matching(points);
}

}  // namespace bsweep
