#include <algorithm>
#include <random>
#include <set>

#include "bsweep/graph.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bsweep;
using doctest::Approx;

namespace {

WeightedGraph triangle() {
  WeightedGraph g;
  g.vertex_count = 3;
  g.edges = {{0, 1, 1.0}, {1, 2, 2.0}, {0, 2, 3.0}};
  return g;
}

WeightedGraph complete_random(std::mt19937_64& rng, int n) {
  WeightedGraph g;
  g.vertex_count = n;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.edges.push_back({u, v, testing::uni(rng, 0.0, 10.0)});
  }
  return g;
}

std::multiset<std::tuple<int, int, long long>> edge_multiset(const std::vector<Edge>& es) {
  std::multiset<std::tuple<int, int, long long>> s;
  for (const auto& e : es) s.insert(testing::edge_key(e));
  return s;
}

}  // namespace

TEST_CASE("kruskal_forest examples") {
  const auto g = triangle();
  const Forest t = kruskal_forest(g, 1);
  CHECK(t.weight() == 3.0);
  CHECK(t.edges.size() == 2);
  CHECK(t.component_count == 1);

  const Forest f2 = kruskal_forest(g, 2);
  REQUIRE(f2.edges.size() == 1);
  CHECK(f2.edges[0].weight == 1.0);
  CHECK(kruskal_forest(g, 3).edges.empty());

  // Path 0-1-2-3 with weights 1,2,3 plus heavy chords; force the heaviest chord.
  WeightedGraph p;
  p.vertex_count = 4;
  p.edges = {{0, 1, 1}, {1, 2, 2}, {2, 3, 3}, {0, 3, 9}, {0, 2, 4}, {1, 3, 5}};
  const Edge forced[] = {{0, 3, 9}};
  const Forest pf = kruskal_forest(p, 1, forced);
  CHECK(pf.weight() == Approx(12.0));
  CHECK(pf.weight() == Approx(testing::brute_forest_weight(p, 1, {3})));
  CHECK(std::any_of(pf.edges.begin(), pf.edges.end(), [](const Edge& e) { return e.weight == 9; }));
}

TEST_CASE("kruskal_forest errors") {
  const auto g = triangle();
  const Edge cyc[] = {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}};
  CHECK_THROWS_AS(kruskal_forest(g, 1, cyc), std::invalid_argument);
  CHECK_THROWS_AS(kruskal_forest(g, 0), std::invalid_argument);
  CHECK_THROWS_AS(kruskal_forest(g, 4), std::invalid_argument);
  const Edge two[] = {{0, 1, 1}, {1, 2, 2}};
  CHECK_THROWS_AS(kruskal_forest(g, 2, two), std::invalid_argument);
  WeightedGraph sparse;
  sparse.vertex_count = 3;
  sparse.edges = {{0, 1, 1}};
  CHECK_THROWS_AS(kruskal_forest(sparse, 1), std::invalid_argument);
}

TEST_CASE("double_edges examples") {
  Forest one{2, {{0, 1, 2.5}}, 1};
  const Multigraph d = double_edges(one);
  CHECK(d.edges.size() == 2);
  CHECK(d.total_weight() == 5.0);
  CHECK(double_edges(Forest{3, {}, 3}).edges.empty());

  Forest star{4, {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}}, 1};
  const Multigraph s = double_edges(star);
  CHECK(s.total_weight() == 12.0);
  for (int deg : s.degrees()) CHECK(deg % 2 == 0);
}

TEST_CASE("eulerian_tour examples") {
  Forest path{3, {{0, 1, 1}, {1, 2, 2}}, 1};
  const ClosedWalk w = eulerian_tour(double_edges(path), 0);
  CHECK(w.length == 6.0);
  CHECK(w.edges.size() == 4);
  CHECK(w.vertices == std::vector<VertexId>{0, 1, 2, 1, 0});

  Forest single{2, {{0, 1, 1}}, 1};
  CHECK(eulerian_tour(double_edges(single), 0).vertices == std::vector<VertexId>{0, 1, 0});

  std::mt19937_64 rng(3);
  const Forest tree = testing::rand_tree(rng, 8);
  const Multigraph m = double_edges(tree);
  const ClosedWalk tw = eulerian_tour(m, 0);
  std::vector<Edge> walked;
  for (std::size_t e : tw.edges) walked.push_back(m.edges[e]);
  CHECK(edge_multiset(walked) == edge_multiset(m.edges));
}

TEST_CASE("eulerian_tour errors") {
  Multigraph odd{3, {{0, 1, 1}, {1, 2, 1}}, {}};
  CHECK_THROWS_AS(eulerian_tour(odd, 0), std::invalid_argument);
  Multigraph split{4, {{0, 1, 1}, {0, 1, 1}, {2, 3, 1}, {2, 3, 1}}, {}};
  CHECK_THROWS_AS(eulerian_tour(split, 0), std::invalid_argument);
  Multigraph isolated{3, {{0, 1, 1}, {0, 1, 1}}, {}};
  CHECK_THROWS_AS(eulerian_tour(isolated, 2), std::invalid_argument);
}

TEST_CASE("min_weight_perfect_matching examples") {
  const std::vector<Point2D> two{{0, 0}, {3, 4}};
  const Matching m2 = min_weight_perfect_matching(two);
  REQUIRE(m2.pairs.size() == 1);
  CHECK(m2.weight == 5.0);

  const std::vector<Point2D> square{{0, 0}, {1, 1}, {1, 0}, {0, 1}};
  CHECK(min_weight_perfect_matching(square).weight == Approx(2.0));

  std::mt19937_64 rng(5);
  std::vector<Point2D> ten;
  for (int i = 0; i < 10; ++i) ten.push_back(testing::rand_point(rng, 0, 100));
  const Matching m10 = min_weight_perfect_matching(ten);
  CHECK(m10.exact);
  CHECK(m10.weight == Approx(testing::dp_matching_weight(ten)).epsilon(1e-12));
  std::vector<int> all(10);
  for (int i = 0; i < 10; ++i) all[static_cast<std::size_t>(i)] = i;
  CHECK(m10.weight == Approx(testing::enumerate_matching_weight(all, ten)).epsilon(1e-12));

  CHECK(min_weight_perfect_matching(std::vector<Point2D>{}).pairs.empty());
  const std::vector<Point2D> three{{0, 0}, {1, 0}, {2, 0}};
  CHECK_THROWS_AS(min_weight_perfect_matching(three), std::invalid_argument);
}

TEST_CASE("matching beyond the exact limit is greedy and flagged") {
  std::mt19937_64 rng(6);
  std::vector<Point2D> pts;
  for (int i = 0; i < 18; ++i) pts.push_back(testing::rand_point(rng, 0, 100));
  const Matching m = min_weight_perfect_matching(pts);
  CHECK_FALSE(m.exact);
  CHECK(m.pairs.size() == 9);
}

TEST_CASE("property: forest weights shrink by the removed heaviest edge") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 12)(rng);
    const auto g = complete_random(rng, n);
    const Forest mst = kruskal_forest(g, 1);
    std::vector<double> w;
    for (const auto& e : mst.edges) w.push_back(e.weight);
    std::sort(w.begin(), w.end(), std::greater<>());
    double prev = mst.weight();
    for (int k = 2; k <= n; ++k) {
      const double cur = kruskal_forest(g, k).weight();
      CHECK(cur <= prev + 1e-12);
      CHECK(prev - cur == Approx(w[static_cast<std::size_t>(k - 2)]).epsilon(1e-9));
      prev = cur;
    }
  }
}

TEST_CASE("property: Kruskal matches exhaustive enumeration on small graphs") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    const auto g = complete_random(rng, n);
    for (int k = 1; k <= n; ++k) {
      CHECK(kruskal_forest(g, k).weight() == Approx(testing::brute_forest_weight(g, k)).epsilon(1e-12));
    }
    // Force one arbitrary edge.
    const int f = std::uniform_int_distribution<int>(0, static_cast<int>(g.edges.size()) - 1)(rng);
    const Edge forced[] = {g.edges[static_cast<std::size_t>(f)]};
    CHECK(kruskal_forest(g, 1, forced).weight() ==
          Approx(testing::brute_forest_weight(g, 1, {f})).epsilon(1e-12));
  }
}

TEST_CASE("property: doubled-forest tours are exact") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Forest tree = testing::rand_tree(rng, std::uniform_int_distribution<int>(2, 20)(rng));
    const Multigraph m = double_edges(tree);
    const ClosedWalk w = eulerian_tour(m, 0);
    CHECK(std::abs(w.length - 2.0 * tree.weight()) <= 1e-9);
    CHECK(w.vertices.front() == w.vertices.back());
    CHECK(w.edges.size() == m.edges.size());
  }
}

TEST_CASE("property: matchings partition the input") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 * std::uniform_int_distribution<int>(1, 10)(rng);
    std::vector<Point2D> pts;
    for (int i = 0; i < n; ++i) pts.push_back(testing::rand_point(rng));
    const Matching m = min_weight_perfect_matching(pts);
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    double w = 0.0;
    for (const auto& [a, b] : m.pairs) {
      ++seen[static_cast<std::size_t>(a)];
      ++seen[static_cast<std::size_t>(b)];
      w += distance(pts[static_cast<std::size_t>(a)], pts[static_cast<std::size_t>(b)]);
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    CHECK(w == Approx(m.weight).epsilon(1e-12));
    if (n <= 12) CHECK(m.weight == Approx(testing::dp_matching_weight(pts)).epsilon(1e-12));
  }
}
