#include "bandsep/error.hpp"
#include "bandsep/generators.hpp"
#include "bandsep/graph.hpp"

#include "brute_force.hpp"
#include "corpus.hpp"

#include <gtest/gtest.h>

using namespace bandsep;

namespace {

Graph path(int n) { return generate(Family::kPath, {.n = n}); }
Graph cycle(int n) { return generate(Family::kCycle, {.n = n}); }
Graph complete(int n) { return generate(Family::kComplete, {.n = n}); }

}  // namespace

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph(2, {{0, 0}}), PreconditionError);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), PreconditionError);
  EXPECT_THROW(Graph(2, {{0, 2}}), PreconditionError);
}

TEST(Graph, AdjacencyIsSymmetricAndSorted) {
  for (const auto& [name, g] : corpus::small()) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const auto nb = g.neighbors(v);
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end())) << name;
      for (Vertex w : nb) {
        EXPECT_NE(v, w) << name;
        EXPECT_TRUE(g.has_edge(w, v)) << name;
      }
      EXPECT_LE(g.degree(v), g.max_degree());
    }
  }
}

TEST(Labelling, RejectsNonBijections) {
  EXPECT_THROW(Labelling::from_order({0, 0, 1}), PreconditionError);
  EXPECT_THROW(Labelling::from_positions({1, 3}), PreconditionError);
  const auto sigma = Labelling::from_positions({2, 3, 1});
  EXPECT_EQ(sigma.order(), (std::vector<Vertex>{2, 0, 1}));
}

TEST(BandwidthOfLabelling, Examples) {
  EXPECT_EQ(bandwidth_of_labelling(path(5), Labelling::identity(5)), 1);
  EXPECT_EQ(bandwidth_of_labelling(complete(4), Labelling::from_order({2, 0, 3, 1})), 3);
  EXPECT_EQ(bandwidth_of_labelling(cycle(6), Labelling::identity(6)), 5);
  // Positions 1,3,5,6,4,2 around the cycle.
  EXPECT_EQ(bandwidth_of_labelling(cycle(6), Labelling::from_positions({1, 3, 5, 6, 4, 2})), 2);
  EXPECT_EQ(bruteforce::bandwidth(cycle(6)), 2);
  EXPECT_EQ(bandwidth_of_labelling(corpus::edgeless(3), Labelling::identity(3)), 0);
}

TEST(BandwidthOfLabelling, RejectsWrongLength) {
  EXPECT_THROW(bandwidth_of_labelling(path(3), Labelling::identity(2)), PreconditionError);
}

TEST(DegreeLowerBound, Examples) {
  EXPECT_EQ(degree_lower_bound(generate(Family::kStar, {.k = 4})), 2);
  EXPECT_EQ(degree_lower_bound(corpus::edgeless(4)), 0);
  EXPECT_EQ(degree_lower_bound(complete(6)), 3);
}

TEST(DegreeLowerBound, NeverExceedsBandwidth) {
  for (const auto& [name, g] : corpus::small()) {
    if (g.num_vertices() > 9) continue;
    EXPECT_LE(degree_lower_bound(g), bruteforce::bandwidth(g)) << name;
  }
}

TEST(DiameterLowerBound, Examples) {
  EXPECT_EQ(diameter_lower_bound(path(5)), Rational(1));
  EXPECT_EQ(diameter_lower_bound(complete(4)), Rational(3));
  const auto tree = generate(Family::kCompleteBinaryTree, {.depth = 3});
  EXPECT_EQ(bruteforce::diameter(tree), 6);
  EXPECT_EQ(diameter_lower_bound(tree), Rational(14, 6));
  EXPECT_THROW(diameter_lower_bound(corpus::edgeless(2)), PreconditionError);
}

TEST(Diameter, MatchesFloydWarshall) {
  for (const auto& [name, g] : corpus::small()) {
    if (!is_connected(g) || g.num_vertices() == 0) continue;
    EXPECT_EQ(diameter(g), bruteforce::diameter(g)) << name;
  }
}

TEST(MultiSourceDistances, Examples) {
  const auto p = path(5);
  const std::vector<Vertex> all{0, 1, 2, 3, 4};
  EXPECT_EQ(multi_source_distances(p, all), (std::vector<int>{0, 0, 0, 0, 0}));
  const std::vector<Vertex> first{0};
  EXPECT_EQ(multi_source_distances(p, first), (std::vector<int>{0, 1, 2, 3, 4}));
  const auto two = corpus::disjoint_union(path(2), path(2));
  EXPECT_EQ(multi_source_distances(two, first), (std::vector<int>{0, 1, kUnreachable, kUnreachable}));
}

TEST(MultiSourceDistances, AdjacentVerticesDifferByAtMostOne) {
  for (const auto& [name, g] : corpus::small()) {
    if (g.num_vertices() < 2) continue;
    const std::vector<Vertex> src{0, g.num_vertices() - 1};
    const auto d = multi_source_distances(g, src);
    for (const auto& [u, v] : g.edges()) {
      const int du = d[static_cast<std::size_t>(u)];
      const int dv = d[static_cast<std::size_t>(v)];
      if (du == kUnreachable || dv == kUnreachable) {
        EXPECT_EQ(du, dv) << name;
      } else {
        EXPECT_LE(std::abs(du - dv), 1) << name;
      }
    }
  }
}

TEST(InducedSubgraph, Examples) {
  const auto c6 = cycle(6);
  const auto all = induced_subgraph(c6, {0, 1, 2, 3, 4, 5});
  EXPECT_EQ(all.graph, c6);
  const auto arc = induced_subgraph(c6, {2, 3, 4});
  EXPECT_EQ(arc.graph, path(3));
  EXPECT_EQ(arc.to_parent, (std::vector<Vertex>{2, 3, 4}));
  const auto grid = generate(Family::kGrid, {.k = 4});
  EXPECT_EQ(induced_subgraph(grid, {4, 5, 6, 7}).graph, path(4));
  EXPECT_THROW(induced_subgraph(c6, {}), PreconditionError);
}

TEST(InducedSubgraph, NeverIncreasesMaxDegree) {
  for (const auto& [name, g] : corpus::small()) {
    const int n = g.num_vertices();
    for (int start = 0; start < n; ++start) {
      VertexSet s;
      for (int v = start; v < n; v += 2) s.push_back(v);
      const auto sub = induced_subgraph(g, s);
      EXPECT_LE(sub.graph.max_degree(), g.max_degree()) << name;
      for (const auto& [u, v] : sub.graph.edges()) {
        EXPECT_TRUE(g.has_edge(sub.to_parent[static_cast<std::size_t>(u)], sub.to_parent[static_cast<std::size_t>(v)]));
      }
    }
  }
}

TEST(Components, DisconnectedGraphs) {
  const auto g = corpus::disjoint_union(path(3), complete(2));
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], (VertexSet{0, 1, 2}));
  EXPECT_EQ(comps[1], (VertexSet{3, 4}));
  const std::vector<Vertex> cut{1};
  EXPECT_EQ(components_without(g, cut).size(), 3u);
  EXPECT_EQ(outer_neighborhood(g, {0}), (VertexSet{1}));
  EXPECT_EQ(edges_between(g, {0, 1}, {2, 3}), 1u);
}
