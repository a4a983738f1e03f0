#include "bandsep/error.hpp"
#include "bandsep/expansion.hpp"
#include "bandsep/generators.hpp"
#include "bandsep/oracles.hpp"
#include "bandsep/separators.hpp"

#include "brute_force.hpp"
#include "corpus.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace bandsep;

namespace {

Graph path(int n) { return generate(Family::kPath, {.n = n}); }
Graph complete(int n) { return generate(Family::kComplete, {.n = n}); }

Graph bridged_k5() {
  auto g = corpus::disjoint_union(complete(5), complete(5));
  auto edges = g.edges();
  edges.emplace_back(4, 5);
  return Graph(10, edges);
}

}  // namespace

TEST(ValidateSeparator, Examples) {
  EXPECT_TRUE(validate_separator(path(3), {{1}, {0}, {2}, kTwoThirds, SeparatorSource::kExact}));
  const auto cross = validate_separator(complete(3), {{}, {0}, {1, 2}, kTwoThirds, SeparatorSource::kExact});
  EXPECT_FALSE(cross);
  EXPECT_NE(cross.reason.find("edge"), std::string::npos);
  EXPECT_FALSE(validate_separator(path(4), {{}, {0, 1, 2, 3}, {}, kTwoThirds, SeparatorSource::kExact}));
  EXPECT_FALSE(validate_separator(path(3), {{1}, {0}, {0, 2}, kTwoThirds, SeparatorSource::kExact}));
  EXPECT_FALSE(validate_separator(path(3), {{1}, {0}, {2}, Rational(1), SeparatorSource::kExact}));
}

TEST(GroupParts, BalancesWhenPossible) {
  const std::vector<int> sizes{3, 3, 2, 2};
  const auto grouping = group_parts(sizes, 10, kTwoThirds);
  ASSERT_TRUE(grouping);
  int a = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) a += (*grouping)[i] ? sizes[i] : 0;
  EXPECT_LE(3 * a, 20);
  EXPECT_LE(3 * (10 - a), 20);
  const std::vector<int> lopsided{8, 1};
  EXPECT_FALSE(group_parts(lopsided, 9, kTwoThirds));
}

TEST(FindSeparatorExact, Examples) {
  const auto p5 = find_separator_exact(path(5));
  EXPECT_EQ(p5.s, (VertexSet{1}));
  // The neighborhood of a corner cuts off one vertex from a side of six.
  const auto grid = find_separator_exact(generate(Family::kGrid, {.k = 3}));
  EXPECT_EQ(grid.s.size(), 2u);
  EXPECT_TRUE(validate_separator(generate(Family::kGrid, {.k = 3}), grid));
  EXPECT_EQ(find_separator_exact(complete(6)).s.size(), 2u);
  EXPECT_THROW(find_separator_exact(path(17)), SizeGuardError);
}

TEST(FindSeparatorExact, MatchesAssignmentOracle) {
  for (const auto& [name, g] : corpus::small()) {
    if (g.num_vertices() > 10) continue;
    const auto sep = find_separator_exact(g);
    EXPECT_TRUE(validate_separator(g, sep)) << name;
    std::vector<Vertex> all(static_cast<std::size_t>(g.num_vertices()));
    for (int v = 0; v < g.num_vertices(); ++v) all[static_cast<std::size_t>(v)] = v;
    EXPECT_EQ(static_cast<int>(sep.s.size()), bruteforce::min_separator(g, all, kTwoThirds)) << name;
  }
}

TEST(FindSeparatorExact, InducedMaximumIsSeparationNumber) {
  for (const auto& [name, g] : corpus::small()) {
    if (g.num_vertices() > 8 || g.num_vertices() == 0) continue;
    int best = 0;
    const int n = g.num_vertices();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      VertexSet s;
      for (int v = 0; v < n; ++v) {
        if (mask >> v & 1u) s.push_back(v);
      }
      best = std::max(best, static_cast<int>(find_separator_exact(induced_subgraph(g, s).graph).s.size()));
    }
    EXPECT_EQ(best, exact_separation_number(g)) << name;
  }
}

TEST(FindSeparatorBfsLayer, Examples) {
  const auto p9 = find_separator_bfs_layer(path(9));
  ASSERT_TRUE(p9);
  EXPECT_EQ(p9->s.size(), 1u);
  for (int k = 3; k <= 8; ++k) {
    const auto g = generate(Family::kGrid, {.k = k});
    const auto sep = find_separator_bfs_layer(g);
    ASSERT_TRUE(sep) << k;
    EXPECT_LE(static_cast<int>(sep->s.size()), k);
    EXPECT_TRUE(validate_separator(g, *sep));
  }
  EXPECT_FALSE(find_separator_bfs_layer(complete(6)));
  EXPECT_THROW(find_separator_bfs_layer(corpus::edgeless(3)), PreconditionError);
}

TEST(FindSeparatorSpectral, Examples) {
  const auto g = bridged_k5();
  const auto bridge = find_separator_spectral(g);
  ASSERT_TRUE(bridge.separator) << bridge.diagnostics;
  EXPECT_TRUE(validate_separator(g, *bridge.separator));
  ASSERT_EQ(bridge.separator->s.size(), 1u);
  EXPECT_TRUE(bridge.separator->s[0] == 4 || bridge.separator->s[0] == 5);

  const auto c8 = generate(Family::kCycle, {.n = 8});
  const auto cyc = find_separator_spectral(c8);
  ASSERT_TRUE(cyc.separator) << cyc.diagnostics;
  EXPECT_EQ(cyc.separator->s.size(), 2u);
  EXPECT_TRUE(validate_separator(c8, *cyc.separator));

  EXPECT_THROW(find_separator_spectral(path(2)), PreconditionError);
}

TEST(FindSeparatorSpectral, NonConvergenceIsReportedNotFaked) {
  const auto res = find_separator_spectral(path(40), kTwoThirds, {.iterations = 1, .tolerance = 1e-14, .seed = 3});
  EXPECT_FALSE(res.separator);
  EXPECT_FALSE(res.converged);
  EXPECT_FALSE(res.diagnostics.empty());
}

TEST(FindSeparatorCentroid, TreesOnly) {
  const auto tree = generate(Family::kCompleteBinaryTree, {.depth = 4});
  const auto sep = find_separator_centroid(tree);
  ASSERT_TRUE(sep);
  EXPECT_EQ(sep->s, (VertexSet{0}));
  EXPECT_TRUE(validate_separator(tree, *sep));
  EXPECT_FALSE(find_separator_centroid(generate(Family::kCycle, {.n = 5})));
}

TEST(SeparatorFromNonexpanding, Examples) {
  const auto eps_half = Rational(1, 2);
  const auto empty = separator_from_nonexpanding(corpus::edgeless(6), eps_half, make_exact_nonexpanding_finder(eps_half));
  EXPECT_TRUE(empty.s.empty());
  EXPECT_TRUE(validate_separator(corpus::edgeless(6), empty));

  const auto tenth = Rational(1, 10);
  const auto cliques = corpus::disjoint_union(complete(10), complete(10));
  const auto sep = separator_from_nonexpanding(cliques, tenth, make_exact_nonexpanding_finder(tenth));
  EXPECT_TRUE(sep.s.empty());
  EXPECT_EQ(sep.a.size(), 10u);
  EXPECT_EQ(sep.b.size(), 10u);
  EXPECT_EQ(edges_between(cliques, sep.a, sep.b), 0u);

  const auto quarter = Rational(1, 4);
  const auto p20 = path(20);
  const auto cut = separator_from_nonexpanding(p20, quarter, make_exact_nonexpanding_finder(quarter));
  EXPECT_LE(cut.s.size(), 3u);
  EXPECT_LE(cut.a.size(), 13u);
  EXPECT_LE(cut.b.size(), 13u);
  EXPECT_TRUE(validate_separator(p20, cut));
  EXPECT_EQ(cut.source, SeparatorSource::kFromExpansion);
}

TEST(SeparatorFromNonexpanding, ExpanderSurfacesWitness) {
  const auto eps = Rational(1, 2);
  try {
    separator_from_nonexpanding(complete(6), eps, make_exact_nonexpanding_finder(eps));
    FAIL() << "K_6 is a 1/2-expander";
  } catch (const ExpanderEncountered& e) {
    EXPECT_EQ(e.vertices(), (std::vector<int>{0, 1, 2, 3, 4, 5}));
  }
}

TEST(SeparatorFromTreeDecomposition, Examples) {
  const auto p5 = path(5);
  const TreeDecomposition path_td{{{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {{0, 1}, {1, 2}, {2, 3}}};
  const auto s1 = separator_from_tree_decomposition(p5, path_td);
  EXPECT_LE(s1.s.size(), 2u);
  EXPECT_TRUE(validate_separator(p5, s1));

  const auto tree = generate(Family::kCompleteBinaryTree, {.depth = 3});
  const auto tw = exact_treewidth(tree, 15);
  const auto s2 = separator_from_tree_decomposition(tree, tw.witness);
  EXPECT_LE(s2.s.size(), 2u);
  EXPECT_GE(s2.s.size(), find_separator_exact(tree).s.size());
  EXPECT_TRUE(validate_separator(tree, s2));

  const auto k5 = complete(5);
  const auto s3 = separator_from_tree_decomposition(k5, {{{0, 1, 2, 3, 4}}, {}});
  EXPECT_LE(s3.s.size(), 5u);
  EXPECT_TRUE(validate_separator(k5, s3));

  EXPECT_THROW(separator_from_tree_decomposition(p5, {{{0, 1}, {3, 4}}, {{0, 1}}}), PreconditionError);
}

TEST(SeparatorBounds, ClosedForms) {
  EXPECT_NEAR(separator_bound_genus(100, 0), 2 * std::sqrt(200.0), 1e-9);
  EXPECT_NEAR(separator_bound_genus(100, 0), 28.284, 1e-3);
  EXPECT_NEAR(separator_bound_minor(100, 5), 111.80, 1e-2);
  EXPECT_THROW(separator_bound_genus(0, 1), PreconditionError);
  EXPECT_THROW(separator_bound_minor(0, 2), PreconditionError);
}

TEST(Providers, EveryResultValidatesAndRespectsBudget) {
  for (const auto& name : {"exact", "bfs", "spectral", "centroid"}) {
    const auto provider = provider_from_name(name);
    ASSERT_TRUE(provider) << name;
    for (const auto& [gname, g] : corpus::small()) {
      if (g.num_vertices() == 0) continue;
      const auto sep = provider->find(g, kTwoThirds);
      if (!sep) continue;
      EXPECT_TRUE(validate_separator(g, *sep)) << name << " on " << gname;
      if (provider->s_max > 0) {
        EXPECT_LE(static_cast<int>(sep->s.size()), provider->s_max) << name << " on " << gname;
      }
    }
  }
  EXPECT_FALSE(provider_from_name("planar"));
}

TEST(Providers, PreferEmptySeparatorOnDisconnectedInput) {
  const auto g = corpus::disjoint_union(complete(4), complete(4));
  for (const auto& name : {"exact", "bfs", "spectral"}) {
    const auto sep = provider_from_name(name)->find(g, kTwoThirds);
    ASSERT_TRUE(sep) << name;
    EXPECT_TRUE(sep->s.empty()) << name;
  }
}
