#include "bandsep/error.hpp"
#include "bandsep/generators.hpp"
#include "bandsep/oracles.hpp"
#include "bandsep/ordering.hpp"

#include "corpus.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace bandsep;

namespace {

Graph path(int n) { return generate(Family::kPath, {.n = n}); }

SPRPartition p9_partition() {
  return {{4}, {{3}, {}, {5}}, {{0, 1, 2}, {}, {6, 7, 8}}, 3};
}

}  // namespace

TEST(BucketIndex, Cases) {
  EXPECT_EQ(bucket_index(4, 0, 7), 4);
  EXPECT_EQ(bucket_index(1, 1, 7), 3);
  EXPECT_EQ(bucket_index(6, 1, 7), 5);
  EXPECT_EQ(bucket_index(1, 5, 7), 1);
  EXPECT_EQ(bucket_index(2, kUnreachable, 7), 2);
}

TEST(ValidateSPRPartition, NamesFailedCondition) {
  const auto g = path(9);
  EXPECT_TRUE(validate_spr_partition(g, p9_partition()));

  auto missing = p9_partition();
  missing.r[2] = {6, 7};
  EXPECT_EQ(validate_spr_partition(g, missing).reason.substr(0, 5), "cover");

  auto big = p9_partition();
  big.r_bound = 2;
  EXPECT_EQ(validate_spr_partition(g, big).reason.substr(0, 3), "(i)");

  SPRPartition close{{4}, {{}, {}, {}, {}, {}}, {{0, 1, 2, 3}, {}, {}, {}, {5, 6, 7, 8}}, 4};
  EXPECT_EQ(validate_spr_partition(g, close).reason.substr(0, 5), "(iii)");
}

TEST(DecompositionOrdering, PathExample) {
  const auto g = path(9);
  const auto cert = decomposition_ordering(g, p9_partition());
  EXPECT_LT(cert.measured_bandwidth, 12);
  EXPECT_EQ(cert.guaranteed_bound, 12);
  EXPECT_EQ(bandwidth_of_labelling(g, cert.labelling), cert.measured_bandwidth);
  ASSERT_TRUE(cert.buckets);
  EXPECT_TRUE(validate_bucket_assignment(g, *cert.buckets, 1 + 2 + 3));
}

TEST(DecompositionOrdering, WholeVertexSetAsSeparator) {
  const auto g = generate(Family::kComplete, {.n = 5});
  const SPRPartition part{{0, 1, 2, 3, 4}, {{}, {}, {}}, {{}, {}, {}}, 0};
  const auto cert = decomposition_ordering(g, part);
  EXPECT_EQ(cert.labelling, Labelling::identity(5));
  EXPECT_EQ(cert.measured_bandwidth, 4);
  ASSERT_TRUE(cert.buckets);
  EXPECT_EQ(cert.buckets->sizes, (std::vector<int>{0, 5, 0}));
}

TEST(DecompositionOrdering, EmptySeparator) {
  const auto g = corpus::disjoint_union(path(3), path(3));
  const SPRPartition part{{}, {{}, {}, {}}, {{0, 1, 2}, {}, {3, 4, 5}}, 3};
  const auto cert = decomposition_ordering(g, part);
  EXPECT_LT(cert.measured_bandwidth, 6);
}

TEST(DecompositionOrdering, RejectsCrossEdge) {
  const auto g = path(9);
  auto bad = p9_partition();
  bad.s = {};
  bad.p = {{}, {}, {}};
  bad.r = {{0, 1, 2, 3, 4}, {}, {5, 6, 7, 8}};
  bad.r_bound = 5;
  try {
    decomposition_ordering(g, bad);
    FAIL() << "edge {4, 5} joins R_1 and R_3";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("(ii)"), std::string::npos) << e.what();
  }
}

TEST(ValidateSeparationTree, Examples) {
  SeparationTree one{12, {{2, 1, 2}, {5}, {5}}, 0};
  EXPECT_EQ(one.leaf_count(), 2);
  EXPECT_EQ(one.internal_count(), 1);
  EXPECT_TRUE(validate_separation_tree(one, 6));

  SeparationTree wide{16, {}, 0};
  wide.nodes.push_back({1, 1, 2});
  wide.nodes.push_back({1, 3, 4});
  wide.nodes.push_back({1, 5, 6});
  wide.nodes.push_back({1, 7, 8});
  wide.nodes.push_back({1, 9, 10});
  wide.nodes.push_back({1, 11, 12});
  wide.nodes.push_back({1, 13, 14});
  for (int i = 0; i < 8; ++i) wide.nodes.push_back({1});
  EXPECT_EQ(wide.leaf_count(), 8);
  EXPECT_FALSE(validate_separation_tree(wide, 6));

  SeparationTree heavy{4, {{2, 1, 2}, {2}, {2}}, 0};
  EXPECT_FALSE(validate_separation_tree(heavy, 6));
}

TEST(RecursiveBandOrdering, Fallbacks) {
  const auto cycle = generate(Family::kCycle, {.n = 100});
  const auto c = recursive_band_ordering(cycle, make_bfs_provider(), 2);
  EXPECT_TRUE(c.fallback);
  EXPECT_EQ(c.labelling, Labelling::identity(100));
  EXPECT_EQ(c.measured_bandwidth, 99);

  const auto grid = generate(Family::kGrid, {.k = 3});
  const auto gcert = recursive_band_ordering(grid, make_exact_provider(), 3);
  EXPECT_TRUE(gcert.fallback);
  EXPECT_EQ(bandwidth_of_labelling(grid, gcert.labelling), gcert.measured_bandwidth);

  EXPECT_THROW(recursive_band_ordering(corpus::edgeless(4), make_exact_provider(), 1), PreconditionError);
  EXPECT_THROW(recursive_band_ordering(path(4), make_exact_provider(), 0), PreconditionError);
}

TEST(RecursiveBandOrdering, BinaryTreeDepth11) {
  const auto tree = generate(Family::kCompleteBinaryTree, {.depth = 11});
  const auto cert = recursive_band_ordering(tree, make_centroid_provider(), 1);
  ASSERT_FALSE(cert.fallback);
  ASSERT_TRUE(cert.beta && cert.formula_bound && cert.tree && cert.partition);
  EXPECT_EQ(cert.partition->buckets(), 7);
  EXPECT_LE(cert.measured_bandwidth, *cert.formula_bound);
  EXPECT_LT(cert.measured_bandwidth, cert.guaranteed_bound);
  EXPECT_EQ(bandwidth_of_labelling(tree, cert.labelling), cert.measured_bandwidth);
  EXPECT_TRUE(validate_separation_tree(*cert.tree, 7));
  EXPECT_TRUE(validate_spr_partition(tree, *cert.partition));
}

TEST(RecursiveBandOrdering, ProviderOverBudget) {
  const auto tree = generate(Family::kCompleteBinaryTree, {.depth = 11});
  EXPECT_THROW(recursive_band_ordering(tree, make_bfs_provider(), 1), ProviderError);
}

TEST(RecursiveBandOrdering, NeverBeatsExactBandwidthOnSmallTrees) {
  for (int n = 2; n <= 12; ++n) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto g = random_connected_bounded_degree(n, 3, 0, seed);
      if (g.max_degree() < 2) continue;
      const auto cert = recursive_band_ordering_adaptive(g, make_centroid_provider());
      EXPECT_GE(cert.measured_bandwidth, exact_bandwidth(g).value) << n << " " << seed;
    }
  }
}

TEST(CuthillMcKee, IsAPermutation) {
  for (const auto& [name, g] : corpus::small()) {
    const auto sigma = cuthill_mckee_baseline(g);
    EXPECT_EQ(sigma.size(), g.num_vertices()) << name;
  }
  EXPECT_EQ(bandwidth_of_labelling(path(10), cuthill_mckee_baseline(path(10))), 1);
}

TEST(BoundFormulas, ClosedForms) {
  EXPECT_NEAR(bandwidth_bound_formula(4096, 4, 1), 4096, 1e-6);
  EXPECT_NEAR(bandwidth_bound_formula(65536, 4, 4), 6 * 65536 / 7.0, 1e-6);
  EXPECT_NEAR(bandwidth_bound_formula(65536, 4, 4), 56173.7, 0.1);
  EXPECT_NEAR(bandwidth_bound_planar(1024, 4), 3072, 1e-6);
  EXPECT_NEAR(bandwidth_bound_planar(100000, 3), 15 * 100000 / (std::log(100000.0) / std::log(3.0)), 1e-6);
  EXPECT_NEAR(bandwidth_bound_planar(4096, 4), 15 * 4096 / 6.0, 1e-6);
  EXPECT_NEAR(bandwidth_bound_minor(4096 * 27, 3, 3), 12 * 4096 * 27 / (std::log(4096.0) / std::log(3.0)), 1e-6);
  EXPECT_NEAR(bandwidth_bound_genus(4096, 2, 1), 15 * 4096 / 12.0, 1e-9);
  EXPECT_EQ(bandwidth_bound_formula(10, 3, 10), std::numeric_limits<double>::infinity());
  EXPECT_THROW(bandwidth_bound_formula(10, 1, 1), PreconditionError);
}
