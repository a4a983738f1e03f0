#include "bandsep/error.hpp"
#include "bandsep/expansion.hpp"
#include "bandsep/generators.hpp"
#include "bandsep/oracles.hpp"
#include "bandsep/tree_decomposition.hpp"

#include "corpus.hpp"

#include <gtest/gtest.h>

using namespace bandsep;

namespace {

Graph path(int n) { return generate(Family::kPath, {.n = n}); }

}  // namespace

TEST(ValidateTreeDecomposition, Examples) {
  EXPECT_TRUE(validate_tree_decomposition(path(3), {{{0, 1}, {1, 2}}, {{0, 1}}}));
  const auto uncovered = validate_tree_decomposition(path(3), {{{0, 1}, {2}}, {{0, 1}}});
  EXPECT_FALSE(uncovered);
  EXPECT_FALSE(validate_tree_decomposition(path(3), {{{0, 1}, {1, 2}}, {}}));
  EXPECT_FALSE(validate_tree_decomposition(path(3), {{{0, 1}, {2}, {1, 2}}, {{0, 1}, {1, 2}}}));
  EXPECT_TRUE(validate_tree_decomposition(Graph(), {}));
  EXPECT_EQ(TreeDecomposition{}.width(), -1);
}

TEST(TdFromBandwidthLabelling, Examples) {
  const auto p5 = td_from_bandwidth_labelling(path(5), Labelling::identity(5), 1);
  EXPECT_EQ(p5.bags.size(), 4u);
  EXPECT_EQ(p5.width(), 1);
  EXPECT_TRUE(validate_tree_decomposition(path(5), p5));

  const auto k4 = generate(Family::kComplete, {.n = 4});
  const auto td = td_from_bandwidth_labelling(k4, Labelling::from_order({2, 0, 3, 1}), 3);
  EXPECT_EQ(td.bags.size(), 1u);
  EXPECT_EQ(td.width(), 3);

  const auto c6 = generate(Family::kCycle, {.n = 6});
  const auto bw = exact_bandwidth(c6);
  ASSERT_EQ(bw.value, 2);
  const auto ctd = td_from_bandwidth_labelling(c6, bw.witness, 2);
  EXPECT_EQ(ctd.width(), 2);
  EXPECT_TRUE(validate_tree_decomposition(c6, ctd));

  EXPECT_THROW(td_from_bandwidth_labelling(c6, Labelling::identity(6), 1), PreconditionError);
}

TEST(TdFromBandwidthLabelling, ValidOnCorpus) {
  for (const auto& [name, g] : corpus::small()) {
    if (g.num_vertices() < 2 || g.num_vertices() > 10) continue;
    const auto bw = exact_bandwidth(g);
    const int b = std::max(bw.value, 1);
    const auto td = td_from_bandwidth_labelling(g, bw.witness, b);
    EXPECT_TRUE(validate_tree_decomposition(g, td)) << name;
    EXPECT_EQ(td.width(), b) << name;
  }
}

TEST(TdFromSeparators, Examples) {
  const auto half = Rational(1, 2);
  const auto empty = td_from_separators(corpus::edgeless(10), half, make_nonexpanding_finder(half), 1);
  EXPECT_EQ(empty.td.width(), 0);
  EXPECT_TRUE(validate_tree_decomposition(corpus::edgeless(10), empty.td));

  const auto quarter = Rational(1, 4);
  const auto p32 = path(32);
  const auto pr = td_from_separators(p32, quarter, make_nonexpanding_finder(quarter, kExhaustiveExpansionLimit), 4);
  EXPECT_TRUE(validate_tree_decomposition(p32, pr.td));
  EXPECT_LE(pr.td.width(), 24);
  EXPECT_LE(pr.td.width(), 2 * pr.b_used + 16);

  const auto tenth = Rational(1, 10);
  const auto k5 = generate(Family::kComplete, {.n = 5});
  const auto cliques = corpus::disjoint_union(k5, k5);
  const auto cr = td_from_separators(cliques, tenth, make_exact_nonexpanding_finder(tenth), 4);
  EXPECT_EQ(cr.td.width(), 4);
  EXPECT_TRUE(validate_tree_decomposition(cliques, cr.td));
}

TEST(TdFromSeparators, UpperBoundsExactTreewidth) {
  for (const auto& [name, g] : corpus::small()) {
    if (g.num_vertices() == 0 || g.num_vertices() > 10) continue;
    for (const Rational eps : {Rational(1, 4), Rational(1, 2)}) {
      const auto r = td_from_separators(g, eps, make_exact_nonexpanding_finder(eps), 2);
      EXPECT_TRUE(validate_tree_decomposition(g, r.td)) << name;
      EXPECT_GE(r.td.width(), exact_treewidth(g).value) << name;
    }
  }
}

TEST(TreewidthBoundFormula, Values) {
  EXPECT_DOUBLE_EQ(treewidth_bound_formula(0, 0, 100), 0.0);
  EXPECT_DOUBLE_EQ(treewidth_bound_formula(10, 0.1, 100), 40.0);
}
