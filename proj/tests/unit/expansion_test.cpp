#include "bandsep/error.hpp"
#include "bandsep/expansion.hpp"
#include "bandsep/generators.hpp"
#include "bandsep/oracles.hpp"

#include "brute_force.hpp"
#include "corpus.hpp"

#include <gtest/gtest.h>

using namespace bandsep;

namespace {

Graph complete(int n) { return generate(Family::kComplete, {.n = n}); }

void expect_valid_witness(const Graph& g, const ExpansionWitness& w) {
  ASSERT_EQ(w.kind, WitnessKind::kNonexpandingSet);
  EXPECT_FALSE(w.set.empty());
  EXPECT_LE(2 * w.set.size(), static_cast<std::size_t>(g.num_vertices()));
  EXPECT_EQ(w.neighborhood, outer_neighborhood(g, w.set));
  EXPECT_LE(Rational(static_cast<std::int64_t>(w.neighborhood.size())), w.eps * static_cast<std::int64_t>(w.set.size()));
}

}  // namespace

TEST(IsEpsilonExpander, Basics) {
  EXPECT_TRUE(is_epsilon_expander(complete(6), Rational(1, 2)).is_expander);
  const auto two = corpus::disjoint_union(complete(3), complete(3));
  const auto check = is_epsilon_expander(two, Rational(1, 2));
  EXPECT_FALSE(check.is_expander);
  EXPECT_EQ(check.violating_set, (VertexSet{0, 1, 2}));
  EXPECT_TRUE(is_epsilon_expander(corpus::edgeless(1), Rational(1)).is_expander);
  EXPECT_THROW(is_epsilon_expander(generate(Family::kPath, {.n = 21}), Rational(1)), SizeGuardError);
}

TEST(IsEpsilonExpander, MatchesOracle) {
  for (const auto& [name, g] : corpus::small()) {
    std::vector<Vertex> all(static_cast<std::size_t>(g.num_vertices()));
    for (int v = 0; v < g.num_vertices(); ++v) all[static_cast<std::size_t>(v)] = v;
    for (const Rational eps : {Rational(1, 4), Rational(1, 2), Rational(1)}) {
      EXPECT_EQ(is_epsilon_expander(g, eps).is_expander, bruteforce::is_expander(g, all, eps)) << name;
    }
  }
}

TEST(NonexpandingSet, Examples) {
  const auto two = corpus::disjoint_union(complete(3), complete(3));
  const auto w = nonexpanding_set(two, Rational(1, 2), SearchMode::kExact);
  ASSERT_TRUE(w);
  expect_valid_witness(two, *w);
  EXPECT_EQ(w->set.size(), 3u);
  EXPECT_TRUE(w->neighborhood.empty());

  const auto k6 = nonexpanding_set(complete(6), Rational(1, 2), SearchMode::kExact);
  ASSERT_TRUE(k6);
  EXPECT_EQ(k6->kind, WitnessKind::kExhaustiveAbsence);

  const auto p20 = generate(Family::kPath, {.n = 20});
  const auto sweep = nonexpanding_set(p20, Rational(1, 10), SearchMode::kSweep);
  ASSERT_TRUE(sweep);
  expect_valid_witness(p20, *sweep);
  EXPECT_EQ(sweep->set.size(), 10u);
  EXPECT_EQ(sweep->neighborhood.size(), 1u);
}

TEST(NonexpandingSet, ExactFailureAndExpansionAgree) {
  for (const auto& [name, g] : corpus::small()) {
    for (const Rational eps : {Rational(1, 4), Rational(1, 2), Rational(1)}) {
      const auto w = nonexpanding_set(g, eps, SearchMode::kExact);
      ASSERT_TRUE(w) << name;
      const bool expander = is_epsilon_expander(g, eps).is_expander;
      if (w->kind == WitnessKind::kExhaustiveAbsence) {
        EXPECT_TRUE(expander) << name;
      } else {
        expect_valid_witness(g, *w);
      }
      if (!expander) {
        EXPECT_EQ(w->kind, WitnessKind::kNonexpandingSet) << name;
      }
    }
  }
}

TEST(NonexpandingSet, SweepWitnessesAreAlwaysGenuine) {
  for (const auto& [name, g] : corpus::large()) {
    const auto w = nonexpanding_set(g, Rational(1, 4), SearchMode::kSweep);
    if (w) expect_valid_witness(g, *w);
  }
}

TEST(Finders, HybridPrefersWholeComponents) {
  const auto g = corpus::disjoint_union(complete(4), generate(Family::kCycle, {.n = 6}));
  const auto w = make_nonexpanding_finder(Rational(1, 10))(g);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (VertexSet{0, 1, 2, 3}));
  EXPECT_FALSE(make_exact_nonexpanding_finder(Rational(1, 2))(complete(6)));
}

TEST(BoundednessBounds, Examples) {
  const auto k8 = boundedness_bounds(complete(8), Rational(1, 2));
  EXPECT_EQ(k8.lower, 8);
  EXPECT_EQ(k8.upper, 8);

  // P_3 is already a 1-expander, so the bandwidth route must allow odd order.
  const auto p30 = generate(Family::kPath, {.n = 30});
  const auto path_bounds = boundedness_bounds(p30, Rational(1), 1);
  EXPECT_EQ(path_bounds.upper, 3);
  EXPECT_EQ(path_bounds.lower, 3);
  EXPECT_EQ(exact_boundedness(generate(Family::kPath, {.n = 12}), Rational(1)).value, 3);

  const auto none = boundedness_bounds(corpus::edgeless(5), Rational(1, 2));
  EXPECT_EQ(none.lower, 1);
  EXPECT_EQ(none.upper, 1);
}

TEST(BoundednessBounds, BracketExactValue) {
  for (const auto& [name, g] : corpus::small()) {
    if (g.num_vertices() > 12) continue;
    for (const Rational eps : {Rational(1, 2), Rational(1)}) {
      const int exact = exact_boundedness(g, eps).value;
      const int bw = exact_bandwidth(g).value;
      const auto heuristic = boundedness_bounds(g, eps, bw, 0);
      EXPECT_LE(heuristic.lower, exact) << name;
      EXPECT_GE(heuristic.upper, exact) << name;
      if (!heuristic.lower_witness.empty()) {
        EXPECT_TRUE(bruteforce::is_expander(g, heuristic.lower_witness, eps)) << name;
        EXPECT_EQ(static_cast<int>(heuristic.lower_witness.size()), heuristic.lower);
      }
    }
  }
}
