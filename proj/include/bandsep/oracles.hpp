#pragma once

#include "bandsep/graph.hpp"
#include "bandsep/rational.hpp"
#include "bandsep/tree_decomposition.hpp"

namespace bandsep {

struct ExactBandwidth {
  int value = 0;
  Labelling witness;
};

/// Branch and bound over prefix placements, for b = lower bound upwards.
/// Prunes on the degree bound and on how many positions remain for the
/// unplaced neighbors of each placed vertex; memoizes failed states.
ExactBandwidth exact_bandwidth(const Graph& g, int limit_n = 12);

struct ExactTreewidth {
  int value = 0;
  TreeDecomposition witness;
  std::vector<Vertex> elimination_order;
};

/// Subset DP over elimination prefixes:
/// TW(S) = min_{v in S} max(TW(S - v), |Q(S - v, v)|), where Q(S, v) are the
/// vertices outside S + v reachable from v through S. The witness is the
/// elimination-ordering decomposition. Returns -1 for the empty graph.
ExactTreewidth exact_treewidth(const Graph& g, int limit_n = 12);

/// max over induced subgraphs G[V'] of the minimum (s, 2/3)-separator of
/// G[V'].
int exact_separation_number(const Graph& g, int limit_n = 10);

/// Minimum |S| such that the components of G[mask] - S group into two sides
/// each of size <= 2/3 |mask|. Bitmask helper shared with the separation
/// oracle; `adjacency[v]` is the neighbor mask of v.
int min_separator_size(std::span<const std::uint32_t> adjacency, std::uint32_t mask);

struct ExactBoundedness {
  int value = 0;
  /// Largest induced eps-expander (lexicographically first of that size);
  /// empty when n == 0.
  VertexSet witness;
};

/// b_eps(G) = max |V'| such that G[V'] is an eps-expander.
ExactBoundedness exact_boundedness(const Graph& g, const Rational& eps, int limit_n = 14);

}  // namespace bandsep
