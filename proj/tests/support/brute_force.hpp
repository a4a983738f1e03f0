#pragma once

// Naive reference oracles for tests. They share no code with the library's
// exact routines: plain permutation and assignment enumeration over small n.

#include "bandsep/graph.hpp"
#include "bandsep/rational.hpp"

#include <vector>

namespace bruteforce {

using bandsep::Graph;
using bandsep::Rational;
using bandsep::Vertex;

/// Minimum over all n! orders. n <= 9.
int bandwidth(const Graph& g);

/// Minimum over all elimination orders of the largest neighborhood at
/// elimination time. n <= 8. -1 for the empty graph.
int treewidth(const Graph& g);

/// Minimum |S| over all 3^k assignments of `vertices` to S/A/B with no A-B
/// edge and |A|, |B| <= alpha k.
int min_separator(const Graph& g, const std::vector<Vertex>& vertices, const Rational& alpha);

/// Maximum of min_separator over every nonempty vertex subset. n <= 10.
int separation_number(const Graph& g);

/// Every U inside `vertices` with 1 <= |U| <= k/2 has at least eps|U|
/// neighbors in vertices - U.
bool is_expander(const Graph& g, const std::vector<Vertex>& vertices, const Rational& eps);

/// Largest vertex subset inducing an eps-expander. n <= 12.
int boundedness(const Graph& g, const Rational& eps);

/// Floyd-Warshall diameter; -1 when disconnected.
int diameter(const Graph& g);

}  // namespace bruteforce
