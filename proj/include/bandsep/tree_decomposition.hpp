#pragma once

#include "bandsep/error.hpp"
#include "bandsep/graph.hpp"
#include "bandsep/rational.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace bandsep {

/// Bags X_i indexed 0..k-1 and tree edges over bag indices.
struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> edges;

  /// max |X_i| - 1; -1 when there are no non-empty bags.
  int width() const;

  /// Sorts bag contents and normalizes/sorts edges so that structurally equal
  /// decompositions compare equal.
  void canonicalize();

  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

/// Checks vertex coverage, edge coverage, that the bag graph is a tree, and
/// that the bags containing each vertex form a connected subtree. The empty
/// graph is decomposed by zero bags.
Verdict validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

/// Path decomposition with bags sigma^-1({i, ..., i+b}), i = 1..n-b.
/// Requires bandwidth_of_labelling(g, sigma) <= b <= n-1.
TreeDecomposition td_from_bandwidth_labelling(const Graph& g, const Labelling& sigma, int b);

/// A non-expanding set finder: given a graph, returns W with
/// 1 <= |W| <= n/2 and |N(W)| <= eps |W|, or nullopt.
using NonexpandingFinder = std::function<std::optional<VertexSet>(const Graph&)>;

struct SeparatorTreeDecomposition {
  TreeDecomposition td;
  /// Largest part size that became a leaf bag, either because it fell under
  /// the base threshold (counted as ceil(base_size/2)) or because the finder
  /// hit an expander candidate there.
  int b_used = 0;
};

/// Recursive decomposition: split with the non-expanding-set separator, recurse
/// on both sides, add S to every bag of both children and join the
/// lexicographically first bags. Parts with at most max(base_size, 2*b_used)
/// vertices become one bag. Asserts width <= max(children) + |S| at each merge
/// and width <= 2*b_used + 2*eps*n at the end.
SeparatorTreeDecomposition td_from_separators(const Graph& g, const Rational& eps,
                                              const NonexpandingFinder& finder, int base_size = 8);

/// 2*b_eps + 2*eps*n.
double treewidth_bound_formula(double b_eps, double eps, double n);

}  // namespace bandsep
