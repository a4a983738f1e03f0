#pragma once

#include "bandsep/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace bandsep {

/// Vertices are dense ids 0..n-1.
using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Distance marker for vertices unreachable from the sources.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Undirected simple graph. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on n vertices. Throws PreconditionError on self-loops,
  /// duplicate edges or ids out of range.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  std::size_t num_edges() const { return m_; }

  /// Neighbors of v in ascending order.
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  int max_degree() const { return max_degree_; }

  bool has_edge(Vertex u, Vertex v) const;

  /// Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
  int max_degree_ = 0;
};

/// Bijection from vertices to positions 1..n.
class Labelling {
 public:
  Labelling() = default;

  /// order[k] is the vertex placed at position k+1. Throws PreconditionError if
  /// order is not a permutation of 0..n-1.
  static Labelling from_order(std::vector<Vertex> order);

  /// position[v] in 1..n. Throws PreconditionError unless bijective.
  static Labelling from_positions(std::vector<int> position);

  static Labelling identity(int n);

  int size() const { return static_cast<int>(order_.size()); }
  int position(Vertex v) const { return position_[static_cast<std::size_t>(v)]; }
  const std::vector<Vertex>& order() const { return order_; }

  friend bool operator==(const Labelling&, const Labelling&) = default;

 private:
  std::vector<Vertex> order_;
  std::vector<int> position_;
};

/// Sorts and deduplicates.
VertexSet make_vertex_set(std::vector<Vertex> vertices);

/// Throws PreconditionError unless `s` is sorted, unique and inside [0, n).
void check_vertex_set(const VertexSet& s, int n);

/// max |pos(u) - pos(v)| over edges; 0 for edgeless graphs.
int bandwidth_of_labelling(const Graph& g, const Labelling& sigma);

/// ceil(max_degree / 2).
int degree_lower_bound(const Graph& g);

/// Eccentricity maximum over all vertices. Throws PreconditionError on
/// disconnected graphs or n == 0.
int diameter(const Graph& g);

/// (n-1)/diam(g), exact. Throws PreconditionError if g is disconnected.
/// For n == 1 the diameter is 0 and the bound is 0.
Rational diameter_lower_bound(const Graph& g);

/// BFS distance from the nearest source; kUnreachable where none is reachable.
std::vector<int> multi_source_distances(const Graph& g, std::span<const Vertex> sources);

bool is_connected(const Graph& g);

/// Connected components, each sorted ascending; components are ordered by
/// their smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);

/// Components of g - removed.
std::vector<VertexSet> components_without(const Graph& g, std::span<const Vertex> removed);

struct InducedSubgraph {
  Graph graph;
  /// to_parent[new id] = original id.
  std::vector<Vertex> to_parent;
};

/// G[s]. Throws PreconditionError if s is empty or not a valid vertex set.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Vertices outside `set` adjacent to some vertex of `set`.
VertexSet outer_neighborhood(const Graph& g, const VertexSet& set);

/// Number of edges with one end in a and the other in b.
std::size_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Maps ids of a subgraph back through its translation table; result sorted.
VertexSet lift(const VertexSet& local, const std::vector<Vertex>& to_parent);

}  // namespace bandsep
