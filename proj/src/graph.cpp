#include "bandsep/graph.hpp"

#include "bandsep/error.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace bandsep {

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw PreconditionError("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw PreconditionError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
    }
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    auto& nb = adj_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      throw PreconditionError("duplicate edge at vertex " + std::to_string(v));
    }
    max_degree_ = std::max(max_degree_, static_cast<int>(nb.size()));
  }
  m_ = edges.size();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Labelling Labelling::from_order(std::vector<Vertex> order) {
  const auto n = order.size();
  std::vector<int> position(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const auto v = order[k];
    if (v < 0 || static_cast<std::size_t>(v) >= n || position[static_cast<std::size_t>(v)] != 0) {
      throw PreconditionError("ordering is not a permutation of 0..n-1");
    }
    position[static_cast<std::size_t>(v)] = static_cast<int>(k) + 1;
  }
  Labelling l;
  l.order_ = std::move(order);
  l.position_ = std::move(position);
  return l;
}

Labelling Labelling::from_positions(std::vector<int> position) {
  const auto n = position.size();
  std::vector<Vertex> order(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    const auto p = position[v];
    if (p < 1 || static_cast<std::size_t>(p) > n || order[static_cast<std::size_t>(p - 1)] != -1) {
      throw PreconditionError("positions are not a bijection onto 1..n");
    }
    order[static_cast<std::size_t>(p - 1)] = static_cast<Vertex>(v);
  }
  Labelling l;
  l.order_ = std::move(order);
  l.position_ = std::move(position);
  return l;
}

Labelling Labelling::identity(int n) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  return from_order(std::move(order));
}

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

void check_vertex_set(const VertexSet& s, int n) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= n) throw PreconditionError("vertex " + std::to_string(s[i]) + " out of range");
    if (i > 0 && s[i - 1] >= s[i]) throw PreconditionError("vertex set not sorted or has duplicates");
  }
}

int bandwidth_of_labelling(const Graph& g, const Labelling& sigma) {
  if (sigma.size() != g.num_vertices()) {
    throw PreconditionError("labelling has " + std::to_string(sigma.size()) + " entries for " +
                            std::to_string(g.num_vertices()) + " vertices");
  }
  int bw = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.neighbors(u)) bw = std::max(bw, std::abs(sigma.position(u) - sigma.position(v)));
  }
  return bw;
}

int degree_lower_bound(const Graph& g) {
  return (g.max_degree() + 1) / 2;
}

std::vector<int> multi_source_distances(const Graph& g, std::span<const Vertex> sources) {
  std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), kUnreachable);
  std::queue<Vertex> queue;
  for (Vertex s : sources) {
    if (dist[static_cast<std::size_t>(s)] != 0) {
      dist[static_cast<std::size_t>(s)] = 0;
      queue.push(s);
    }
  }
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop();
    for (Vertex v : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(v)] == kUnreachable) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push(v);
      }
    }
  }
  return dist;
}

int diameter(const Graph& g) {
  if (g.num_vertices() == 0) throw PreconditionError("diameter of the empty graph");
  int diam = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const Vertex src[] = {v};
    for (int d : multi_source_distances(g, src)) {
      if (d == kUnreachable) throw PreconditionError("diameter undefined: graph is disconnected");
      diam = std::max(diam, d);
    }
  }
  return diam;
}

Rational diameter_lower_bound(const Graph& g) {
  const int diam = diameter(g);
  if (diam == 0) return Rational(0);
  return Rational(g.num_vertices() - 1, diam);
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

std::vector<VertexSet> components_without(const Graph& g, std::span<const Vertex> removed) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<char> blocked(n, 0);
  for (Vertex v : removed) blocked[static_cast<std::size_t>(v)] = 1;
  std::vector<VertexSet> comps;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < g.num_vertices(); ++start) {
    if (blocked[static_cast<std::size_t>(start)]) continue;
    VertexSet comp;
    blocked[static_cast<std::size_t>(start)] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex v : g.neighbors(u)) {
        if (!blocked[static_cast<std::size_t>(v)]) {
          blocked[static_cast<std::size_t>(v)] = 1;
          stack.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return components_without(g, {});
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw PreconditionError("induced subgraph of an empty vertex set");
  check_vertex_set(s, g.num_vertices());
  std::vector<int> local(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < s.size(); ++i) local[static_cast<std::size_t>(s[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (Vertex w : g.neighbors(s[i])) {
      const auto j = local[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
    }
  }
  return {Graph(static_cast<int>(s.size()), edges), s};
}

VertexSet outer_neighborhood(const Graph& g, const VertexSet& set) {
  std::vector<char> inside(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex v : set) inside[static_cast<std::size_t>(v)] = 1;
  std::vector<Vertex> out;
  for (Vertex v : set) {
    for (Vertex w : g.neighbors(v)) {
      if (!inside[static_cast<std::size_t>(w)]) out.push_back(w);
    }
  }
  return make_vertex_set(std::move(out));
}

std::size_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  std::vector<char> in_b(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex v : b) in_b[static_cast<std::size_t>(v)] = 1;
  std::size_t count = 0;
  for (Vertex u : a) {
    for (Vertex w : g.neighbors(u)) count += in_b[static_cast<std::size_t>(w)] ? 1 : 0;
  }
  return count;
}

VertexSet lift(const VertexSet& local, const std::vector<Vertex>& to_parent) {
  VertexSet out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(to_parent[static_cast<std::size_t>(v)]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bandsep
