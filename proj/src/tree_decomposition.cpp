#include "bandsep/tree_decomposition.hpp"

#include "bandsep/error.hpp"
#include "bandsep/separators.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace bandsep {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
  return w;
}

void TreeDecomposition::canonicalize() {
  for (auto& bag : bags) bag = make_vertex_set(std::move(bag));
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

Verdict validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  const int n = g.num_vertices();
  const int k = static_cast<int>(td.bags.size());
  if (k == 0) {
    return n == 0 && td.edges.empty() ? Verdict::pass() : Verdict::fail("no bags");
  }

  std::vector<std::vector<int>> bags_of(static_cast<std::size_t>(n));
  for (int i = 0; i < k; ++i) {
    auto sorted = td.bags[static_cast<std::size_t>(i)];
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t j = 0; j < sorted.size(); ++j) {
      const Vertex v = sorted[j];
      if (v < 0 || v >= n) return Verdict::fail("bag " + std::to_string(i) + " has unknown vertex " + std::to_string(v));
      if (j > 0 && sorted[j - 1] == v) return Verdict::fail("bag " + std::to_string(i) + " repeats vertex " + std::to_string(v));
      bags_of[static_cast<std::size_t>(v)].push_back(i);
    }
  }

  // Tree: k - 1 edges, no cycle.
  if (static_cast<int>(td.edges.size()) != k - 1) {
    return Verdict::fail("tree: " + std::to_string(td.edges.size()) + " edges for " + std::to_string(k) + " bags");
  }
  std::vector<int> parent(static_cast<std::size_t>(k));
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [a, b] : td.edges) {
    if (a < 0 || b < 0 || a >= k || b >= k || a == b) return Verdict::fail("tree: bad edge");
    const int ra = find_root(parent, a);
    const int rb = find_root(parent, b);
    if (ra == rb) return Verdict::fail("tree: cycle through bags " + std::to_string(a) + "," + std::to_string(b));
    parent[static_cast<std::size_t>(ra)] = rb;
  }

  // (a) every vertex in some bag.
  for (Vertex v = 0; v < n; ++v) {
    if (bags_of[static_cast<std::size_t>(v)].empty()) return Verdict::fail("(a) vertex " + std::to_string(v) + " uncovered");
  }

  // (b) every edge inside some bag.
  for (const auto& [u, v] : g.edges()) {
    const auto& bu = bags_of[static_cast<std::size_t>(u)];
    const auto& bv = bags_of[static_cast<std::size_t>(v)];
    std::vector<int> common;
    std::set_intersection(bu.begin(), bu.end(), bv.begin(), bv.end(), std::back_inserter(common));
    if (common.empty()) {
      return Verdict::fail("(b) edge {" + std::to_string(u) + "," + std::to_string(v) + "} uncovered");
    }
  }

  // (c) bags containing v induce a subtree: a forest on c nodes is
  // connected iff it has c - 1 edges.
  std::vector<int> inside_edges(static_cast<std::size_t>(n), 0);
  for (const auto& [a, b] : td.edges) {
    const auto& ba = td.bags[static_cast<std::size_t>(a)];
    for (Vertex v : ba) {
      const auto& bb = td.bags[static_cast<std::size_t>(b)];
      if (std::find(bb.begin(), bb.end(), v) != bb.end()) ++inside_edges[static_cast<std::size_t>(v)];
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    const int c = static_cast<int>(bags_of[static_cast<std::size_t>(v)].size());
    if (inside_edges[static_cast<std::size_t>(v)] != c - 1) {
      return Verdict::fail("(c) bags containing vertex " + std::to_string(v) + " are disconnected");
    }
  }
  return Verdict::pass();
}

TreeDecomposition td_from_bandwidth_labelling(const Graph& g, const Labelling& sigma, int b) {
  const int n = g.num_vertices();
  if (n == 0) throw PreconditionError("td_from_bandwidth_labelling: empty graph");
  if (b < 0 || b > n - 1) throw PreconditionError("td_from_bandwidth_labelling: need 0 <= b <= n-1");
  if (bandwidth_of_labelling(g, sigma) > b) {
    throw PreconditionError("td_from_bandwidth_labelling: labelling bandwidth exceeds b");
  }
  TreeDecomposition td;
  const auto& order = sigma.order();
  for (int i = 0; i + b < n; ++i) {
    VertexSet bag(order.begin() + i, order.begin() + i + b + 1);
    td.bags.push_back(make_vertex_set(std::move(bag)));
    if (i > 0) td.edges.emplace_back(i - 1, i);
  }
  return td;
}

namespace {

class SeparatorRecursion {
 public:
  SeparatorRecursion(const Graph& g, const Rational& eps, const NonexpandingFinder& finder, int base_size)
      : g_(g), eps_(eps), finder_(finder), base_size_(base_size), b_used_((base_size + 1) / 2) {}

  TreeDecomposition build(const VertexSet& part) {
    TreeDecomposition td;
    if (part.empty()) return td;
    const int size = static_cast<int>(part.size());
    if (size <= std::max(base_size_, 2 * b_used_)) return leaf(part);
    const auto sub = induced_subgraph(g_, part);
    Separator sep;
    try {
      sep = separator_from_nonexpanding(sub.graph, eps_, finder_);
    } catch (const ExpanderEncountered&) {
      b_used_ = std::max(b_used_, size);
      return leaf(part);
    }
    const auto s = lift(sep.s, sub.to_parent);
    auto left = build(lift(sep.a, sub.to_parent));
    auto right = build(lift(sep.b, sub.to_parent));
    const int child_width = std::max(left.width(), right.width());

    const auto offset = static_cast<int>(left.bags.size());
    td.bags = std::move(left.bags);
    td.edges = std::move(left.edges);
    for (auto& bag : right.bags) td.bags.push_back(std::move(bag));
    for (const auto& [a, b] : right.edges) td.edges.emplace_back(a + offset, b + offset);
    for (auto& bag : td.bags) {
      bag.insert(bag.end(), s.begin(), s.end());
      bag = make_vertex_set(std::move(bag));
    }
    if (offset > 0 && static_cast<int>(td.bags.size()) > offset) {
      td.edges.emplace_back(lex_first(td, 0, offset), lex_first(td, offset, static_cast<int>(td.bags.size())));
    } else if (td.bags.empty()) {
      td.bags.push_back(s);
    }

    if (td.width() > std::max(child_width, -1) + static_cast<int>(s.size())) {
      throw CertificateError("td_from_separators: merge exceeded max(children) + |S|");
    }
    return td;
  }

  int b_used() const { return b_used_; }

 private:
  // One bag per component of G[part], chained.
  TreeDecomposition leaf(const VertexSet& part) const {
    TreeDecomposition td;
    const auto sub = induced_subgraph(g_, part);
    for (const auto& comp : connected_components(sub.graph)) {
      if (!td.bags.empty()) td.edges.emplace_back(static_cast<int>(td.bags.size()) - 1, static_cast<int>(td.bags.size()));
      td.bags.push_back(lift(comp, sub.to_parent));
    }
    return td;
  }

  static int lex_first(const TreeDecomposition& td, int from, int to) {
    int best = from;
    for (int i = from + 1; i < to; ++i) {
      if (td.bags[static_cast<std::size_t>(i)] < td.bags[static_cast<std::size_t>(best)]) best = i;
    }
    return best;
  }

  const Graph& g_;
  Rational eps_;
  const NonexpandingFinder& finder_;
  int base_size_;
  int b_used_;
};

}  // namespace

SeparatorTreeDecomposition td_from_separators(const Graph& g, const Rational& eps, const NonexpandingFinder& finder,
                                              int base_size) {
  if (eps <= 0) throw PreconditionError("td_from_separators: eps must be positive");
  if (base_size < 1) throw PreconditionError("td_from_separators: base_size must be >= 1");
  SeparatorRecursion recursion(g, eps, finder, base_size);
  VertexSet all(static_cast<std::size_t>(g.num_vertices()));
  std::iota(all.begin(), all.end(), 0);
  SeparatorTreeDecomposition out{recursion.build(all), recursion.b_used()};

  if (auto verdict = validate_tree_decomposition(g, out.td); !verdict) {
    throw CertificateError("td_from_separators produced an invalid decomposition: " + verdict.reason);
  }
  const Rational bound = Rational(2 * out.b_used) + Rational(2) * eps * g.num_vertices();
  if (Rational(out.td.width()) > bound) {
    throw CertificateError("td_from_separators: width " + std::to_string(out.td.width()) + " exceeds 2 b + 2 eps n = " +
                           to_string(bound));
  }
  return out;
}

double treewidth_bound_formula(double b_eps, double eps, double n) {
  return 2.0 * b_eps + 2.0 * eps * n;
}

}  // namespace bandsep
