#include "bandsep/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

namespace bandsep {

int bucket_index(int part, int dist, int b) {
  const int c = (b + 1) / 2;
  if (dist == kUnreachable || dist >= std::abs(c - part)) return part;
  if (dist < c - part) return c - dist;
  return c + dist;
}

Verdict validate_spr_partition(const Graph& g, const SPRPartition& part) {
  const int n = g.num_vertices();
  const int b = part.buckets();
  if (b < 3) return Verdict::fail("cover: need at least 3 buckets, got " + std::to_string(b));
  if (part.r.size() != part.p.size()) return Verdict::fail("cover: P and R have different bucket counts");

  // owner[v]: 0 for S, i for P_i / R_i; -1 unassigned.
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  auto claim = [&](const VertexSet& set, int tag) -> std::optional<std::string> {
    if (!std::is_sorted(set.begin(), set.end()) || std::adjacent_find(set.begin(), set.end()) != set.end()) {
      return "cover: a set is not sorted and duplicate-free";
    }
    for (Vertex v : set) {
      if (v < 0 || v >= n) return "cover: vertex " + std::to_string(v) + " out of range";
      if (owner[static_cast<std::size_t>(v)] != -1) return "cover: vertex " + std::to_string(v) + " assigned twice";
      owner[static_cast<std::size_t>(v)] = tag;
    }
    return std::nullopt;
  };
  if (auto why = claim(part.s, 0)) return Verdict::fail(*why);
  for (int i = 0; i < b; ++i) {
    if (auto why = claim(part.p[static_cast<std::size_t>(i)], i + 1)) return Verdict::fail(*why);
    if (auto why = claim(part.r[static_cast<std::size_t>(i)], i + 1)) return Verdict::fail(*why);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (owner[static_cast<std::size_t>(v)] == -1) return Verdict::fail("cover: vertex " + std::to_string(v) + " unassigned");
  }

  for (int i = 0; i < b; ++i) {
    const auto size = static_cast<int>(part.r[static_cast<std::size_t>(i)].size());
    if (size > part.r_bound) {
      return Verdict::fail("(i): |R_" + std::to_string(i + 1) + "| = " + std::to_string(size) + " > r = " +
                           std::to_string(part.r_bound));
    }
  }

  for (const auto& [u, v] : g.edges()) {
    const int ou = owner[static_cast<std::size_t>(u)];
    const int ov = owner[static_cast<std::size_t>(v)];
    if (ou != 0 && ov != 0 && ou != ov) {
      return Verdict::fail("(ii): edge {" + std::to_string(u) + "," + std::to_string(v) + "} joins parts " +
                           std::to_string(ou) + " and " + std::to_string(ov));
    }
  }

  const auto dist = multi_source_distances(g, part.s);
  for (int i = 0; i < b; ++i) {
    for (Vertex v : part.r[static_cast<std::size_t>(i)]) {
      if (dist[static_cast<std::size_t>(v)] < b / 2) {
        return Verdict::fail("(iii): vertex " + std::to_string(v) + " of R_" + std::to_string(i + 1) +
                             " at distance " + std::to_string(dist[static_cast<std::size_t>(v)]) + " from S");
      }
    }
  }
  return Verdict::pass();
}

Verdict validate_bucket_assignment(const Graph& g, const BucketAssignment& buckets, int size_limit) {
  if (buckets.bucket.size() != static_cast<std::size_t>(g.num_vertices())) return Verdict::fail("wrong length");
  for (const auto& [u, v] : g.edges()) {
    if (std::abs(buckets.bucket[static_cast<std::size_t>(u)] - buckets.bucket[static_cast<std::size_t>(v)]) > 1) {
      return Verdict::fail("edge {" + std::to_string(u) + "," + std::to_string(v) + "} spans more than one bucket");
    }
  }
  for (std::size_t j = 0; j < buckets.sizes.size(); ++j) {
    if (buckets.sizes[j] > size_limit) {
      return Verdict::fail("bucket " + std::to_string(j + 1) + " has " + std::to_string(buckets.sizes[j]) +
                           " vertices, limit " + std::to_string(size_limit));
    }
  }
  return Verdict::pass();
}

int SeparationTree::leaf_count() const {
  return static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [](const Node& x) { return x.is_leaf(); }));
}

int SeparationTree::internal_count() const { return static_cast<int>(nodes.size()) - leaf_count(); }

Verdict validate_separation_tree(const SeparationTree& tree, int b) {
  if (tree.n <= 0) return Verdict::fail("n must be positive");
  if (b < 1) return Verdict::fail("b must be positive");
  const auto count = static_cast<int>(tree.nodes.size());
  if (tree.root < 0 || tree.root >= count) return Verdict::fail("root out of range");

  std::vector<char> seen(tree.nodes.size(), 0);
  std::vector<int> stack{tree.root};
  std::int64_t total = 0;
  while (!stack.empty()) {
    const int w = stack.back();
    stack.pop_back();
    if (seen[static_cast<std::size_t>(w)]) return Verdict::fail("node " + std::to_string(w) + " reached twice");
    seen[static_cast<std::size_t>(w)] = 1;
    const auto& node = tree.nodes[static_cast<std::size_t>(w)];
    if (node.size < 0) return Verdict::fail("negative label");
    total += node.size;
    if (node.is_leaf()) {
      if (node.right >= 0) return Verdict::fail("node " + std::to_string(w) + " has only a right child");
      continue;
    }
    for (int c : {node.left, node.right}) {
      if (c < 0 || c >= count) return Verdict::fail("node " + std::to_string(w) + " lacks two children");
      stack.push_back(c);
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return Verdict::fail("unreachable node");
  if (total > tree.n) return Verdict::fail("labels sum above 1");

  const int leaves = tree.leaf_count();
  if (leaves > b) return Verdict::fail(std::to_string(leaves) + " leaves exceed b = " + std::to_string(b));
  if (tree.internal_count() != leaves - 1) return Verdict::fail("internal count differs from leaves - 1");

  for (std::size_t w = 0; w < tree.nodes.size(); ++w) {
    const auto& node = tree.nodes[w];
    if (node.is_leaf()) continue;
    std::int64_t mass = node.size;
    int leaf_children = 0;
    for (int c : {node.left, node.right}) {
      const auto& child = tree.nodes[static_cast<std::size_t>(c)];
      if (child.is_leaf()) {
        mass += child.size;
        ++leaf_children;
      }
    }
    // l(w) + sum l(u) >= |L(w)| / b, scaled by n b.
    if (mass * b < static_cast<std::int64_t>(leaf_children) * tree.n) {
      return Verdict::fail("node " + std::to_string(w) + " violates the leaf-mass inequality");
    }
  }
  return Verdict::pass();
}

OrderingCertificate decomposition_ordering(const Graph& g, const SPRPartition& part) {
  const int n = g.num_vertices();
  if (n == 0) throw PreconditionError("decomposition_ordering: empty graph");
  if (auto v = validate_spr_partition(g, part); !v) {
    throw PreconditionError("decomposition_ordering: condition " + v.reason);
  }
  const int b = part.buckets();
  const int middle = (b + 1) / 2;
  const auto dist = multi_source_distances(g, part.s);

  BucketAssignment buckets;
  buckets.bucket.assign(static_cast<std::size_t>(n), 0);
  buckets.sizes.assign(static_cast<std::size_t>(b), 0);
  for (Vertex v : part.s) buckets.bucket[static_cast<std::size_t>(v)] = middle;
  std::size_t p_total = 0;
  for (int i = 1; i <= b; ++i) {
    for (Vertex v : part.r[static_cast<std::size_t>(i - 1)]) buckets.bucket[static_cast<std::size_t>(v)] = i;
    for (Vertex v : part.p[static_cast<std::size_t>(i - 1)]) {
      buckets.bucket[static_cast<std::size_t>(v)] = bucket_index(i, dist[static_cast<std::size_t>(v)], b);
    }
    p_total += part.p[static_cast<std::size_t>(i - 1)].size();
  }
  for (int j : buckets.bucket) ++buckets.sizes[static_cast<std::size_t>(j - 1)];

  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) {
    return buckets.bucket[static_cast<std::size_t>(x)] < buckets.bucket[static_cast<std::size_t>(y)];
  });

  OrderingCertificate cert;
  cert.labelling = Labelling::from_order(std::move(order));
  cert.measured_bandwidth = bandwidth_of_labelling(g, cert.labelling);
  const int mass = static_cast<int>(part.s.size() + p_total) + part.r_bound;
  cert.guaranteed_bound = 2 * mass;
  if (auto v = validate_bucket_assignment(g, buckets, mass); !v) {
    throw CertificateError("decomposition_ordering: bucket invariant: " + v.reason);
  }
  if (cert.measured_bandwidth >= cert.guaranteed_bound) {
    throw CertificateError("decomposition_ordering: bandwidth " + std::to_string(cert.measured_bandwidth) +
                           " not below " + std::to_string(cert.guaranteed_bound));
  }
  cert.partition = part;
  cert.buckets = std::move(buckets);
  return cert;
}

namespace {

struct OversizeSeparator {
  int size;
};

OrderingCertificate fallback_certificate(const Graph& g, int s_cap, double beta) {
  OrderingCertificate cert;
  cert.labelling = Labelling::identity(g.num_vertices());
  cert.measured_bandwidth = bandwidth_of_labelling(g, cert.labelling);
  cert.fallback = true;
  cert.beta = beta;
  cert.separator_budget = s_cap;
  return cert;
}

OrderingCertificate run_driver(const Graph& g, const SeparatorProvider& provider, int s_cap, bool strict) {
  const int n = g.num_vertices();
  const int delta = g.max_degree();
  if (delta < 2) throw PreconditionError("recursive_band_ordering: maximum degree must be at least 2");
  if (s_cap < 1) throw PreconditionError("recursive_band_ordering: s_cap must be at least 1");

  const double beta = std::log(static_cast<double>(n)) / std::log(static_cast<double>(delta)) -
                      std::log(static_cast<double>(s_cap)) / std::log(static_cast<double>(delta));
  if (delta == 2 || beta <= 6.0 + 1e-9) return fallback_certificate(g, s_cap, beta);
  const int b = static_cast<int>(std::floor(beta));
  const auto small = [&](std::size_t size) { return static_cast<std::int64_t>(size) * b <= 2LL * n; };

  SeparationTree tree;
  tree.n = n;
  tree.nodes.push_back({n, -1, -1});
  std::vector<VertexSet> parts;  // parts[k] belongs to tree node k
  VertexSet all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  parts.push_back(std::move(all));

  std::vector<Separator> used;
  // Every part still present is a leaf; rounds split all oversized leaves.
  std::vector<int> active{0};
  bool first = true;
  while (true) {
    std::vector<int> next;
    bool split_any = false;
    for (int node : active) {
      const auto& vertices = parts[static_cast<std::size_t>(node)];
      if (!first && small(vertices.size())) {
        next.push_back(node);
        continue;
      }
      split_any = true;
      const auto sub = induced_subgraph(g, vertices);
      auto sep = provider.find(sub.graph, kTwoThirds);
      if (!sep) {
        throw ProviderError("recursive_band_ordering: provider '" + provider.name + "' failed on a part of " +
                            std::to_string(vertices.size()) + " vertices");
      }
      if (auto v = validate_separator(sub.graph, *sep); !v || sep->alpha != kTwoThirds) {
        throw CertificateError("recursive_band_ordering: invalid separator from '" + provider.name +
                               "': " + (v ? std::string("alpha is not 2/3") : v.reason));
      }
      const auto size = static_cast<int>(sep->s.size());
      if (size > s_cap) {
        if (!strict) throw OversizeSeparator{size};
        throw ProviderError("recursive_band_ordering: separator of size " + std::to_string(size) +
                            " exceeds s_cap " + std::to_string(s_cap));
      }
      Separator lifted{lift(sep->s, sub.to_parent), lift(sep->a, sub.to_parent), lift(sep->b, sub.to_parent),
                       sep->alpha, sep->source};
      const int left = static_cast<int>(tree.nodes.size());
      tree.nodes[static_cast<std::size_t>(node)] = {size, left, left + 1};
      tree.nodes.push_back({static_cast<int>(lifted.a.size()), -1, -1});
      tree.nodes.push_back({static_cast<int>(lifted.b.size()), -1, -1});
      parts.push_back(lifted.a);
      parts.push_back(lifted.b);
      next.push_back(left);
      next.push_back(left + 1);
      used.push_back(std::move(lifted));
    }
    active = std::move(next);
    first = false;
    if (!split_any) break;
    if (static_cast<int>(active.size()) > b) {
      throw CertificateError("recursive_band_ordering: more than b parts; a separator broke the leaf bound");
    }
  }

  if (auto v = validate_separation_tree(tree, b); !v) {
    throw CertificateError("recursive_band_ordering: separation tree: " + v.reason);
  }

  SPRPartition part;
  for (const auto& sep : used) part.s.insert(part.s.end(), sep.s.begin(), sep.s.end());
  part.s = make_vertex_set(std::move(part.s));
  const auto dist = multi_source_distances(g, part.s);
  part.p.assign(static_cast<std::size_t>(b), {});
  part.r.assign(static_cast<std::size_t>(b), {});
  for (std::size_t j = 0; j < active.size(); ++j) {
    for (Vertex v : parts[static_cast<std::size_t>(active[j])]) {
      (dist[static_cast<std::size_t>(v)] < b / 2 ? part.p[j] : part.r[j]).push_back(v);
    }
  }
  part.r_bound = static_cast<int>(2LL * n / b);

  auto cert = decomposition_ordering(g, part);
  cert.beta = beta;
  cert.formula_bound = 6.0 * n / beta;
  cert.separator_budget = s_cap;
  cert.tree = std::move(tree);
  cert.separators = std::move(used);
  if (cert.measured_bandwidth > *cert.formula_bound + 1e-9) {
    throw CertificateError("recursive_band_ordering: bandwidth " + std::to_string(cert.measured_bandwidth) +
                           " above 6n/beta");
  }
  return cert;
}

}  // namespace

OrderingCertificate recursive_band_ordering(const Graph& g, const SeparatorProvider& provider, int s_cap) {
  return run_driver(g, provider, s_cap, true);
}

OrderingCertificate recursive_band_ordering_adaptive(const Graph& g, const SeparatorProvider& provider) {
  int s_cap = std::max(1, provider.s_max);
  while (true) {
    try {
      return run_driver(g, provider, s_cap, false);
    } catch (const OversizeSeparator& over) {
      s_cap = over.size;
    }
  }
}

Labelling cuthill_mckee_baseline(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  auto by_degree = [&](Vertex x, Vertex y) {
    return g.degree(x) != g.degree(y) ? g.degree(x) < g.degree(y) : x < y;
  };
  for (const auto& comp : connected_components(g)) {
    Vertex start = *std::min_element(comp.begin(), comp.end(), by_degree);
    int ecc = -1;
    while (true) {
      const Vertex src[] = {start};
      const auto dist = multi_source_distances(g, src);
      int far = 0;
      for (Vertex v : comp) far = std::max(far, dist[static_cast<std::size_t>(v)]);
      if (far <= ecc) break;
      ecc = far;
      Vertex best = -1;
      for (Vertex v : comp) {
        if (dist[static_cast<std::size_t>(v)] == far && (best < 0 || by_degree(v, best))) best = v;
      }
      if (best == start) break;
      start = best;
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    const std::size_t begin = order.size();
    std::deque<Vertex> queue{start};
    seen[static_cast<std::size_t>(start)] = 1;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      order.push_back(v);
      std::vector<Vertex> fresh;
      for (Vertex w : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          fresh.push_back(w);
        }
      }
      std::sort(fresh.begin(), fresh.end(), by_degree);
      queue.insert(queue.end(), fresh.begin(), fresh.end());
    }
    std::reverse(order.begin() + static_cast<std::ptrdiff_t>(begin), order.end());
  }
  return Labelling::from_order(std::move(order));
}

namespace {

double log_base(double x, double base) { return std::log(x) / std::log(base); }

double over_log(double coeff, double n, double base, double arg) {
  if (!(arg > 1.0)) return std::numeric_limits<double>::infinity();
  return coeff * n / log_base(arg, base);
}

void require_degree(double d) {
  if (d < 2) throw PreconditionError("bandwidth bound: maximum degree must be at least 2");
}

}  // namespace

double bandwidth_bound_formula(double n, double max_degree, double s) {
  require_degree(max_degree);
  return over_log(6, n, max_degree, n / s);
}

double bandwidth_bound_planar(double n, double max_degree) {
  require_degree(max_degree);
  return over_log(15, n, max_degree, n);
}

double bandwidth_bound_genus(double n, double max_degree, double genus) {
  require_degree(max_degree);
  return over_log(15, n, max_degree, n / genus);
}

double bandwidth_bound_minor(double n, double max_degree, double h) {
  require_degree(max_degree);
  return over_log(12, n, max_degree, n / (h * h * h));
}

}  // namespace bandsep
