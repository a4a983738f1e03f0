#include "bandsep/oracles.hpp"

#include "bandsep/error.hpp"
#include "detail/masks.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace bandsep {

using detail::Mask;

namespace {

void guard(const char* what, int n, int limit_n, int hard_cap) {
  if (limit_n > hard_cap) {
    throw PreconditionError(std::string(what) + ": limit " + std::to_string(limit_n) + " above supported maximum " +
                            std::to_string(hard_cap));
  }
  if (n > limit_n) throw SizeGuardError(what, static_cast<std::size_t>(n), static_cast<std::size_t>(limit_n));
}

// Decides whether a labelling of bandwidth <= b exists by extending prefixes.
class BandwidthSearch {
 public:
  BandwidthSearch(const Graph& g, int b)
      : g_(g), b_(b), n_(g.num_vertices()), adj_(detail::adjacency_masks(g)),
        position_(static_cast<std::size_t>(n_), -1) {}

  bool run() { return extend(0); }
  const std::vector<Vertex>& order() const { return order_; }

 private:
  bool extend(Mask placed) {
    const int p = static_cast<int>(order_.size());
    if (p == n_) return true;

    // Every placed vertex at position q must see all neighbors by q + b.
    if (p - b_ - 1 >= 0 && (adj_[static_cast<std::size_t>(order_[static_cast<std::size_t>(p - b_ - 1)])] & ~placed) != 0) {
      return false;
    }
    // Partial spread: unplaced neighbors due by deadline d need d - p + 1 slots.
    Mask due = 0;
    for (int q = std::max(0, p - b_); q < p; ++q) {
      due |= adj_[static_cast<std::size_t>(order_[static_cast<std::size_t>(q)])] & ~placed;
      if (detail::popcount(due) > q + b_ - p + 1) return false;
    }

    std::string key = state_key(placed, p);
    if (failed_.contains(key)) return false;

    for (Vertex v = 0; v < n_; ++v) {
      if (placed & (Mask{1} << v)) continue;
      bool ok = true;
      for (Vertex w : g_.neighbors(v)) {
        const int q = position_[static_cast<std::size_t>(w)];
        if (q >= 0 && p - q > b_) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      position_[static_cast<std::size_t>(v)] = p;
      order_.push_back(v);
      if (extend(placed | (Mask{1} << v))) return true;
      order_.pop_back();
      position_[static_cast<std::size_t>(v)] = -1;
    }
    failed_.insert(std::move(key));
    return false;
  }

  // The future depends only on the placed set and the last b placed vertices.
  std::string state_key(Mask placed, int p) const {
    std::string key(sizeof(Mask), '\0');
    for (std::size_t i = 0; i < sizeof(Mask); ++i) key[i] = static_cast<char>((placed >> (8 * i)) & 0xff);
    for (int q = std::max(0, p - b_); q < p; ++q) key.push_back(static_cast<char>(order_[static_cast<std::size_t>(q)]));
    return key;
  }

  const Graph& g_;
  int b_;
  int n_;
  std::vector<Mask> adj_;
  std::vector<int> position_;
  std::vector<Vertex> order_;
  std::unordered_set<std::string> failed_;
};

// Vertices outside s + v reachable from v through s.
Mask reach_through(const std::vector<Mask>& adj, Mask s, Vertex v) {
  Mask inner = Mask{1} << v;
  Mask frontier = inner;
  Mask outside = 0;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    outside |= next & ~s;
    next &= s & ~inner;
    inner |= next;
    frontier = next;
  }
  return outside & ~(Mask{1} << v);
}

bool is_expander_mask(const std::vector<Mask>& unions, Mask vp, const Rational& eps) {
  const int size = detail::popcount(vp);
  for (Mask u = vp; u != 0; u = (u - 1) & vp) {
    const int k = detail::popcount(u);
    if (2 * k > size) continue;
    const int nb = detail::popcount(unions[u] & vp & ~u);
    if (Rational(nb) < eps * k) return false;
  }
  return true;
}

}  // namespace

ExactBandwidth exact_bandwidth(const Graph& g, int limit_n) {
  const int n = g.num_vertices();
  guard("exact_bandwidth", n, limit_n, 20);
  if (g.num_edges() == 0) return {0, Labelling::identity(n)};
  for (int b = std::max(1, degree_lower_bound(g)); b < n; ++b) {
    BandwidthSearch search(g, b);
    if (search.run()) return {b, Labelling::from_order(search.order())};
  }
  throw CertificateError("exact_bandwidth: no labelling found up to n-1");
}

ExactTreewidth exact_treewidth(const Graph& g, int limit_n) {
  const int n = g.num_vertices();
  guard("exact_treewidth", n, limit_n, 20);
  ExactTreewidth out;
  if (n == 0) {
    out.value = -1;
    return out;
  }
  const auto adj = detail::adjacency_masks(g);
  const std::size_t total = std::size_t{1} << n;
  std::vector<int> tw(total, 0);
  std::vector<signed char> choice(total, -1);
  tw[0] = -1;
  for (std::size_t s = 1; s < total; ++s) {
    int best = n + 1;
    for (Mask rest = static_cast<Mask>(s); rest != 0; rest &= rest - 1) {
      const Vertex v = std::countr_zero(rest);
      const Mask without = static_cast<Mask>(s) & ~(Mask{1} << v);
      const int cand = std::max(tw[without], detail::popcount(reach_through(adj, without, v)));
      if (cand < best) {
        best = cand;
        choice[s] = static_cast<signed char>(v);
      }
    }
    tw[s] = best;
  }
  out.value = tw[total - 1];

  // Last eliminated vertex of S is choice[S].
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  Mask s = static_cast<Mask>(total - 1);
  for (int i = n - 1; i >= 0; --i) {
    const Vertex v = choice[s];
    order[static_cast<std::size_t>(i)] = v;
    s &= ~(Mask{1} << v);
  }
  out.elimination_order = order;

  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  TreeDecomposition td;
  td.bags.resize(static_cast<std::size_t>(n));
  std::vector<int> roots;
  Mask before = 0;
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[static_cast<std::size_t>(i)];
    const Mask later = reach_through(adj, before, v);
    auto bag = detail::from_mask(later | (Mask{1} << v));
    td.bags[static_cast<std::size_t>(i)] = bag;
    if (later == 0) {
      roots.push_back(i);
    } else {
      int parent = n;
      for (Vertex w : detail::from_mask(later)) parent = std::min(parent, rank[static_cast<std::size_t>(w)]);
      td.edges.emplace_back(i, parent);
    }
    before |= Mask{1} << v;
  }
  for (std::size_t r = 1; r < roots.size(); ++r) td.edges.emplace_back(roots[r - 1], roots[r]);
  td.canonicalize();
  if (auto verdict = validate_tree_decomposition(g, td); !verdict || td.width() != out.value) {
    throw CertificateError("exact_treewidth witness invalid: " + verdict.reason);
  }
  out.witness = std::move(td);
  return out;
}

int min_separator_size(std::span<const std::uint32_t> adjacency, std::uint32_t mask) {
  const std::vector<Mask> adj(adjacency.begin(), adjacency.end());
  const int k = detail::popcount(mask);
  int best = k;
  // S = mask always works (A = B = {}); look for anything smaller.
  for (Mask s = (mask - 1) & mask;; s = (s - 1) & mask) {
    const int size = detail::popcount(s);
    if (size < best) {
      const int rest = k - size;
      std::uint64_t sums = 1;  // bit x: some grouping puts x vertices in A
      for (Mask c : detail::components(adj, mask & ~s)) sums |= sums << detail::popcount(c);
      for (int x = 0; x <= rest; ++x) {
        if ((sums >> x) & 1 && 3 * x <= 2 * k && 3 * (rest - x) <= 2 * k) {
          best = size;
          break;
        }
      }
    }
    if (s == 0) break;
  }
  return best;
}

int exact_separation_number(const Graph& g, int limit_n) {
  const int n = g.num_vertices();
  guard("exact_separation_number", n, limit_n, 16);
  const auto adj = detail::adjacency_masks(g);
  int best = 0;
  const Mask total = static_cast<Mask>((std::size_t{1} << n) - 1);
  for (Mask m = 1; m != 0 && m <= total; ++m) {
    best = std::max(best, min_separator_size(adj, m));
  }
  return best;
}

ExactBoundedness exact_boundedness(const Graph& g, const Rational& eps, int limit_n) {
  const int n = g.num_vertices();
  guard("exact_boundedness", n, limit_n, 20);
  if (eps <= 0) throw PreconditionError("exact_boundedness: eps must be positive");
  ExactBoundedness out;
  if (n == 0) return out;
  const auto unions = detail::neighbor_unions(detail::adjacency_masks(g));
  for (int size = n; size >= 1; --size) {
    Mask found = 0;
    detail::for_each_combination(n, size, [&](Mask vp) {
      if (!is_expander_mask(unions, vp, eps)) return false;
      found = vp;
      return true;
    });
    if (found != 0) {
      out.value = size;
      out.witness = detail::from_mask(found);
      return out;
    }
  }
  throw CertificateError("exact_boundedness: single vertices must be expanders");
}

}  // namespace bandsep
