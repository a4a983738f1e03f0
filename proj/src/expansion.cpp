#include "bandsep/expansion.hpp"

#include "bandsep/bounds.hpp"
#include "bandsep/error.hpp"
#include "bandsep/oracles.hpp"
#include "bandsep/spectral.hpp"
#include "detail/masks.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace bandsep {

using detail::Mask;

std::string_view witness_kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::kExpanderSubgraph: return "expander_subgraph";
    case WitnessKind::kNonexpandingSet: return "nonexpanding_set";
    case WitnessKind::kExhaustiveAbsence: return "exhaustive_absence";
  }
  return "unknown";
}

namespace {

void expansion_guard(const char* what, int n, int limit_n) {
  if (limit_n > 24) throw PreconditionError(std::string(what) + ": limit above 24");
  if (n > limit_n) throw SizeGuardError(what, static_cast<std::size_t>(n), static_cast<std::size_t>(limit_n));
}

bool qualifies(int nb, int size, const Rational& eps) {
  return Rational(nb) <= eps * size;
}

ExpansionWitness nonexpanding_witness(VertexSet set, VertexSet nb, const Rational& eps) {
  ExpansionWitness w;
  w.kind = WitnessKind::kNonexpandingSet;
  w.eps = eps;
  w.ratio = Rational(static_cast<std::int64_t>(nb.size()), static_cast<std::int64_t>(set.size()));
  w.set = std::move(set);
  w.neighborhood = std::move(nb);
  return w;
}

std::optional<VertexSet> sweep_prefix(const Graph& g, const std::vector<Vertex>& order, const Rational& eps) {
  const int n = g.num_vertices();
  std::vector<char> inside(static_cast<std::size_t>(n), 0);
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  int nb = 0;
  for (int k = 1; 2 * k <= n; ++k) {
    const Vertex u = order[static_cast<std::size_t>(k - 1)];
    if (hits[static_cast<std::size_t>(u)] > 0) --nb;
    inside[static_cast<std::size_t>(u)] = 1;
    for (Vertex w : g.neighbors(u)) {
      if (hits[static_cast<std::size_t>(w)]++ == 0 && !inside[static_cast<std::size_t>(w)]) ++nb;
    }
    if (qualifies(nb, k, eps)) {
      return make_vertex_set(VertexSet(order.begin(), order.begin() + k));
    }
  }
  return std::nullopt;
}

}  // namespace

ExpanderCheck is_epsilon_expander(const Graph& g, const Rational& eps, int limit_n) {
  const int n = g.num_vertices();
  expansion_guard("is_epsilon_expander", n, limit_n);
  ExpanderCheck out;
  if (n < 2) return out;
  const auto unions = detail::neighbor_unions(detail::adjacency_masks(g));
  std::optional<Mask> worst;
  Rational worst_ratio;
  const Mask total = static_cast<Mask>((std::size_t{1} << n) - 1);
  for (Mask u = 1; u <= total && u != 0; ++u) {
    const int k = detail::popcount(u);
    if (2 * k > n) continue;
    const int nb = detail::popcount(unions[u] & ~u);
    if (Rational(nb) >= eps * k) continue;
    const Rational ratio(nb, k);
    bool better = !worst || ratio < worst_ratio;
    if (worst && ratio == worst_ratio) {
      const int wk = detail::popcount(*worst);
      better = k < wk || (k == wk && detail::from_mask(u) < detail::from_mask(*worst));
    }
    if (better) {
      worst = u;
      worst_ratio = ratio;
    }
  }
  if (worst) {
    out.is_expander = false;
    out.violating_set = detail::from_mask(*worst);
  }
  return out;
}

std::optional<ExpansionWitness> nonexpanding_set(const Graph& g, const Rational& eps, SearchMode mode,
                                                 int exact_limit) {
  if (eps <= 0) throw PreconditionError("nonexpanding_set: eps must be positive");
  const int n = g.num_vertices();
  if (mode == SearchMode::kExact) {
    expansion_guard("nonexpanding_set", n, exact_limit);
    ExpansionWitness absence;
    absence.kind = WitnessKind::kExhaustiveAbsence;
    absence.eps = eps;
    if (n < 2) return absence;
    const auto adj = detail::adjacency_masks(g);
    const Mask all = static_cast<Mask>((std::size_t{1} << n) - 1);
    for (int k = n / 2; k >= 1; --k) {
      std::optional<Mask> best;
      int best_nb = 0;
      detail::for_each_combination(n, k, [&](Mask u) {
        Mask reach = 0;
        for (Mask f = u; f != 0; f &= f - 1) reach |= adj[static_cast<std::size_t>(std::countr_zero(f))];
        const int nb = detail::popcount(reach & all & ~u);
        if (qualifies(nb, k, eps) && (!best || nb < best_nb)) {
          best = u;
          best_nb = nb;
        }
        return best && best_nb == 0;
      });
      if (best) {
        const auto set = detail::from_mask(*best);
        return nonexpanding_witness(set, outer_neighborhood(g, set), eps);
      }
    }
    return absence;
  }

  if (n < 2) return std::nullopt;
  const auto est = approximate_fiedler_vector(g, 2000, 1e-9, 0x5eed);
  auto order = sweep_order(est.vector);
  auto found = sweep_prefix(g, order, eps);
  if (!found) {
    std::reverse(order.begin(), order.end());
    found = sweep_prefix(g, order, eps);
  }
  if (!found) return std::nullopt;
  auto nb = outer_neighborhood(g, *found);
  return nonexpanding_witness(std::move(*found), std::move(nb), eps);
}

namespace {

// Union of whole components with total size <= n/2 (largest first); such a
// set has no outside neighbors.
std::optional<VertexSet> component_union(const Graph& g) {
  auto comps = connected_components(g);
  if (comps.size() < 2) return std::nullopt;
  std::stable_sort(comps.begin(), comps.end(),
                   [](const VertexSet& x, const VertexSet& y) { return x.size() > y.size(); });
  VertexSet out;
  for (const auto& c : comps) {
    if (2 * (out.size() + c.size()) <= static_cast<std::size_t>(g.num_vertices())) out.insert(out.end(), c.begin(), c.end());
  }
  if (out.empty()) return std::nullopt;
  return make_vertex_set(std::move(out));
}

}  // namespace

NonexpandingFinder make_nonexpanding_finder(const Rational& eps, int exact_limit) {
  return [eps, exact_limit](const Graph& g) -> std::optional<VertexSet> {
    if (auto w = component_union(g)) return w;
    const auto mode = g.num_vertices() <= exact_limit ? SearchMode::kExact : SearchMode::kSweep;
    const auto w = nonexpanding_set(g, eps, mode, exact_limit);
    if (!w || w->kind != WitnessKind::kNonexpandingSet) return std::nullopt;
    return w->set;
  };
}

NonexpandingFinder make_exact_nonexpanding_finder(const Rational& eps, int exact_limit) {
  return [eps, exact_limit](const Graph& g) -> std::optional<VertexSet> {
    const auto w = nonexpanding_set(g, eps, SearchMode::kExact, exact_limit);
    if (!w || w->kind != WitnessKind::kNonexpandingSet) return std::nullopt;
    return w->set;
  };
}

BoundednessBounds boundedness_bounds(const Graph& g, const Rational& eps, std::optional<int> bdw_upper,
                                     int exact_limit) {
  if (eps <= 0) throw PreconditionError("boundedness_bounds: eps must be positive");
  const int n = g.num_vertices();
  BoundednessBounds out;
  out.upper = n;
  out.upper_provenance = "n";
  if (n == 0) return out;

  if (n <= exact_limit) {
    auto exact = exact_boundedness(g, eps, exact_limit);
    out.lower = exact.value;
    out.lower_witness = std::move(exact.witness);
    out.upper = exact.value;
    out.upper_provenance = "exact";
  } else {
    constexpr int kSeeds = 8;
    constexpr int kVerifyLimit = 16;
    out.lower = 1;
    out.lower_witness = {0};
    std::vector<Vertex> seeds(static_cast<std::size_t>(n));
    std::iota(seeds.begin(), seeds.end(), 0);
    std::stable_sort(seeds.begin(), seeds.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    seeds.resize(std::min<std::size_t>(seeds.size(), kSeeds));
    for (Vertex seed : seeds) {
      std::vector<int> links(static_cast<std::size_t>(n), 0);
      std::vector<char> inside(static_cast<std::size_t>(n), 0);
      VertexSet grown;
      Vertex next = seed;
      while (next >= 0 && static_cast<int>(grown.size()) < kVerifyLimit) {
        grown.push_back(next);
        inside[static_cast<std::size_t>(next)] = 1;
        for (Vertex w : g.neighbors(next)) ++links[static_cast<std::size_t>(w)];
        const auto candidate = make_vertex_set(grown);
        if (static_cast<int>(candidate.size()) > out.lower) {
          const auto sub = induced_subgraph(g, candidate);
          if (is_epsilon_expander(sub.graph, eps, kVerifyLimit).is_expander) {
            out.lower = static_cast<int>(candidate.size());
            out.lower_witness = candidate;
          }
        }
        next = -1;
        for (Vertex v = 0; v < n; ++v) {
          if (inside[static_cast<std::size_t>(v)] || links[static_cast<std::size_t>(v)] == 0) continue;
          if (next < 0 || links[static_cast<std::size_t>(v)] > links[static_cast<std::size_t>(next)]) next = v;
        }
      }
    }
  }

  if (bdw_upper) {
    const auto from_bdw = boundedness_bound_any_parity(*bdw_upper, eps);
    if (from_bdw < out.upper) {
      out.upper = static_cast<int>(from_bdw);
      out.upper_provenance = "2*floor(bdw/eps)+1";
    }
  }
  if (out.lower > out.upper) throw CertificateError("boundedness_bounds: lower exceeds upper");
  return out;
}

}  // namespace bandsep
