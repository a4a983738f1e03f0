#include "bandsep/separators.hpp"

#include "bandsep/error.hpp"
#include "bandsep/spectral.hpp"
#include "detail/masks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace bandsep {

std::string_view source_name(SeparatorSource s) {
  switch (s) {
    case SeparatorSource::kExact: return "exact";
    case SeparatorSource::kBfsLayer: return "bfs_layer";
    case SeparatorSource::kSpectral: return "spectral";
    case SeparatorSource::kFromExpansion: return "from_expansion";
    case SeparatorSource::kFromTreeDecomposition: return "from_td";
    case SeparatorSource::kCentroid: return "centroid";
  }
  return "unknown";
}

namespace {

bool fits(std::size_t size, int n, const Rational& alpha) {
  return Rational(static_cast<std::int64_t>(size)) <= alpha * n;
}

}  // namespace

Verdict validate_separator(const Graph& g, const Separator& sep) {
  const int n = g.num_vertices();
  if (sep.alpha < Rational(1, 2) || sep.alpha >= Rational(1)) return Verdict::fail("alpha outside [1/2, 1)");
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (const VertexSet* part : {&sep.s, &sep.a, &sep.b}) {
    for (Vertex v : *part) {
      if (v < 0 || v >= n) return Verdict::fail("(a) unknown vertex " + std::to_string(v));
      if (seen[static_cast<std::size_t>(v)]++ != 0) return Verdict::fail("(a) vertex " + std::to_string(v) + " in two parts");
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (seen[static_cast<std::size_t>(v)] == 0) return Verdict::fail("(a) vertex " + std::to_string(v) + " uncovered");
  }
  if (!fits(sep.a.size(), n, sep.alpha)) return Verdict::fail("(b) |A| > alpha n");
  if (!fits(sep.b.size(), n, sep.alpha)) return Verdict::fail("(b) |B| > alpha n");
  if (edges_between(g, sep.a, sep.b) != 0) return Verdict::fail("(c) edge between A and B");
  return Verdict::pass();
}

std::optional<std::vector<bool>> group_parts(std::span<const int> sizes, int n, const Rational& alpha) {
  const auto limit = floor(alpha * n);
  const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
  std::vector<std::size_t> idx(sizes.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return sizes[a] > sizes[b]; });

  std::vector<bool> to_a(sizes.size(), false);
  std::int64_t a = 0;
  std::int64_t b = 0;
  for (auto i : idx) {
    if (a <= b) {
      to_a[i] = true;
      a += sizes[i];
    } else {
      b += sizes[i];
    }
  }
  if (a <= limit && b <= limit) return to_a;

  // Subset sum; reach[i][x]: first i parts can put x vertices on side A.
  const std::size_t cols = static_cast<std::size_t>(total) + 1;
  std::vector<std::vector<char>> reach(sizes.size() + 1, std::vector<char>(cols, 0));
  reach[0][0] = 1;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    for (std::size_t x = 0; x < cols; ++x) {
      if (!reach[i][x]) continue;
      reach[i + 1][x] = 1;
      reach[i + 1][x + static_cast<std::size_t>(sizes[i])] = 1;
    }
  }
  std::optional<int> best;
  for (int x = 0; x <= total; ++x) {
    if (!reach[sizes.size()][static_cast<std::size_t>(x)] || x > limit || total - x > limit) continue;
    if (!best || std::max(x, total - x) < std::max(*best, total - *best)) best = x;
  }
  if (!best) return std::nullopt;
  std::fill(to_a.begin(), to_a.end(), false);
  auto x = static_cast<std::size_t>(*best);
  for (std::size_t i = sizes.size(); i > 0; --i) {
    if (reach[i - 1][x]) continue;
    to_a[i - 1] = true;
    x -= static_cast<std::size_t>(sizes[i - 1]);
  }
  return to_a;
}

std::optional<Separator> separator_from_cut(const Graph& g, VertexSet s, const Rational& alpha,
                                            SeparatorSource source) {
  const auto comps = components_without(g, s);
  std::vector<int> sizes;
  sizes.reserve(comps.size());
  for (const auto& c : comps) sizes.push_back(static_cast<int>(c.size()));
  const auto grouping = group_parts(sizes, g.num_vertices(), alpha);
  if (!grouping) return std::nullopt;
  Separator sep;
  sep.s = std::move(s);
  sep.alpha = alpha;
  sep.source = source;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    auto& side = (*grouping)[i] ? sep.a : sep.b;
    side.insert(side.end(), comps[i].begin(), comps[i].end());
  }
  std::sort(sep.a.begin(), sep.a.end());
  std::sort(sep.b.begin(), sep.b.end());
  return sep;
}

Separator find_separator_exact(const Graph& g, const Rational& alpha, int limit_n) {
  const int n = g.num_vertices();
  if (limit_n > 30) throw PreconditionError("find_separator_exact: limit above 30");
  if (n > limit_n) throw SizeGuardError("find_separator_exact", static_cast<std::size_t>(n), static_cast<std::size_t>(limit_n));
  for (int k = 0; k <= n; ++k) {
    std::optional<Separator> found;
    detail::for_each_combination(n, k, [&](detail::Mask m) {
      found = separator_from_cut(g, detail::from_mask(m), alpha, SeparatorSource::kExact);
      return found.has_value();
    });
    if (found) return *found;
  }
  throw CertificateError("find_separator_exact: S = V must always be valid");
}

std::optional<Separator> find_separator_bfs_layer(const Graph& g, const Rational& alpha) {
  if (!is_connected(g)) throw PreconditionError("find_separator_bfs_layer: graph is disconnected");
  const int n = g.num_vertices();
  if (n == 0) return std::nullopt;
  const Vertex root[] = {0};
  const auto dist = multi_source_distances(g, root);
  const int depth = *std::max_element(dist.begin(), dist.end());
  std::vector<VertexSet> layers(static_cast<std::size_t>(depth) + 1);
  for (Vertex v = 0; v < n; ++v) layers[static_cast<std::size_t>(dist[static_cast<std::size_t>(v)])].push_back(v);

  std::optional<Separator> best;
  for (int i = 1; i < depth; ++i) {
    auto cand = separator_from_cut(g, layers[static_cast<std::size_t>(i)], alpha, SeparatorSource::kBfsLayer);
    if (!cand) continue;
    const auto worse = [](const Separator& x, const Separator& y) {
      if (x.s.size() != y.s.size()) return x.s.size() > y.s.size();
      return std::max(x.a.size(), x.b.size()) > std::max(y.a.size(), y.b.size());
    };
    if (!best || worse(*best, *cand)) best = std::move(cand);
  }
  return best;
}

SpectralResult find_separator_spectral(const Graph& g, const Rational& alpha, const SpectralOptions& options) {
  const int n = g.num_vertices();
  if (n < 3) throw PreconditionError("find_separator_spectral: need n >= 3");
  if (!is_connected(g)) throw PreconditionError("find_separator_spectral: graph is disconnected");

  SpectralResult result;
  const auto est = approximate_fiedler_vector(g, options.iterations, options.tolerance, options.seed);
  result.converged = est.converged;
  result.iterations_used = est.iterations;
  if (!est.converged) {
    result.diagnostics = "power iteration did not converge within " + std::to_string(options.iterations) +
                         " iterations (tolerance " + std::to_string(options.tolerance) + ")";
    return result;
  }

  const auto order = sweep_order(est.vector);
  // cross[v]: neighbors of v on the other side of the sweep cut.
  std::vector<char> in_x(static_cast<std::size_t>(n), 0);
  std::vector<int> cross(static_cast<std::size_t>(n), 0);
  int boundary_x = 0;
  int boundary_y = 0;
  struct Best {
    int k;
    int s;
  };
  std::optional<Best> best;
  const auto limit = floor(alpha * n);
  for (int k = 1; k < n; ++k) {
    const Vertex u = order[static_cast<std::size_t>(k - 1)];
    if (cross[static_cast<std::size_t>(u)] > 0) --boundary_y;
    in_x[static_cast<std::size_t>(u)] = 1;
    int cu = 0;
    for (Vertex w : g.neighbors(u)) {
      auto& cw = cross[static_cast<std::size_t>(w)];
      if (in_x[static_cast<std::size_t>(w)]) {
        if (--cw == 0) --boundary_x;
      } else {
        if (cw++ == 0) ++boundary_y;
        ++cu;
      }
    }
    cross[static_cast<std::size_t>(u)] = cu;
    if (cu > 0) ++boundary_x;

    const bool x_smaller = k <= n - k;
    const int s = x_smaller ? boundary_x : boundary_y;
    const int a = (x_smaller ? k : n - k) - s;
    const int b = x_smaller ? n - k : k;
    if (a > limit || b > limit) continue;
    if (!best || s < best->s) best = Best{k, s};
  }
  if (!best) {
    result.diagnostics = "no sweep prefix gives a balanced cut";
    return result;
  }

  std::vector<char> side(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < best->k; ++i) side[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = 1;
  const bool x_smaller = best->k <= n - best->k;
  Separator sep;
  sep.alpha = alpha;
  sep.source = SeparatorSource::kSpectral;
  for (Vertex v = 0; v < n; ++v) {
    const bool in_small = (side[static_cast<std::size_t>(v)] == 1) == x_smaller;
    if (!in_small) {
      sep.b.push_back(v);
      continue;
    }
    const bool on_boundary = std::any_of(g.neighbors(v).begin(), g.neighbors(v).end(), [&](Vertex w) {
      return ((side[static_cast<std::size_t>(w)] == 1) == x_smaller) == false;
    });
    (on_boundary ? sep.s : sep.a).push_back(v);
  }
  if (auto verdict = validate_separator(g, sep); !verdict) {
    throw CertificateError("spectral separator invalid: " + verdict.reason);
  }
  result.separator = std::move(sep);
  return result;
}

std::optional<Separator> find_separator_centroid(const Graph& g, const Rational& alpha) {
  const auto comps = connected_components(g);
  if (g.num_edges() + comps.size() != static_cast<std::size_t>(g.num_vertices())) return std::nullopt;
  if (auto sep = separator_from_cut(g, {}, alpha, SeparatorSource::kCentroid)) return sep;

  const auto& comp = *std::max_element(comps.begin(), comps.end(),
                                       [](const VertexSet& x, const VertexSet& y) { return x.size() < y.size(); });
  const int size = static_cast<int>(comp.size());
  // Iterative DFS from the smallest vertex: parent and subtree sizes.
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<Vertex> parent(n, -1);
  std::vector<int> subtree(n, 1);
  std::vector<Vertex> preorder;
  std::vector<Vertex> stack{comp.front()};
  parent[static_cast<std::size_t>(comp.front())] = comp.front();
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    preorder.push_back(u);
    for (Vertex w : g.neighbors(u)) {
      if (parent[static_cast<std::size_t>(w)] == -1) {
        parent[static_cast<std::size_t>(w)] = u;
        stack.push_back(w);
      }
    }
  }
  for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
    if (*it != comp.front()) subtree[static_cast<std::size_t>(parent[static_cast<std::size_t>(*it)])] += subtree[static_cast<std::size_t>(*it)];
  }
  Vertex centroid = comp.front();
  int best = size;
  for (Vertex v : comp) {
    int heaviest = size - subtree[static_cast<std::size_t>(v)];
    for (Vertex w : g.neighbors(v)) {
      if (w != comp.front() && parent[static_cast<std::size_t>(w)] == v) {
        heaviest = std::max(heaviest, subtree[static_cast<std::size_t>(w)]);
      }
    }
    if (heaviest < best) {
      best = heaviest;
      centroid = v;
    }
  }
  return separator_from_cut(g, {centroid}, alpha, SeparatorSource::kCentroid);
}

Separator separator_from_nonexpanding(const Graph& g, const Rational& eps, const NonexpandingFinder& finder) {
  if (eps <= 0) throw PreconditionError("separator_from_nonexpanding: eps must be positive");
  const int n = g.num_vertices();
  Separator sep;
  sep.alpha = kTwoThirds;
  sep.source = SeparatorSource::kFromExpansion;
  if (n == 0) return sep;

  VertexSet current(static_cast<std::size_t>(n));
  std::iota(current.begin(), current.end(), 0);
  std::vector<Vertex> a;
  std::vector<Vertex> s;
  while (true) {
    const auto gi = induced_subgraph(g, current);
    const auto w = finder(gi.graph);
    if (!w) {
      throw ExpanderEncountered("no non-expanding set in an induced subgraph on " + std::to_string(current.size()) +
                                    " vertices",
                                current);
    }
    check_vertex_set(*w, gi.graph.num_vertices());
    const auto nb = outer_neighborhood(gi.graph, *w);
    if (w->empty() || 2 * w->size() > current.size() ||
        Rational(static_cast<std::int64_t>(nb.size())) > eps * static_cast<std::int64_t>(w->size())) {
      throw CertificateError("finder returned a set violating 1 <= |W| <= |V_i|/2, |N(W)| <= eps |W|");
    }
    const auto w_global = lift(*w, gi.to_parent);
    const auto nb_global = lift(nb, gi.to_parent);
    a.insert(a.end(), w_global.begin(), w_global.end());
    s.insert(s.end(), nb_global.begin(), nb_global.end());

    VertexSet removed;
    std::merge(w_global.begin(), w_global.end(), nb_global.begin(), nb_global.end(), std::back_inserter(removed));
    VertexSet next;
    std::set_difference(current.begin(), current.end(), removed.begin(), removed.end(), std::back_inserter(next));
    current = std::move(next);
    if (3 * static_cast<std::int64_t>(current.size()) < 2 * static_cast<std::int64_t>(n)) break;
  }
  sep.a = make_vertex_set(std::move(a));
  sep.s = make_vertex_set(std::move(s));
  sep.b = std::move(current);

  if (auto verdict = validate_separator(g, sep); !verdict) {
    throw CertificateError("separator_from_nonexpanding: " + verdict.reason);
  }
  const bool s_ok = Rational(3 * static_cast<std::int64_t>(sep.s.size())) <= Rational(2) * eps * n;
  const bool b_ok = 3 * sep.b.size() < 2 * static_cast<std::size_t>(n);
  if (!s_ok || !b_ok) throw CertificateError("separator_from_nonexpanding: size guarantee violated");
  return sep;
}

Separator separator_from_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  if (auto verdict = validate_tree_decomposition(g, td); !verdict) {
    throw PreconditionError("separator_from_tree_decomposition: invalid decomposition: " + verdict.reason);
  }
  const int n = g.num_vertices();
  if (n == 0) return Separator{{}, {}, {}, kTwoThirds, SeparatorSource::kFromTreeDecomposition};
  const auto limit = floor(kTwoThirds * n);

  std::optional<Separator> best;
  for (const auto& bag : td.bags) {
    auto sep = separator_from_cut(g, make_vertex_set(bag), kTwoThirds, SeparatorSource::kFromTreeDecomposition);
    if (!sep) continue;
    // 0 = S, 1 = A, 2 = B
    std::vector<int> side(static_cast<std::size_t>(n), 0);
    for (Vertex v : sep->a) side[static_cast<std::size_t>(v)] = 1;
    for (Vertex v : sep->b) side[static_cast<std::size_t>(v)] = 2;
    auto count_a = static_cast<std::int64_t>(sep->a.size());
    auto count_b = static_cast<std::int64_t>(sep->b.size());
    VertexSet kept;
    for (Vertex v : sep->s) {
      bool touches_a = false;
      bool touches_b = false;
      for (Vertex w : g.neighbors(v)) {
        touches_a |= side[static_cast<std::size_t>(w)] == 1;
        touches_b |= side[static_cast<std::size_t>(w)] == 2;
      }
      if (!touches_b && count_a + 1 <= limit) {
        side[static_cast<std::size_t>(v)] = 1;
        ++count_a;
      } else if (!touches_a && count_b + 1 <= limit) {
        side[static_cast<std::size_t>(v)] = 2;
        ++count_b;
      } else {
        kept.push_back(v);
      }
    }
    Separator pruned{kept, {}, {}, kTwoThirds, SeparatorSource::kFromTreeDecomposition};
    for (Vertex v = 0; v < n; ++v) {
      if (side[static_cast<std::size_t>(v)] == 1) pruned.a.push_back(v);
      if (side[static_cast<std::size_t>(v)] == 2) pruned.b.push_back(v);
    }
    if (!best || pruned.s.size() < best->s.size()) best = std::move(pruned);
  }
  if (!best) throw CertificateError("separator_from_tree_decomposition: no balanced bag found");
  if (auto verdict = validate_separator(g, *best); !verdict) {
    throw CertificateError("separator_from_tree_decomposition: " + verdict.reason);
  }
  return *best;
}

double separator_bound_genus(double n, double genus) {
  if (n < 1 || genus < 0) throw PreconditionError("separator_bound_genus: need n >= 1 and g >= 0");
  return 6.0 * std::sqrt(genus * n) + 2.0 * std::sqrt(2.0 * n);
}

double separator_bound_minor(double n, double h) {
  if (n < 1 || h < 1) throw PreconditionError("separator_bound_minor: need n >= 1 and h >= 1");
  return std::pow(h, 1.5) * std::sqrt(n);
}

namespace {

using LocalMethod = std::function<std::optional<Separator>(const Graph&, const Rational&)>;

SeparatorProvider wrap(std::string name, int s_max, SeparatorSource source, LocalMethod method) {
  SeparatorProvider p;
  p.name = std::move(name);
  p.s_max = s_max;
  p.find = [source, method = std::move(method)](const Graph& g, const Rational& alpha) -> std::optional<Separator> {
    if (auto sep = separator_from_cut(g, {}, alpha, source)) return sep;
    const auto comps = connected_components(g);
    if (comps.size() == 1) return method(g, alpha);
    const auto& largest = *std::max_element(comps.begin(), comps.end(),
                                            [](const VertexSet& x, const VertexSet& y) { return x.size() < y.size(); });
    const auto sub = induced_subgraph(g, largest);
    const auto local = method(sub.graph, alpha);
    if (!local) return std::nullopt;
    return separator_from_cut(g, lift(local->s, sub.to_parent), alpha, source);
  };
  return p;
}

}  // namespace

SeparatorProvider make_exact_provider(int limit_n) {
  return wrap("exact", 0, SeparatorSource::kExact,
              [limit_n](const Graph& g, const Rational& alpha) -> std::optional<Separator> {
                if (g.num_vertices() > limit_n) return std::nullopt;
                return find_separator_exact(g, alpha, limit_n);
              });
}

SeparatorProvider make_bfs_provider() {
  return wrap("bfs", 0, SeparatorSource::kBfsLayer,
              [](const Graph& g, const Rational& alpha) { return find_separator_bfs_layer(g, alpha); });
}

SeparatorProvider make_spectral_provider(const SpectralOptions& options) {
  return wrap("spectral", 0, SeparatorSource::kSpectral,
              [options](const Graph& g, const Rational& alpha) -> std::optional<Separator> {
                if (g.num_vertices() < 3) return find_separator_exact(g, alpha, 3);
                return find_separator_spectral(g, alpha, options).separator;
              });
}

SeparatorProvider make_centroid_provider() {
  return wrap("centroid", 1, SeparatorSource::kCentroid,
              [](const Graph& g, const Rational& alpha) { return find_separator_centroid(g, alpha); });
}

std::optional<SeparatorProvider> provider_from_name(std::string_view name) {
  if (name == "exact") return make_exact_provider();
  if (name == "bfs") return make_bfs_provider();
  if (name == "spectral") return make_spectral_provider();
  if (name == "centroid") return make_centroid_provider();
  return std::nullopt;
}

}  // namespace bandsep
