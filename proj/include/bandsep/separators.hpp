#pragma once

#include "bandsep/error.hpp"
#include "bandsep/graph.hpp"
#include "bandsep/rational.hpp"
#include "bandsep/tree_decomposition.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace bandsep {

enum class SeparatorSource { kExact, kBfsLayer, kSpectral, kFromExpansion, kFromTreeDecomposition, kCentroid };

std::string_view source_name(SeparatorSource s);

/// V = A + B + S (disjoint), |A|, |B| <= alpha |V|, no A-B edge.
struct Separator {
  VertexSet s;
  VertexSet a;
  VertexSet b;
  Rational alpha{2, 3};
  SeparatorSource source = SeparatorSource::kExact;
};

/// Default balance used wherever the separation number is meant.
inline const Rational kTwoThirds{2, 3};

Verdict validate_separator(const Graph& g, const Separator& sep);

/// Splits `parts` (given as sizes) into two groups each of total <= alpha*n.
/// Greedy by decreasing size into the currently smaller side first; falls
/// back to an exact subset-sum when greedy fails. Returns for each part
/// whether it goes to side A, or nullopt when no grouping exists.
std::optional<std::vector<bool>> group_parts(std::span<const int> sizes, int n, const Rational& alpha);

/// Given S, groups the components of g - S into A and B. nullopt when no
/// balanced grouping exists.
std::optional<Separator> separator_from_cut(const Graph& g, VertexSet s, const Rational& alpha,
                                            SeparatorSource source);

/// Minimum |S| separator; ties broken by lexicographically smallest S.
Separator find_separator_exact(const Graph& g, const Rational& alpha = kTwoThirds, int limit_n = 16);

/// Smallest BFS layer (from vertex 0) whose removal leaves a non-empty inner
/// and outer side that group into a valid separator. Requires g connected.
std::optional<Separator> find_separator_bfs_layer(const Graph& g, const Rational& alpha = kTwoThirds);

struct SpectralOptions {
  int iterations = 5000;
  double tolerance = 1e-8;
  std::uint64_t seed = 0x5eed;
};

/// Result of the spectral finder; `separator` is empty on failure and
/// `diagnostics` says why.
struct SpectralResult {
  std::optional<Separator> separator;
  bool converged = false;
  int iterations_used = 0;
  std::string diagnostics;
};

/// Sweep cut over an approximate Fiedler vector. Requires g connected, n >= 3.
SpectralResult find_separator_spectral(const Graph& g, const Rational& alpha = kTwoThirds,
                                       const SpectralOptions& options = {});

/// Centroid of the largest component of a forest. Returns nullopt when g has
/// a cycle.
std::optional<Separator> find_separator_centroid(const Graph& g, const Rational& alpha = kTwoThirds);

/// Rounds of: find W in G[V_i] with |N(W)| <= eps|W|, move W to A and N(W) to
/// S, continue while |V_{i+1}| >= 2n/3. Returns A = union W_i,
/// B = V_{i*+1}, S = union N(W_i). Throws ExpanderEncountered (vertex ids of
/// the offending V_i) when the finder fails, and CertificateError if the
/// result breaks |S| <= 2 eps n / 3, |A| <= 2n/3, |B| < 2n/3 or e(A,B) = 0.
Separator separator_from_nonexpanding(const Graph& g, const Rational& eps, const NonexpandingFinder& finder);

/// Separator S contained in one bag of a valid decomposition, so
/// |S| <= width + 1, alpha = 2/3. Bag vertices without a neighbor on one side
/// are moved to that side while balance allows.
Separator separator_from_tree_decomposition(const Graph& g, const TreeDecomposition& td);

/// 6 sqrt(g n) + 2 sqrt(2 n).
double separator_bound_genus(double n, double genus);

/// h^{3/2} sqrt(n).
double separator_bound_minor(double n, double h);

/// Strategy producing (<= s_max, alpha)-separators for induced subgraphs.
struct SeparatorProvider {
  std::string name;
  /// Declared budget; 0 means "unknown".
  int s_max = 0;
  std::function<std::optional<Separator>(const Graph&, const Rational&)> find;
};

/// Each provider first tries S = {} by grouping components, then runs its
/// method on the largest component and regroups all of g - S.
SeparatorProvider make_exact_provider(int limit_n = 16);
SeparatorProvider make_bfs_provider();
SeparatorProvider make_spectral_provider(const SpectralOptions& options = {});
SeparatorProvider make_centroid_provider();

/// Looks up "exact", "bfs", "spectral" or "centroid".
std::optional<SeparatorProvider> provider_from_name(std::string_view name);

}  // namespace bandsep
