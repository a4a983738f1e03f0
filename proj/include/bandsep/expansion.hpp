#pragma once

#include "bandsep/graph.hpp"
#include "bandsep/rational.hpp"
#include "bandsep/tree_decomposition.hpp"

#include <optional>
#include <string_view>

namespace bandsep {

enum class WitnessKind { kExpanderSubgraph, kNonexpandingSet, kExhaustiveAbsence };

std::string_view witness_kind_name(WitnessKind k);

/// Evidence about expansion. For kNonexpandingSet, `set` is U with
/// |U| <= n/2 and |N(U)| <= eps|U|, `neighborhood` is N(U). For
/// kExpanderSubgraph, `set` induces an eps-expander. kExhaustiveAbsence means
/// every U was checked and none is non-expanding.
struct ExpansionWitness {
  WitnessKind kind = WitnessKind::kExhaustiveAbsence;
  VertexSet set;
  VertexSet neighborhood;
  Rational eps{0};
  /// |N(U)| / |U| for kNonexpandingSet; 0 otherwise.
  Rational ratio{0};
};

/// Exhaustive expansion test over every nonempty U with |U| <= n/2.
struct ExpanderCheck {
  bool is_expander = true;
  /// Most violating U (smallest |N(U)|/|U|, then smaller, then lexicographic)
  /// when not an expander.
  VertexSet violating_set;
};

inline constexpr int kExhaustiveExpansionLimit = 20;

/// Throws SizeGuardError above limit_n.
ExpanderCheck is_epsilon_expander(const Graph& g, const Rational& eps,
                                  int limit_n = kExhaustiveExpansionLimit);

enum class SearchMode { kExact, kSweep };

/// Exact mode: the largest W (then smallest |N(W)|, then lexicographically
/// first) with 1 <= |W| <= n/2 and |N(W)| <= eps|W|; if none exists the
/// witness has kind kExhaustiveAbsence. Sweep mode: first qualifying prefix
/// (ascending then descending) of the approximate Fiedler order; nullopt when
/// none qualifies, which proves nothing.
std::optional<ExpansionWitness> nonexpanding_set(const Graph& g, const Rational& eps, SearchMode mode,
                                                 int exact_limit = kExhaustiveExpansionLimit);

/// Finder for the separator construction: exact up to exact_limit vertices,
/// sweep above.
NonexpandingFinder make_nonexpanding_finder(const Rational& eps, int exact_limit = 16);

/// Exact-only finder; throws SizeGuardError above exact_limit.
NonexpandingFinder make_exact_nonexpanding_finder(const Rational& eps,
                                                  int exact_limit = kExhaustiveExpansionLimit);

struct BoundednessBounds {
  int lower = 0;
  /// Induced expander realizing `lower`.
  VertexSet lower_witness;
  int upper = 0;
  std::string upper_provenance;
};

/// Two-sided bounds on b_eps. Lower: largest induced eps-expander found by
/// growing from high-degree seeds, each candidate verified exhaustively.
/// Upper: the exact value when n <= exact_limit, 2 floor(bdw_upper / eps) + 1 when
/// given, n otherwise; the minimum is reported.
BoundednessBounds boundedness_bounds(const Graph& g, const Rational& eps,
                                     std::optional<int> bdw_upper = std::nullopt, int exact_limit = 14);

}  // namespace bandsep
