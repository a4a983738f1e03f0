#pragma once

#include "bandsep/graph.hpp"
#include "bandsep/io.hpp"
#include "bandsep/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bandsep {

/// ceil(2 bdw / eps). Throws PreconditionError for eps <= 0. Only holds when
/// the largest expander has even order; P_3 with eps = 1 already exceeds it.
std::int64_t boundedness_from_bandwidth(std::int64_t bdw, const Rational& eps);

/// 2 floor(bdw / eps) + 1, valid for every graph: the first floor(b/2)
/// vertices of a b-vertex expander force a stretch of eps floor(b/2).
std::int64_t boundedness_bound_any_parity(std::int64_t bdw, const Rational& eps);

/// trw + 1. Throws PreconditionError for trw < 0.
std::int64_t separation_from_treewidth(std::int64_t trw);

enum class Implication { kTwToSep, kSepToBw, kBwToBdd, kBddToTw };

std::optional<Implication> implication_from_name(std::string_view name);

struct Budget {
  /// Parameter demanded from the premise.
  double source_beta = 0.0;
  /// Set for bdd->tw, which also fixes eps.
  std::optional<double> eps;
  std::string threshold_rule;
};

/// Constant bookkeeping of the sublinear equivalence:
///   tw->sep:  beta_1 = beta_4 / 2,             n >= max{n_1, 2/beta_4}
///   sep->bw:  beta_4 = d^(-6/beta_2), d = max{2, D}, n >= n_4
///   bw->bdd:  beta_2 = eps beta_3 / 2,         n >= n_2
///   bdd->tw:  beta_3 = beta_1 / 4, eps = beta_1 / 4, n >= n_3
/// Throws PreconditionError for target_beta <= 0 or a missing D / eps.
Budget equivalence_budgets(Implication direction, double target_beta, std::optional<int> max_degree = std::nullopt,
                           std::optional<double> eps = std::nullopt);

/// ceil(((r-1)/r + gamma) n). Requires r >= 2 and 0 < gamma < 1/r.
std::int64_t universality_min_degree(int r, const Rational& gamma, std::int64_t n);

struct ReportConfig {
  bool full_exact = false;
  int bandwidth_limit = 12;
  int treewidth_limit = 12;
  int separation_limit = 10;
  int boundedness_limit = 14;
  int separator_limit = 16;
  std::vector<Rational> eps_values{Rational{1, 2}, Rational{1}};
  /// Epsilon for the separator-recursion decomposition.
  Rational td_eps{1, 10};
  std::optional<double> genus;
  std::optional<double> minor_order;
};

/// Runs exact oracles within the guards (guards are raised by full_exact to
/// the oracle defaults only; they never exceed them) and certified heuristics
/// otherwise, then evaluates every applicable inequality. A failing component
/// yields not-evaluated entries instead of aborting.
ReportDocument build_report(const Graph& g, const ReportConfig& config = {});

struct SelftestConfig {
  int n_min = 5;
  int n_max = 8;
  int samples = 200;
  int max_degree = 4;
  std::uint64_t seed = 1;
};

struct SelftestResult {
  int graphs = 0;
  /// (name, checks, violations)
  struct Line {
    std::string name;
    int checks = 0;
    int violations = 0;
  };
  std::vector<Line> lines;

  bool ok() const;
};

/// Exact-oracle inequality sweep over seeded random connected graphs:
/// s <= trw + 1, trw <= bdw, b_eps <= ceil(2 bdw / eps) and
/// b_eps <= 2 floor(bdw / eps) + 1 for eps in {1/2, 1},
/// trw <= 2 b_eps + 2 eps n for eps in {1/4, 1/2}.
SelftestResult run_inequality_selftest(const SelftestConfig& config);

}  // namespace bandsep
