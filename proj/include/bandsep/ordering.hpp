#pragma once

#include "bandsep/error.hpp"
#include "bandsep/graph.hpp"
#include "bandsep/rational.hpp"
#include "bandsep/separators.hpp"

#include <optional>
#include <vector>

namespace bandsep {

/// V = S + P + R with P = P_1 + ... + P_b and R = R_1 + ... + R_b, b >= 3.
/// Conditions: (i) |R_i| <= r; (ii) no edge between R_i + P_i and R_j + P_j
/// for i != j; (iii) dist(u, v) >= floor(b/2) for u in S, v in R_i.
struct SPRPartition {
  VertexSet s;
  std::vector<VertexSet> p;
  std::vector<VertexSet> r;
  int r_bound = 0;

  int buckets() const { return static_cast<int>(p.size()); }
};

/// Names the first failed condition: "cover", "(i)", "(ii)" or "(iii)".
Verdict validate_spr_partition(const Graph& g, const SPRPartition& part);

/// Bucket (1-based) of a P_i vertex at distance dist from S, for b buckets:
///   i                     if dist >= |ceil(b/2) - i|
///   ceil(b/2) - dist      if dist <  ceil(b/2) - i
///   ceil(b/2) + dist      if dist <  i - ceil(b/2)
/// dist == kUnreachable counts as infinite.
int bucket_index(int part, int dist, int b);

struct BucketAssignment {
  /// 1-based bucket per vertex.
  std::vector<int> bucket;
  std::vector<int> sizes;
};

/// Adjacent vertices at most one bucket apart, every bucket <= limit.
Verdict validate_bucket_assignment(const Graph& g, const BucketAssignment& buckets, int size_limit);

/// Binary recursion tree of the separator rounds. Internal nodes carry |S|,
/// leaves carry the part size.
struct SeparationTree {
  struct Node {
    int size = 0;
    /// -1 for leaves.
    int left = -1;
    int right = -1;
    bool is_leaf() const { return left < 0; }
  };

  int n = 0;
  std::vector<Node> nodes;
  int root = 0;

  int leaf_count() const;
  int internal_count() const;
};

/// Checks sum of labels <= 1, leaves <= b, internal = leaves - 1, and for
/// each internal node w: l(w) + sum_{u in L(w)} l(u) >= |L(w)| / b with
/// L(w) the leaf children of w. Labels are size / n.
Verdict validate_separation_tree(const SeparationTree& tree, int b);

struct OrderingCertificate {
  Labelling labelling;
  int measured_bandwidth = 0;
  /// True when no decomposition was used (trivial case); the partition and
  /// guarantees below are then unset.
  bool fallback = false;
  std::optional<SPRPartition> partition;
  std::optional<BucketAssignment> buckets;
  /// 2(|S| + |P| + r); measured_bandwidth is strictly below it.
  int guaranteed_bound = 0;
  /// 6n/beta when produced by the recursive driver.
  std::optional<double> formula_bound;
  std::optional<double> beta;
  int separator_budget = 0;
  std::optional<SeparationTree> tree;
  /// Separators used by the recursive driver, in original vertex ids.
  std::vector<Separator> separators;
};

/// Places R_i in bucket i, S in bucket ceil(b/2), each P_i vertex in
/// bucket_index(i, dist(v, S), b), concatenates buckets (vertex id order
/// inside a bucket). Throws PreconditionError naming the violated condition
/// when the partition is invalid; throws CertificateError if the bucket
/// invariants or the bound fail.
OrderingCertificate decomposition_ordering(const Graph& g, const SPRPartition& part);

/// beta = log_D n - log_D s_cap, b = floor(beta), D = max degree. Identity
/// ordering with fallback set when D == 2 or beta <= 6 (with a 1e-9 guard
/// band). Otherwise splits parts larger than 2n/b with the provider until all
/// fit, builds S/P/R with r = floor(2n/b) and delegates to
/// decomposition_ordering. Every separator is validated at alpha = 2/3 and
/// checked against s_cap; the separation tree is validated; the result is
/// checked against 6n/beta. Throws PreconditionError when max degree < 2 or
/// s_cap < 1, ProviderError when the provider fails or exceeds s_cap.
OrderingCertificate recursive_band_ordering(const Graph& g, const SeparatorProvider& provider, int s_cap);

/// Runs recursive_band_ordering starting from s_cap = max(1, provider.s_max),
/// raising s_cap to the largest separator actually returned until stable.
OrderingCertificate recursive_band_ordering_adaptive(const Graph& g, const SeparatorProvider& provider);

/// Level-structure ordering (reverse Cuthill-McKee from a pseudo-peripheral
/// vertex per component). Comparison baseline only.
Labelling cuthill_mckee_baseline(const Graph& g);

/// 6n / log_D(n/s). +inf when n/s <= 1. Throws PreconditionError if D < 2.
double bandwidth_bound_formula(double n, double max_degree, double s);
/// 15n / log_D(n).
double bandwidth_bound_planar(double n, double max_degree);
/// 15n / log_D(n/g).
double bandwidth_bound_genus(double n, double max_degree, double genus);
/// 12n / log_D(n/h^3).
double bandwidth_bound_minor(double n, double max_degree, double h);

}  // namespace bandsep
