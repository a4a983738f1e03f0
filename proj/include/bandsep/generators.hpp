#pragma once

#include "bandsep/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace bandsep {

enum class Family {
  kPath,
  kCycle,
  kComplete,
  kStar,
  kGrid,
  kCompleteBinaryTree,
  kRandomBoundedDegree,
  kRandomBipartiteBoundedDegree,
  kRandomNearPlanar,
};

std::optional<Family> family_from_name(std::string_view name);
std::string_view family_name(Family f);

/// Parameters used by the families:
///   path/cycle/complete: n
///   star: k leaves (K_{1,k})
///   grid, random_near_planar: k (k x k)
///   complete_binary_tree: depth (n = 2^(depth+1) - 1)
///   random_bounded_degree: n, degree
///   random_bipartite_bounded_degree: n (even), degree
struct GeneratorParams {
  int n = 0;
  int k = 0;
  int depth = 0;
  int degree = 0;
};

/// Deterministic for a fixed seed. Throws PreconditionError on infeasible
/// parameters (e.g. n * degree odd for random_bounded_degree).
Graph generate(Family family, const GeneratorParams& params, std::uint64_t seed = 0);

/// Random connected graph with max degree <= max_degree: a random tree with
/// the degree cap plus up to `extra_edges` random chords.
Graph random_connected_bounded_degree(int n, int max_degree, int extra_edges, std::uint64_t seed);

}  // namespace bandsep
