#pragma once

#include "bandsep/graph.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <cstdint>

namespace bandsep {

/// Combinatorial Laplacian D - A as a sparse matrix.
Eigen::SparseMatrix<double> laplacian(const Graph& g);

struct FiedlerEstimate {
  Eigen::VectorXd vector;
  /// Rayleigh quotient x^T L x / x^T x of the returned vector.
  double eigenvalue = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// Power iteration on (c I - L) with the constant vector deflated, c an upper
/// bound on the spectrum (2 * max degree + 1). Starts from a seeded
/// pseudo-random vector; stops once successive normalized iterates differ by
/// less than `tolerance` in the 2-norm.
FiedlerEstimate approximate_fiedler_vector(const Graph& g, int max_iterations, double tolerance,
                                           std::uint64_t seed);

/// Vertices sorted by their entry in `x`, ties by vertex id.
std::vector<Vertex> sweep_order(const Eigen::VectorXd& x);

}  // namespace bandsep
