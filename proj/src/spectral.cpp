#include "bandsep/spectral.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace bandsep {

Eigen::SparseMatrix<double> laplacian(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(n) + 2 * g.num_edges());
  for (Vertex v = 0; v < n; ++v) {
    triplets.emplace_back(v, v, static_cast<double>(g.degree(v)));
    for (Vertex w : g.neighbors(v)) triplets.emplace_back(v, w, -1.0);
  }
  Eigen::SparseMatrix<double> lap(n, n);
  lap.setFromTriplets(triplets.begin(), triplets.end());
  return lap;
}

FiedlerEstimate approximate_fiedler_vector(const Graph& g, int max_iterations, double tolerance,
                                           std::uint64_t seed) {
  const int n = g.num_vertices();
  FiedlerEstimate est;
  est.vector = Eigen::VectorXd::Zero(n);
  if (n < 2) {
    est.converged = true;
    return est;
  }

  const auto lap = laplacian(g);
  const double shift = 2.0 * g.max_degree() + 1.0;

  std::mt19937_64 rng(seed);
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x[i] = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;

  auto project = [&](Eigen::VectorXd& v) {
    v.array() -= v.mean();
    const double norm = v.norm();
    if (norm > 0) v /= norm;
  };
  project(x);

  Eigen::VectorXd next(n);
  for (int it = 1; it <= max_iterations; ++it) {
    next.noalias() = shift * x - lap * x;
    project(next);
    const double delta = (next - x).norm();
    x.swap(next);
    est.iterations = it;
    if (delta < tolerance) {
      est.converged = true;
      break;
    }
  }
  est.vector = x;
  est.eigenvalue = x.dot(lap * x);
  return est;
}

std::vector<Vertex> sweep_order(const Eigen::VectorXd& x) {
  std::vector<Vertex> order(static_cast<std::size_t>(x.size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return x[a] < x[b]; });
  return order;
}

}  // namespace bandsep
