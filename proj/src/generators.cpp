#include "bandsep/generators.hpp"

#include "bandsep/error.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <string>

namespace bandsep {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 9> kFamilyNames{{
    {Family::kPath, "path"},
    {Family::kCycle, "cycle"},
    {Family::kComplete, "complete"},
    {Family::kStar, "star"},
    {Family::kGrid, "grid"},
    {Family::kCompleteBinaryTree, "complete_binary_tree"},
    {Family::kRandomBoundedDegree, "random_bounded_degree"},
    {Family::kRandomBipartiteBoundedDegree, "random_bipartite_bounded_degree"},
    {Family::kRandomNearPlanar, "random_near_planar"},
}};

// rng() % bound keeps the stream identical across standard libraries, unlike
// the <random> distributions.
std::size_t draw(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw(rng, i)]);
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw PreconditionError(msg);
}

// Adds {u, v} unless it is a loop, duplicate, or would exceed the degree cap.
class EdgeBuilder {
 public:
  EdgeBuilder(int n, int cap) : degree_(static_cast<std::size_t>(n), 0), cap_(cap) {}

  bool add(int u, int v) {
    if (u == v) return false;
    if (degree_[static_cast<std::size_t>(u)] >= cap_ || degree_[static_cast<std::size_t>(v)] >= cap_) return false;
    if (!seen_.insert({std::min(u, v), std::max(u, v)}).second) return false;
    ++degree_[static_cast<std::size_t>(u)];
    ++degree_[static_cast<std::size_t>(v)];
    edges_.emplace_back(u, v);
    return true;
  }

  int degree(int v) const { return degree_[static_cast<std::size_t>(v)]; }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  std::vector<int> degree_;
  int cap_;
  std::set<std::pair<int, int>> seen_;
  std::vector<Edge> edges_;
};

Graph grid(int k, std::vector<Edge> extra = {}) {
  std::vector<Edge> edges = std::move(extra);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) {
      const int v = r * k + c;
      if (c + 1 < k) edges.emplace_back(v, v + 1);
      if (r + 1 < k) edges.emplace_back(v, v + k);
    }
  }
  return Graph(k * k, edges);
}

}  // namespace

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& [f, s] : kFamilyNames) {
    if (s == name) return f;
  }
  return std::nullopt;
}

std::string_view family_name(Family f) {
  for (const auto& [g, s] : kFamilyNames) {
    if (g == f) return s;
  }
  return "unknown";
}

Graph generate(Family family, const GeneratorParams& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  switch (family) {
    case Family::kPath:
      require(p.n >= 1, "path needs n >= 1");
      for (int i = 0; i + 1 < p.n; ++i) edges.emplace_back(i, i + 1);
      return Graph(p.n, edges);
    case Family::kCycle:
      require(p.n >= 3, "cycle needs n >= 3");
      for (int i = 0; i < p.n; ++i) edges.emplace_back(i, (i + 1) % p.n);
      return Graph(p.n, edges);
    case Family::kComplete:
      require(p.n >= 1, "complete graph needs n >= 1");
      for (int i = 0; i < p.n; ++i) {
        for (int j = i + 1; j < p.n; ++j) edges.emplace_back(i, j);
      }
      return Graph(p.n, edges);
    case Family::kStar:
      require(p.k >= 1, "star needs k >= 1 leaves");
      for (int i = 1; i <= p.k; ++i) edges.emplace_back(0, i);
      return Graph(p.k + 1, edges);
    case Family::kGrid:
      require(p.k >= 1, "grid needs k >= 1");
      return grid(p.k);
    case Family::kCompleteBinaryTree: {
      require(p.depth >= 0 && p.depth <= 24, "complete binary tree needs 0 <= depth <= 24");
      const int n = (1 << (p.depth + 1)) - 1;
      for (int i = 1; i < n; ++i) edges.emplace_back((i - 1) / 2, i);
      return Graph(n, edges);
    }
    case Family::kRandomBoundedDegree: {
      require(p.n >= 1 && p.degree >= 1, "random_bounded_degree needs n >= 1 and degree >= 1");
      require(p.degree < p.n, "degree must be below n");
      require((static_cast<long long>(p.n) * p.degree) % 2 == 0, "n * degree must be even");
      std::vector<int> stubs;
      for (int v = 0; v < p.n; ++v) stubs.insert(stubs.end(), static_cast<std::size_t>(p.degree), v);
      shuffle(stubs, rng);
      EdgeBuilder builder(p.n, p.degree);
      for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) builder.add(stubs[i], stubs[i + 1]);
      // Pairings lost to loops/duplicates: retry among deficient vertices.
      for (int attempt = 0; attempt < 4 * p.n; ++attempt) {
        std::vector<int> open;
        for (int v = 0; v < p.n; ++v) {
          if (builder.degree(v) < p.degree) open.push_back(v);
        }
        if (open.size() < 2) break;
        builder.add(open[draw(rng, open.size())], open[draw(rng, open.size())]);
      }
      return Graph(p.n, builder.edges());
    }
    case Family::kRandomBipartiteBoundedDegree: {
      require(p.n >= 2 && p.n % 2 == 0, "random_bipartite_bounded_degree needs even n >= 2");
      require(p.degree >= 1 && p.degree <= p.n / 2, "degree must be in [1, n/2]");
      const int half = p.n / 2;
      std::vector<int> left;
      std::vector<int> right;
      for (int v = 0; v < half; ++v) {
        left.insert(left.end(), static_cast<std::size_t>(p.degree), v);
        right.insert(right.end(), static_cast<std::size_t>(p.degree), half + v);
      }
      shuffle(right, rng);
      EdgeBuilder builder(p.n, p.degree);
      for (std::size_t i = 0; i < left.size(); ++i) builder.add(left[i], right[i]);
      return Graph(p.n, builder.edges());
    }
    case Family::kRandomNearPlanar: {
      require(p.k >= 1, "random_near_planar needs k >= 1");
      const int k = p.k;
      for (int r = 0; r + 1 < k; ++r) {
        for (int c = 0; c + 1 < k; ++c) {
          if (rng() % 2 == 0) continue;
          const int v = r * k + c;
          if (rng() % 2 == 0) {
            edges.emplace_back(v, v + k + 1);
          } else {
            edges.emplace_back(v + 1, v + k);
          }
        }
      }
      return grid(k, std::move(edges));
    }
  }
  throw PreconditionError("unknown family");
}

Graph random_connected_bounded_degree(int n, int max_degree, int extra_edges, std::uint64_t seed) {
  require(n >= 1, "need n >= 1");
  require(n <= 2 || max_degree >= 2, "connected graphs on n >= 3 vertices need max_degree >= 2");
  require(n <= 1 || max_degree >= 1, "need max_degree >= 1");
  std::mt19937_64 rng(seed);
  EdgeBuilder builder(n, max_degree);
  for (int v = 1; v < n; ++v) {
    std::vector<int> open;
    for (int u = 0; u < v; ++u) {
      if (builder.degree(u) < max_degree) open.push_back(u);
    }
    builder.add(open[draw(rng, open.size())], v);
  }
  int added = 0;
  for (int attempt = 0; attempt < 20 * (extra_edges + 1) && added < extra_edges; ++attempt) {
    const auto u = static_cast<int>(draw(rng, static_cast<std::size_t>(n)));
    const auto v = static_cast<int>(draw(rng, static_cast<std::size_t>(n)));
    if (builder.add(u, v)) ++added;
  }
  return Graph(n, builder.edges());
}

}  // namespace bandsep
