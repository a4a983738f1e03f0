#pragma once

// Bitmask helpers for the exhaustive routines (n <= 30).

#include "bandsep/graph.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace bandsep::detail {

using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Vertex w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= Mask{1} << w;
  }
  return adj;
}

/// union_of[m] = OR of adj[v] over v in m, for every m < 2^n.
inline std::vector<Mask> neighbor_unions(const std::vector<Mask>& adj) {
  const std::size_t total = std::size_t{1} << adj.size();
  std::vector<Mask> out(total, 0);
  for (std::size_t m = 1; m < total; ++m) {
    const auto low = std::countr_zero(static_cast<Mask>(m));
    out[m] = out[m & (m - 1)] | adj[static_cast<std::size_t>(low)];
  }
  return out;
}

inline Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) m |= Mask{1} << v;
  return m;
}

inline VertexSet from_mask(Mask m) {
  VertexSet out;
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

/// Calls fn(mask) for every k-subset of {0..n-1} in lexicographic order of
/// the sorted vertex lists; stops early when fn returns true. Returns whether
/// it stopped early.
template <typename Fn>
bool for_each_combination(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    Mask m = 0;
    for (int i : idx) m |= Mask{1} << i;
    if (fn(m)) return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

/// Connected components of the subgraph induced by `mask`.
inline std::vector<Mask> components(const std::vector<Mask>& adj, Mask mask) {
  std::vector<Mask> out;
  Mask left = mask;
  while (left != 0) {
    Mask comp = left & (~left + 1);
    Mask frontier = comp;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      next &= mask & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

}  // namespace bandsep::detail
