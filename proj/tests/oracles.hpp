#pragma once

// Brute-force reference implementations used only by the tests. None of
// them calls into the library beyond the Graph container.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "egm/graph.hpp"
#include "egm/random.hpp"

namespace oracle {

using egm::Edge;
using egm::EdgeList;
using egm::Graph;
using egm::Vertex;

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(g.order(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1U << e.v;
    adj[e.v] |= 1U << e.u;
  }
  return adj;
}

/// ν of the subgraph induced on `alive`, by memoised recursion on the lowest vertex (n <= 20).
class MatchingOracle {
 public:
  explicit MatchingOracle(const Graph& g) : adj_(adjacency_masks(g)), memo_(std::size_t{1} << g.order(), -1) {}

  int nu(std::uint32_t alive) {
    if (alive == 0) return 0;
    int& slot = memo_[alive];
    if (slot >= 0) return slot;
    const int v = std::countr_zero(alive);
    const std::uint32_t rest = alive & ~(1U << v);
    int best = nu(rest);
    for (std::uint32_t m = adj_[static_cast<std::size_t>(v)] & rest; m != 0; m &= m - 1) {
      const int u = std::countr_zero(m);
      best = std::max(best, 1 + nu(rest & ~(1U << u)));
    }
    slot = best;
    return best;
  }

 private:
  std::vector<std::uint32_t> adj_;
  std::vector<int> memo_;
};

inline int matching_number(const Graph& g) {
  MatchingOracle o(g);
  return o.nu(g.order() == 32 ? ~0U : (1U << g.order()) - 1);
}

/// Odd components of g − s by flood fill on masks.
inline int odd_components(const Graph& g, std::uint32_t s) {
  const auto adj = adjacency_masks(g);
  const std::uint32_t all = (1U << g.order()) - 1;
  std::uint32_t left = all & ~s;
  int odd = 0;
  while (left != 0) {
    std::uint32_t comp = left & (0U - left);
    std::uint32_t frontier = comp;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t m = frontier; m != 0; m &= m - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(m))];
      next &= left & ~comp;
      comp |= next;
      frontier = next;
    }
    if (std::popcount(comp) % 2 == 1) ++odd;
    left &= ~comp;
  }
  return odd;
}

/// max over all S of o(G − S) − |S|.
inline int tutte_berge_max(const Graph& g) {
  const std::uint32_t all = (1U << g.order()) - 1;
  int best = -static_cast<int>(g.order());
  for (std::uint32_t s = 0;; ++s) {
    best = std::max(best, odd_components(g, s) - std::popcount(s));
    if (s == all) break;
  }
  return best;
}

/// α by subset enumeration (n <= 22).
inline int independence_number(const Graph& g) {
  const auto adj = adjacency_masks(g);
  const std::uint32_t all = (1U << g.order()) - 1;
  int best = 0;
  for (std::uint32_t s = 0;; ++s) {
    bool ok = true;
    for (std::uint32_t m = s; m != 0 && ok; m &= m - 1)
      if ((adj[static_cast<std::size_t>(std::countr_zero(m))] & s) != 0) ok = false;
    if (ok) best = std::max(best, std::popcount(s));
    if (s == all) break;
  }
  return best;
}

/// τ by subset enumeration (n <= 22).
inline int vertex_cover_number(const Graph& g) {
  const std::uint32_t all = (1U << g.order()) - 1;
  int best = static_cast<int>(g.order());
  for (std::uint32_t s = 0;; ++s) {
    bool ok = true;
    for (const Edge& e : g.edges())
      if (((s >> e.u) & 1U) == 0 && ((s >> e.v) & 1U) == 0) {
        ok = false;
        break;
      }
    if (ok) best = std::min(best, std::popcount(s));
    if (s == all) break;
  }
  return best;
}

struct SubsetExtremal {
  std::size_t size = 0;
  std::set<EdgeList> maximizers;
};

/// For every k, the largest edge subsets H ⊆ E(g) with ν(H) = k, by
/// enumerating all 2^m subsets with ν[mask] = max(ν[mask − e], 1 + ν[mask ∩ disjoint(e)]).
inline std::map<std::size_t, SubsetExtremal> edge_subset_extremal(const Graph& g) {
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  std::vector<std::uint32_t> disjoint(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Edge& a = edges[i];
      const Edge& b = edges[j];
      if (a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v) disjoint[i] |= 1U << j;
    }
  std::vector<std::uint8_t> nu(std::size_t{1} << m, 0);
  std::vector<std::size_t> best_size(m / 2 + 2, 0);
  std::vector<std::vector<std::uint32_t>> best_masks(m / 2 + 2);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    if (mask != 0) {
      const int low = std::countr_zero(mask);
      const std::uint32_t without = mask & (mask - 1);
      nu[mask] = std::max<std::uint8_t>(nu[without], static_cast<std::uint8_t>(1 + nu[mask & disjoint[low]]));
    }
    const std::size_t k = nu[mask];
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (best_masks[k].empty() || size > best_size[k]) {
      best_size[k] = size;
      best_masks[k] = {mask};
    } else if (size == best_size[k]) {
      best_masks[k].push_back(mask);
    }
  }
  std::map<std::size_t, SubsetExtremal> out;
  for (std::size_t k = 0; k < best_masks.size(); ++k) {
    if (best_masks[k].empty()) continue;
    SubsetExtremal r;
    r.size = best_size[k];
    for (std::uint32_t mask : best_masks[k]) {
      EdgeList h;
      for (std::size_t i = 0; i < m; ++i)
        if (((mask >> i) & 1U) != 0) h.push_back(edges[i]);
      r.maximizers.insert(std::move(h));
    }
    out[k] = std::move(r);
  }
  return out;
}

inline std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Random labelled tree-or-forest on n vertices: each vertex v > 0 attaches
/// to an earlier vertex with probability keep, labels shuffled.
inline Graph random_forest(std::size_t n, double keep, egm::Rng& rng) {
  std::vector<Vertex> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = static_cast<Vertex>(i);
  rng.shuffle(std::span<Vertex>(label));
  EdgeList edges;
  for (std::size_t v = 1; v < n; ++v) {
    if (!rng.bernoulli(keep)) continue;
    const auto u = static_cast<std::size_t>(rng.below(v));
    Vertex a = label[u];
    Vertex b = label[v];
    if (a > b) std::swap(a, b);
    edges.push_back({a, b});
  }
  std::sort(edges.begin(), edges.end());
  return Graph(n, edges);
}

}  // namespace oracle
