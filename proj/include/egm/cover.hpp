#pragma once

#include <cstdint>
#include <optional>

#include "egm/graph.hpp"

namespace egm {

inline constexpr std::uint64_t kDefaultCoverBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultIndependenceBudget = 100'000'000;

struct CoverResult {
  std::size_t size = 0;
  VertexSet cover;
  std::uint64_t nodes = 0;
};

/// Exact τ(g) by per-component branch and bound with degree-0/1 and
/// dominated-vertex reductions and a matching lower bound. Throws
/// CapabilityError carrying [lower, upper] once `node_budget` search nodes
/// have been expanded.
CoverResult minimum_vertex_cover(const Graph& g, std::uint64_t node_budget = kDefaultCoverBudget);

std::size_t vertex_cover_number(const Graph& g, std::uint64_t node_budget = kDefaultCoverBudget);

/// Decides τ(g) <= t; nullopt when the budget runs out first.
std::optional<bool> vertex_cover_at_most(const Graph& g, std::size_t t,
                                         std::uint64_t node_budget = kDefaultCoverBudget);

/// Bounds on the independence number α(g).
struct IndependenceBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool exact() const { return lower == upper; }
  std::uint64_t nodes = 0;
};

/// Branch and bound for α(g) with a greedy clique-cover bound (a greedy
/// colouring of the complement). Search stops once the bounds decide
/// α >= target (when a target is given) or the budget is exhausted; the
/// returned bounds are always valid.
IndependenceBounds independence_number(const Graph& g, std::optional<std::size_t> target = std::nullopt,
                                       std::uint64_t node_budget = kDefaultIndependenceBudget);

}  // namespace egm
