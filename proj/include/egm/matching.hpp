#pragma once

#include <cstdint>
#include <vector>

#include "egm/graph.hpp"

namespace egm {

inline constexpr Vertex kUnmatched = static_cast<Vertex>(-1);

/// A set of pairwise vertex-disjoint edges of a host graph.
struct Matching {
  std::vector<Vertex> mate;  // mate[v] or kUnmatched
  EdgeList pairs;            // sorted, u < v

  std::size_t size() const { return pairs.size(); }
};

/// Maximum-cardinality matching by Edmonds' blossom-contraction search.
Matching max_matching(const Graph& g);

/// ν(g).
std::size_t matching_number(const Graph& g);

/// True iff `m` is a matching of g with no augmenting path (checked by an
/// exhaustive alternating search from every exposed vertex, independent of
/// the blossom search). Exponential in the worst case; intended for small graphs.
bool has_augmenting_path(const Graph& g, const Matching& m);

/// Number of odd components of g - s.
std::size_t odd_components(const Graph& g, const VertexSet& s);

enum class WitnessMode { kExhaustive, kHeuristic };

struct TBOptions {
  WitnessMode mode = WitnessMode::kExhaustive;
  std::size_t n_exact = 20;
};

/// A set S certifying the deficiency o(G-S) - |S|.
struct TBWitness {
  VertexSet s_set;
  std::size_t odd_count = 0;
  std::int64_t deficiency = 0;  // odd_count - |s_set|
  bool exhaustive = false;      // maximised over all S
  bool certified = false;       // deficiency == n - 2ν(g)
};

/// Exhaustive mode enumerates S by increasing size (requires n <= n_exact,
/// else CapabilityError) and returns the first maximiser. Heuristic mode takes
/// S = vertices adjacent to, but outside, the set reachable from exposed
/// vertices by even alternating paths.
TBWitness tutte_berge_witness(const Graph& g, const TBOptions& options = {});

}  // namespace egm
