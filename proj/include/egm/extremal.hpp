#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "egm/decomposition.hpp"
#include "egm/graph.hpp"

namespace egm {

inline constexpr std::size_t kDefaultExactExtremal = 12;
inline constexpr std::size_t kMaxExactExtremal = 16;
inline constexpr std::uint64_t kDefaultEnumerationBudget = 2'000'000;

/// Best vertex set for one of the two canonical shapes.
struct FormResult {
  VertexSet set;
  std::size_t size = 0;
  bool exact = true;  // false: local-search value, a lower bound
};

/// W with |W| = 2k+1 maximising |E(W)|. Throws InputError if 2k+1 > n.
FormResult best_form1(const Graph& g, std::size_t k, std::uint64_t enumeration_budget = kDefaultEnumerationBudget);

/// T with |T| = k maximising the number of edges meeting T. Throws InputError if k > n.
FormResult best_form2(const Graph& g, std::size_t k, std::uint64_t enumeration_budget = kDefaultEnumerationBudget);

enum class FormKind { kForm1, kForm2 };

/// H = E_G(W) with |W| = min(2k+1, n) (Form1), or H = edges of G meeting T
/// with |T| = k (Form2).
struct FormWitness {
  FormKind kind;
  VertexSet set;
};

/// All canonical shapes the edge set h (a subgraph of g) takes at matching
/// number k; lexicographically least witness per kind. Requires n <= 64.
std::vector<FormWitness> classify_forms(const Graph& g, const EdgeList& h, std::size_t k);

struct Maximizer {
  EdgeList edges;
  std::vector<FormWitness> forms;
  bool canonical() const { return !forms.empty(); }
};

enum class ExtremalMode { kExact, kHeuristic };

struct ExtremalOptions {
  ExtremalMode mode = ExtremalMode::kExact;
  std::size_t n_exact = kDefaultExactExtremal;
  /// At k = ν(G) the whole graph is the unique maximiser; skip the search.
  bool nu_shortcut = true;
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
  std::size_t heuristic_restarts = 8;
  std::size_t heuristic_steps = 100;
  std::uint64_t seed = 0;
};

struct ExtremalResult {
  std::size_t k = 0;
  std::size_t size = 0;
  bool exact = true;
  /// Exact mode: every distinct maximising edge set, sorted. Heuristic mode:
  /// the single best edge set found.
  std::vector<Maximizer> maximizers;
  /// Heuristic mode: a partition realising `size`.
  std::optional<Decomposition> partition;
};

/// Largest subgraph of g with matching number k. Throws InputError if
/// k > ν(g) and CapabilityError if exact mode is asked for n > n_exact.
ExtremalResult extremal(const Graph& g, std::size_t k, const ExtremalOptions& options = {});

struct EgVerdict {
  std::size_t k = 0;
  bool holds = true;
  std::size_t size = 0;
  std::size_t maximizer_count = 0;
  /// Forms of every maximiser, in maximiser order.
  std::vector<std::vector<FormWitness>> forms;
  /// A maximiser that has neither form, when one exists.
  std::optional<EdgeList> counterexample;
};

/// Whether every largest subgraph with matching number k has Form1 or Form2.
EgVerdict eg_check(const Graph& g, std::size_t k, const ExtremalOptions& options = {});

/// eg_check for k = 0..ν(g).
std::vector<EgVerdict> eg_check_all(const Graph& g, const ExtremalOptions& options = {});

}  // namespace egm
