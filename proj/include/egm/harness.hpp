#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "egm/cover.hpp"
#include "egm/graph.hpp"

namespace egm {

enum class Ternary { kYes, kNo, kUnknown };

const char* to_string(Ternary t);

using P3 = std::array<Vertex, 3>;  // end, middle, end

struct P3Count {
  std::size_t count = 0;
  /// Up to two isolated P₃ components, by smallest vertex.
  std::vector<P3> witnesses;
};

/// Components that are exactly a path on three vertices.
P3Count count_isolated_p3(const Graph& g);

struct EmptyHalf {
  Ternary verdict = Ternary::kUnknown;
  IndependenceBounds bounds;
  std::string reason;
};

/// Whether some ⌈n/2⌉ vertices span no edge (α(g) >= ⌈n/2⌉).
EmptyHalf has_empty_half(const Graph& g, std::uint64_t node_budget = kDefaultIndependenceBudget);

struct EgFailure {
  /// kYes: G itself, the unique largest subgraph with matching number ν,
  /// has neither form.
  Ternary fails = Ternary::kUnknown;
  std::size_t nu = 0;
  std::size_t support = 0;      // non-isolated vertices
  bool support_fits = false;    // support <= 2ν+1
  Ternary tau_eq_nu = Ternary::kUnknown;
  std::string reason;
};

EgFailure eg_fails_at_nu(const Graph& g, std::uint64_t cover_budget = kDefaultCoverBudget);

/// Two isolated P₃s plus the absence of an edgeless half imply that EG fails at k = ν.
struct FailureCertificate {
  std::vector<P3> p3_pair;
  Ternary empty_half = Ternary::kUnknown;
  bool present = false;  // two P₃s found and empty_half == kNo
  EgFailure check;       // direct evaluation of the conclusion
  std::string reason;
};

FailureCertificate certify(const Graph& g, std::uint64_t independence_budget = kDefaultIndependenceBudget,
                           std::uint64_t cover_budget = kDefaultCoverBudget);

enum class DensityEvent {
  kDenseSet,     // |X| > εn: |E(X)| = (1±ε) C(|X|,2) p
  kLargeSet,     // |X| > ln n/(150p): |E(X)| <= 300 C(|X|,2) p
  kSparseSet,    // |X| <= ln n/(150p): |E(X)| <= |X| ln n / 3
  kBipartite,    // |Y| > εn, |Z| > n/sqrt(ln n): |∇(Y,Z)| = (1±ε)|Y||Z|p
};

const char* to_string(DensityEvent e);

/// Whether the event holds on the given set(s); z is used by kBipartite only.
/// Size preconditions are not enforced here.
bool density_event_holds(const Graph& g, DensityEvent event, const VertexSet& x, const VertexSet* z, double epsilon,
                         double p);

struct AuditLine {
  DensityEvent event;
  std::size_t samples = 0;
  std::size_t violations = 0;
  /// Size precondition cannot be met at this (n, p).
  bool skipped = false;
};

struct DensityAudit {
  double epsilon = 0;
  double p = 0;
  std::vector<AuditLine> lines;
};

/// Samples random sets meeting each event's size precondition and counts violations.
DensityAudit density_audit(const Graph& g, double epsilon, double p, std::size_t samples, std::uint64_t seed);

enum class Regime { kDense, kForest, kMiddle, kCustom };

const char* to_string(Regime r);
/// dense, forest, middle, custom. Throws InputError otherwise.
Regime parse_regime(const std::string& text);

struct TrialChecks {
  bool empty_half = true;
  bool tau_eq_nu = true;
  /// Exact eg_check_all, run only when n <= eg_cutoff.
  bool eg_all = true;
  std::size_t eg_cutoff = 12;
  std::size_t density_samples = 0;
  /// Improve a random partition at k = ν and record the stop reason.
  bool moves = false;
};

struct RegimeSpec {
  Regime regime = Regime::kDense;
  std::uint64_t n = 10;
  /// Required for middle and custom; ignored otherwise.
  std::optional<double> p;
  double forest_c = 0.1;
  std::size_t trials = 0;
  std::uint64_t master_seed = 0;
  TrialChecks checks;
  double epsilon = 0.5;
  std::uint64_t independence_budget = kDefaultIndependenceBudget;
  std::uint64_t cover_budget = kDefaultCoverBudget;
  std::size_t threads = 1;
};

struct ResolvedP {
  double p = 0;
  bool clamped = false;
  /// Middle regime: 4 ln(2e)/n < p < ln n/(3n) is non-empty and contains p.
  std::optional<bool> middle_feasible;
  std::optional<bool> middle_interval_empty;
};

/// Throws InputError for a missing or out-of-range p.
ResolvedP resolve_p(const RegimeSpec& spec);

struct TrialRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::uint64_t n = 0;
  double p = 0;
  std::size_t m = 0;
  std::size_t nu = 0;
  bool is_forest = false;
  std::size_t p3_count = 0;
  Ternary empty_half = Ternary::kUnknown;
  Ternary tau_eq_nu = Ternary::kUnknown;
  /// kYes: every k holds; kNo: some k fails; kUnknown: not run (see notes).
  Ternary eg_all = Ternary::kUnknown;
  bool certificate = false;
  Ternary eg_fails_at_nu = Ternary::kUnknown;
  std::optional<std::size_t> density_violations;
  std::optional<std::size_t> moves_accepted;
  std::string moves_stop;
  std::string notes;
};

struct Rate {
  std::size_t successes = 0;
  std::size_t total = 0;
  double rate = 0;
  double lower = 0;  // Wilson 95%
  double upper = 0;
};

Rate wilson(std::size_t successes, std::size_t total);

struct TrialSummary {
  Regime regime = Regime::kDense;
  std::uint64_t n = 0;
  ResolvedP p;
  std::size_t trials = 0;
  std::uint64_t master_seed = 0;
  bool degenerate = false;  // no trials
  Rate forest;
  Rate p3_pair;
  Rate empty_half;      // among decided trials
  Rate tau_eq_nu;       // among decided trials
  Rate eg_all;          // among trials where it ran
  std::size_t certificates = 0;
  std::size_t certificates_confirmed = 0;  // eg_fails_at_nu == kYes
  std::size_t certificates_contradicted = 0;
};

struct TrialRun {
  std::vector<TrialRecord> records;
  TrialSummary summary;
};

/// Runs spec.trials independent samples with seeds derive_seed(master_seed, i).
/// Records come back ordered by trial index regardless of thread count.
TrialRun run_trials(const RegimeSpec& spec);

/// One trial; exposed for replay from a recorded seed.
TrialRecord run_trial(const RegimeSpec& spec, const ResolvedP& p, std::size_t index);

}  // namespace egm
