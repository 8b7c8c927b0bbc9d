#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "egm/decomposition.hpp"
#include "egm/graph.hpp"

namespace egm {

/// Case thresholds derived from n (natural log).
struct CaseThresholds {
  std::size_t n = 0;
  double frac_small = 0;  // n/2000
  double ratio = 3.99;
  double y_small = 0;     // 1e-4 n
  double log_half = 0;    // sqrt(ln n)
  double s_cut = 0;       // n / sqrt(ln n)

  static CaseThresholds for_n(std::size_t n);
};

/// Which of the seven cases a non-canonical partition falls into. The
/// lower-numbered case wins on overlap; case 7 is the remaining branch.
/// Throws InputError for canonical partitions.
int classify_case(const Decomposition& pi);
int classify_case(const Graph& g, const Decomposition& pi);

struct MoveOptions {
  /// Reject partitions outside the case guard (InputError).
  bool check_guard = true;
  /// Drives the random split of case 3.
  std::uint64_t seed = 0;
};

struct MoveReport {
  int case_id = 0;
  CaseThresholds thresholds;
  Decomposition before;
  Decomposition after;
  std::size_t size_before = 0;
  std::size_t size_after = 0;
  /// Edges of the new edge set missing from the old one, and vice versa.
  std::size_t gained = 0;
  std::size_t lost = 0;
  /// Vertices that changed part (M of cases 5–7, the merged M_i of cases 1/4,
  /// x plus v, z for case 2, A₁¹ for case 3).
  std::vector<Vertex> moved;
  /// Vertices chosen by the constructive rule (x_i, x / v / z).
  std::vector<Vertex> chosen;

  bool improved() const { return size_after > size_before; }
};

MoveReport apply_case1(const Graph& g, const Decomposition& pi, const MoveOptions& options = {});
MoveReport apply_case2(const Graph& g, const Decomposition& pi, const MoveOptions& options = {});
MoveReport apply_case3(const Graph& g, const Decomposition& pi, const MoveOptions& options = {});
MoveReport apply_case4(const Graph& g, const Decomposition& pi, const MoveOptions& options = {});
MoveReport apply_case5(const Graph& g, const Decomposition& pi, const MoveOptions& options = {});
MoveReport apply_case6(const Graph& g, const Decomposition& pi, const MoveOptions& options = {});
MoveReport apply_case7(const Graph& g, const Decomposition& pi, const MoveOptions& options = {});
MoveReport apply_case(int case_id, const Graph& g, const Decomposition& pi, const MoveOptions& options = {});

enum class ImproveStop { kCanonical, kNoImprovement, kStepLimit, kStuck };

const char* to_string(ImproveStop stop);

struct ImproveResult {
  Decomposition final_partition;
  /// Every applied move, including a final non-improving one (not accepted).
  std::vector<MoveReport> trace;
  std::size_t accepted = 0;
  ImproveStop stop = ImproveStop::kCanonical;
  std::string detail;
};

/// Classify-and-apply until canonical, no increase, a structural dead end, or
/// max_steps moves.
ImproveResult improve(const Graph& g, const Decomposition& pi, std::size_t max_steps, std::uint64_t seed = 0);

/// A uniformly shuffled partition with r = n − 2k: random s in [0, k], random
/// S, and random odd blocks absorbing the remaining excess. Requires 2k <= n.
Decomposition random_partition(std::size_t n, std::size_t k, std::uint64_t seed);

}  // namespace egm
