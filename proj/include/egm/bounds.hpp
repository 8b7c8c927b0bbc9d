#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace egm {

/// φ(x) = (1+x) ln(1+x) − x for x >= −1, with φ(−1) = 1. Throws DomainError below −1.
double phi(double x);

/// X ~ Bin(m, q); lambda is the deviation, k_factor the multiplier K.
struct TailQuery {
  std::uint64_t m = 1;
  double q = 0;
  double lambda = 0;
  double k_factor = 0;

  double mu() const { return static_cast<double>(m) * q; }
  /// Throws DomainError unless m >= 1, 0 <= q <= 1, lambda >= 0.
  void validate() const;
};

struct BoundPair {
  double phi_form = 1;
  double quadratic_form = 1;
  /// μ = 0 with λ > 0: the tail event is impossible.
  bool degenerate = false;
  /// λ > μ on the lower tail was clamped to μ.
  bool clamped = false;
  double lambda_used = 0;
};

/// Pr(X > μ+λ) <= exp[−μφ(λ/μ)] <= exp[−λ²/(2(μ+λ/3))].
BoundPair chernoff_upper(const TailQuery& query);

/// Pr(X < μ−λ) <= exp[−μφ(−λ/μ)] <= exp[−λ²/(2μ)].
BoundPair chernoff_lower(const TailQuery& query);

struct LargeDeviationBound {
  double value = 1;
  /// K <= e, so the bound is at least 1.
  bool vacuous = false;
};

/// Pr(X > Kμ) < exp[−Kμ ln(K/e)]. Throws DomainError unless K > 0.
LargeDeviationBound large_deviation(const TailQuery& query);

enum class TailSide { kGreater, kGreaterEqual, kLess, kLessEqual };

/// Exact Pr(X side t) for X ~ Bin(m, q), summed in log space with
/// compensated addition.
double binom_tail_exact(std::uint64_t m, double q, double t, TailSide side);

enum class BudgetTag { kP24a, kP24b, kP25, kP26, kP27a, kP27b, kCut, kC7a, kC7b };

inline constexpr BudgetTag kAllBudgetTags[] = {BudgetTag::kP24a, BudgetTag::kP24b, BudgetTag::kP25,
                                               BudgetTag::kP26,  BudgetTag::kP27a, BudgetTag::kP27b,
                                               BudgetTag::kCut,  BudgetTag::kC7a,  BudgetTag::kC7b};

std::string to_string(BudgetTag tag);
/// Accepts P24a, P24b, P25, P26, P27a, P27b, CUT, C7a, C7b (case-insensitive).
/// Throws InputError for anything else.
BudgetTag parse_budget_tag(const std::string& text);

/// 8 ln n / n.
double dense_p(std::uint64_t n);

struct BudgetQuery {
  BudgetTag tag = BudgetTag::kP24a;
  std::uint64_t n = 2;
  double p = 0.5;
  double epsilon = 0.5;
  /// Ranges longer than this are summed around their dominant terms only
  /// (grid search, then expansion until terms fall 80 nats below the peak).
  std::uint64_t full_sum_limit = 4096;
};

struct BudgetReport {
  BudgetTag tag = BudgetTag::kP24a;
  std::uint64_t n = 0;
  double p = 0;
  double epsilon = 0;
  double log_value = 0;    // natural log; −inf for an empty sum
  double log10_value = 0;
  bool vacuous = false;    // value >= 1
  bool empty_range = false;
  std::string note;

  double value() const;
};

/// Finite-n value of the union-bound sum selected by the tag.
BudgetReport union_budget(const BudgetQuery& query);

enum class SizeBranch { kFirst, kSecond, kTie };

struct SizeFormula {
  std::uint64_t value = 0;
  std::uint64_t first = 0;   // C(l(k+1)−1, l)
  std::uint64_t second = 0;  // C(n, l) − C(n−k, l)
  SizeBranch branch = SizeBranch::kFirst;
};

/// max{C(l(k+1)−1, l), C(n,l) − C(n−k,l)}. Throws DomainError unless
/// l >= 2 and lk <= n, or on 64-bit overflow.
SizeFormula eg_size_formula(std::uint64_t n, std::uint64_t k, std::uint64_t l = 2);

struct P3Moments {
  double mean = 0;
  double second_moment = 0;
  /// E X² / (E X)²; absent when E X = 0.
  std::optional<double> ratio;
};

/// First and second moments of the number of isolated P₃ components of G(n, p).
P3Moments p3_moments(std::uint64_t n, double p);

}  // namespace egm
