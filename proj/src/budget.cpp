#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "egm/bounds.hpp"
#include "egm/error.hpp"

namespace egm {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kCutoffNats = 80.0;

/// Running log Σ exp(x_i).
class LogAccumulator {
 public:
  void add(double x) {
    if (x == kNegInf) return;
    if (x <= max_) {
      sum_ += std::exp(x - max_);
    } else {
      sum_ = sum_ * std::exp(max_ - x) + 1.0;
      max_ = x;
    }
  }
  double value() const { return max_ == kNegInf ? kNegInf : max_ + std::log(sum_); }

 private:
  double max_ = kNegInf;
  double sum_ = 0;
};

double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

/// ln C(n, k) for fixed n via a table of ln j!.
class LogChoose {
 public:
  explicit LogChoose(std::uint64_t n) : n_(n), lfact_(n + 1) {
    for (std::uint64_t j = 0; j <= n; ++j) lfact_[j] = std::lgamma(static_cast<double>(j) + 1.0);
  }
  double operator()(std::int64_t k) const {
    if (k < 0 || static_cast<std::uint64_t>(k) > n_) return kNegInf;
    const auto uk = static_cast<std::uint64_t>(k);
    return lfact_[n_] - lfact_[uk] - lfact_[n_ - uk];
  }

 private:
  std::uint64_t n_;
  std::vector<double> lfact_;
};

/// log Σ_{i=lo}^{hi} exp(f(i)). Long ranges are summed around their dominant
/// terms: a coarse grid locates local peaks, each is refined by ternary
/// search and expanded until terms drop kCutoffNats below the largest.
template <typename F>
double log_sum_range(std::int64_t lo, std::int64_t hi, F&& f, std::uint64_t full_limit) {
  if (lo > hi) return kNegInf;
  LogAccumulator acc;
  if (static_cast<std::uint64_t>(hi - lo) + 1 <= full_limit) {
    for (std::int64_t i = lo; i <= hi; ++i) acc.add(f(i));
    return acc.value();
  }
  constexpr int kGrid = 64;
  std::vector<std::int64_t> xs;
  for (int j = 0; j <= kGrid; ++j) {
    const std::int64_t x = lo + static_cast<std::int64_t>((static_cast<long double>(hi - lo) * j) / kGrid);
    if (xs.empty() || x != xs.back()) xs.push_back(x);
  }
  std::vector<double> vs(xs.size());
  double top = kNegInf;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    vs[j] = f(xs[j]);
    top = std::max(top, vs[j]);
  }
  if (top == kNegInf) return kNegInf;

  std::vector<std::int64_t> peaks;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const bool left_ok = j == 0 || vs[j] >= vs[j - 1];
    const bool right_ok = j + 1 == xs.size() || vs[j] >= vs[j + 1];
    if (!left_ok || !right_ok || vs[j] < top - 2 * kCutoffNats) continue;
    std::int64_t a = j == 0 ? xs[j] : xs[j - 1];
    std::int64_t b = j + 1 == xs.size() ? xs[j] : xs[j + 1];
    while (b - a > 2) {
      const std::int64_t m1 = a + (b - a) / 3;
      const std::int64_t m2 = b - (b - a) / 3;
      if (f(m1) < f(m2)) {
        a = m1 + 1;
      } else {
        b = m2 - 1;
      }
    }
    std::int64_t best = a;
    double best_v = f(a);
    for (std::int64_t x = a + 1; x <= b; ++x) {
      const double v = f(x);
      if (v > best_v) {
        best_v = v;
        best = x;
      }
    }
    top = std::max(top, best_v);
    peaks.push_back(best);
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> spans;
  for (std::int64_t peak : peaks) {
    std::int64_t left = peak;
    while (left > lo && f(left - 1) >= top - kCutoffNats) --left;
    std::int64_t right = peak;
    while (right < hi && f(right + 1) >= top - kCutoffNats) ++right;
    spans.push_back({left, right});
  }
  std::sort(spans.begin(), spans.end());
  std::int64_t covered = lo - 1;
  for (const auto& [left, right] : spans) {
    for (std::int64_t i = std::max(left, covered + 1); i <= right; ++i) acc.add(f(i));
    covered = std::max(covered, right);
  }
  return acc.value();
}

std::int64_t floor_i(double x) { return static_cast<std::int64_t>(std::floor(x)); }
std::int64_t ceil_i(double x) { return static_cast<std::int64_t>(std::ceil(x)); }
/// Least integer strictly greater than x.
std::int64_t above(double x) { return floor_i(x) + 1; }
/// Greatest integer strictly less than x.
std::int64_t below(double x) { return ceil_i(x) - 1; }

}  // namespace

std::string to_string(BudgetTag tag) {
  switch (tag) {
    case BudgetTag::kP24a: return "P24a";
    case BudgetTag::kP24b: return "P24b";
    case BudgetTag::kP25: return "P25";
    case BudgetTag::kP26: return "P26";
    case BudgetTag::kP27a: return "P27a";
    case BudgetTag::kP27b: return "P27b";
    case BudgetTag::kCut: return "CUT";
    case BudgetTag::kC7a: return "C7a";
    case BudgetTag::kC7b: return "C7b";
  }
  return "?";
}

BudgetTag parse_budget_tag(const std::string& text) {
  std::string upper;
  for (char c : text) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  for (BudgetTag tag : kAllBudgetTags) {
    std::string name = to_string(tag);
    for (char& c : name) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (name == upper) return tag;
  }
  throw InputError("unknown budget tag '" + text + "'");
}

double dense_p(std::uint64_t n) {
  const auto nd = static_cast<double>(n);
  return 8.0 * std::log(nd) / nd;
}

double BudgetReport::value() const { return std::exp(log_value); }

BudgetReport union_budget(const BudgetQuery& query) {
  const std::uint64_t n = query.n;
  const double p = query.p;
  const double eps = query.epsilon;
  if (n < 2) throw DomainError("budget sums need n >= 2");
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("p must lie in (0, 1], got " + std::to_string(p));
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("epsilon must lie in (0, 1), got " + std::to_string(eps));

  BudgetReport out;
  out.tag = query.tag;
  out.n = n;
  out.p = p;
  out.epsilon = eps;
  const LogChoose lc(n);
  const auto nd = static_cast<double>(n);
  const auto ni = static_cast<std::int64_t>(n);
  const double ln_n = std::log(nd);
  const double sq = std::sqrt(ln_n);
  const std::uint64_t limit = query.full_sum_limit;
  double value = kNegInf;

  switch (query.tag) {
    case BudgetTag::kP24a: {
      out.note = "exponent uses eps^2/2 as in the summation line; the preceding tail bound states eps^2/3";
      value = log_sum_range(
          above(eps * nd), ni,
          [&](std::int64_t w) {
            const auto wd = static_cast<double>(w);
            return lc(w) - 0.5 * eps * eps * (wd * (wd - 1) / 2) * p;
          },
          limit);
      break;
    }
    case BudgetTag::kP24b: {
      // Single vertices span no pairs, so their bad event is empty.
      value = log_sum_range(
          std::max<std::int64_t>(2, above(ln_n / (150 * p))), ni,
          [&](std::int64_t w) {
            const auto wd = static_cast<double>(w);
            return lc(w) - 700.0 * wd * (wd - 1) * p;
          },
          limit);
      break;
    }
    case BudgetTag::kP25: {
      out.note = "sum of C(n,w) times the large-deviation bound itself; its stated 3/2 simplification needs a constant of at most 1.2";
      value = log_sum_range(
          ceil_i(2 * ln_n / 3), floor_i(ln_n / (150 * p)),
          [&](std::int64_t w) {
            const auto wd = static_cast<double>(w);
            return lc(w) - (1.0 / 3.0) * wd * ln_n * std::log(2 * ln_n / (3 * std::exp(1.0) * wd * p));
          },
          limit);
      break;
    }
    case BudgetTag::kP26: {
      const std::int64_t z_min = above(nd / sq);
      value = log_sum_range(
          above(eps * nd), ni - z_min,
          [&](std::int64_t y) {
            const auto yd = static_cast<double>(y);
            return lc(y) + log_sum_range(
                               z_min, ni - y,
                               [&](std::int64_t z) {
                                 return lc(z) - (eps * eps / 3) * yd * static_cast<double>(z) * p;
                               },
                               limit);
          },
          limit);
      break;
    }
    case BudgetTag::kP27a: {
      // a = n − b − c with b < a and a > 33n/50.
      value = log_sum_range(
          ceil_i(sq), ni,
          [&](std::int64_t b) {
            const std::int64_t c_hi =
                std::min({b + 1, ni - 2 * b - 1, below((17.0 * nd - 50.0 * static_cast<double>(b)) / 50.0)});
            const auto bd = static_cast<double>(b);
            return lc(b) + log_sum_range(
                               0, c_hi,
                               [&](std::int64_t c) {
                                 const auto a = static_cast<double>(ni - b - c);
                                 return lc(c) - 0.4 * a * bd * p;
                               },
                               limit);
          },
          limit);
      break;
    }
    case BudgetTag::kP27b: {
      out.note = "sums over b, c >= n/sqrt(ln n) with c <= min(b+1, n-b); no constraint on a";
      const std::int64_t lo = ceil_i(nd / sq);
      value = log_sum_range(
          lo, ni - lo,
          [&](std::int64_t b) {
            const auto bd = static_cast<double>(b);
            return lc(b) + log_sum_range(
                               lo, std::min(b + 1, ni - b),
                               [&](std::int64_t c) { return lc(c) - 1.2 * bd * static_cast<double>(c) * p; },
                               limit);
          },
          limit);
      break;
    }
    case BudgetTag::kCut: {
      value = log_sum_range(
          1, ni / 2,
          [&](std::int64_t c) {
            const auto cd = static_cast<double>(c);
            return lc(c) - cd * (nd - cd) * p;
          },
          limit);
      break;
    }
    case BudgetTag::kC7a:
    case BudgetTag::kC7b: {
      const bool large_b = query.tag == BudgetTag::kC7a;
      out.note = large_b ? "pairs (s, b) with s <= b+1, a = n-s-b odd, b > n/1000: both bad-event terms"
                         : "pairs (s, b) with s <= b+1, a = n-s-b odd, b < n/1000: both bad-event terms";
      value = log_sum_range(
          1, below(nd / sq),
          [&](std::int64_t s) {
            // b ranges over values with a = n − s − b odd.
            const std::int64_t parity = (ni - s - 1) % 2;
            // y = 0 gives d = b + 1, and r = d − s >= 0 needs s <= b + 1.
            std::int64_t b_lo = std::max<std::int64_t>({ceil_i(sq), s - 1, large_b ? above(nd / 1000) : 0});
            std::int64_t b_hi = below(100.0 * static_cast<double>(ni - s) / 499.0);
            if (!large_b) b_hi = std::min(b_hi, below(nd / 1000));
            if (((b_lo % 2) + 2) % 2 != parity) ++b_lo;
            if (b_hi >= 0 && b_hi % 2 != parity) --b_hi;
            if (b_lo > b_hi) return kNegInf;
            const auto sd = static_cast<double>(s);
            const double ls = lc(s);
            return log_sum_range(
                0, (b_hi - b_lo) / 2,
                [&](std::int64_t i) {
                  const std::int64_t b = b_lo + 2 * i;
                  const auto bd = static_cast<double>(b);
                  const auto a = static_cast<double>(ni - s - b);
                  double t1 = 0;
                  double t2 = 0;
                  if (large_b) {
                    t1 = ls + lc(b) - 0.005 * a * bd * p;
                    const double gap = 0.9 * a - bd;
                    t2 = ls - sd * p * gap * gap / (2 * (bd + gap / 3));
                  } else {
                    t1 = ls + lc(b) - 0.405 * a * bd * p;
                    t2 = ls - 0.1 * a * sd * p * std::log(a / (10 * std::exp(1.0) * bd));
                  }
                  return log_add(t1, t2);
                },
                limit);
          },
          limit);
      break;
    }
  }
  out.log_value = value;
  out.empty_range = value == kNegInf;
  out.log10_value = value / std::log(10.0);
  out.vacuous = value >= 0.0;
  return out;
}

}  // namespace egm
