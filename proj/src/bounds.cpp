#include "egm/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "egm/error.hpp"

namespace egm {

double phi(double x) {
  if (std::isnan(x) || x < -1.0) throw DomainError("phi is defined for x >= -1, got " + std::to_string(x));
  if (x == -1.0) return 1.0;
  if (std::fabs(x) < 1e-2) {
    // Σ_{j>=2} (−1)^j x^j / (j(j−1))
    double sum = 0;
    double power = x * x;
    for (int j = 2; j <= 12; ++j) {
      sum += ((j % 2 == 0) ? 1.0 : -1.0) * power / (j * (j - 1.0));
      power *= x;
    }
    return sum;
  }
  return (1.0 + x) * std::log1p(x) - x;
}

void TailQuery::validate() const {
  if (m < 1) throw DomainError("m must be at least 1");
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("q must lie in [0, 1], got " + std::to_string(q));
  if (!(lambda >= 0.0)) throw DomainError("lambda must be non-negative, got " + std::to_string(lambda));
}

BoundPair chernoff_upper(const TailQuery& query) {
  query.validate();
  BoundPair out;
  const double mu = query.mu();
  const double lambda = query.lambda;
  out.lambda_used = lambda;
  if (lambda == 0.0) return out;
  if (mu == 0.0) {
    out.phi_form = 0;
    out.quadratic_form = 0;
    out.degenerate = true;
    return out;
  }
  out.phi_form = std::exp(-mu * phi(lambda / mu));
  out.quadratic_form = std::exp(-lambda * lambda / (2.0 * (mu + lambda / 3.0)));
  return out;
}

BoundPair chernoff_lower(const TailQuery& query) {
  query.validate();
  BoundPair out;
  const double mu = query.mu();
  double lambda = query.lambda;
  if (lambda > mu) {
    lambda = mu;
    out.clamped = true;
  }
  out.lambda_used = lambda;
  if (lambda == 0.0) return out;
  out.phi_form = std::exp(-mu * phi(-lambda / mu));
  out.quadratic_form = std::exp(-lambda * lambda / (2.0 * mu));
  return out;
}

LargeDeviationBound large_deviation(const TailQuery& query) {
  query.validate();
  const double k = query.k_factor;
  if (!(k > 0.0)) throw DomainError("K must be positive, got " + std::to_string(k));
  LargeDeviationBound out;
  const double mu = query.mu();
  out.value = std::exp(-k * mu * (std::log(k) - 1.0));
  out.vacuous = k <= std::exp(1.0);
  return out;
}

double binom_tail_exact(std::uint64_t m, double q, double t, TailSide side) {
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("q must lie in [0, 1], got " + std::to_string(q));
  if (std::isnan(t)) throw DomainError("threshold is NaN");
  const auto md = static_cast<double>(m);
  // Integer range [lo, hi] of the tail.
  double lo = 0;
  double hi = md;
  switch (side) {
    case TailSide::kGreater: lo = std::floor(t) + 1; break;
    case TailSide::kGreaterEqual: lo = std::ceil(t); break;
    case TailSide::kLess: hi = std::ceil(t) - 1; break;
    case TailSide::kLessEqual: hi = std::floor(t); break;
  }
  lo = std::max(lo, 0.0);
  hi = std::min(hi, md);
  if (lo > hi) return 0.0;
  if (lo == 0.0 && hi == md) return 1.0;
  const auto jlo = static_cast<std::uint64_t>(lo);
  const auto jhi = static_cast<std::uint64_t>(hi);
  if (q == 0.0) return jlo == 0 ? 1.0 : 0.0;
  if (q == 1.0) return jhi == m ? 1.0 : 0.0;

  const double lq = std::log(q);
  const double lp = std::log1p(-q);
  const double lgm = std::lgamma(md + 1);
  auto log_pmf = [&](std::uint64_t j) {
    const auto jd = static_cast<double>(j);
    return lgm - std::lgamma(jd + 1) - std::lgamma(md - jd + 1) + jd * lq + (md - jd) * lp;
  };
  // The pmf peaks at the mode; the largest term of the range is its nearest point.
  const double mode = std::floor((md + 1) * q);
  const auto peak = static_cast<std::uint64_t>(std::clamp(mode, lo, hi));
  const double top = log_pmf(peak);
  double sum = 0;
  double comp = 0;
  for (std::uint64_t j = jlo; j <= jhi; ++j) {
    const double term = std::exp(log_pmf(j) - top);
    const double next = sum + term;
    comp += std::fabs(sum) >= std::fabs(term) ? (sum - next) + term : (term - next) + sum;
    sum = next;
  }
  return std::min(1.0, std::exp(top) * (sum + comp));
}

namespace {

std::uint64_t checked_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max())
      throw DomainError("C(" + std::to_string(n) + ", " + std::to_string(k) + ") overflows 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace

SizeFormula eg_size_formula(std::uint64_t n, std::uint64_t k, std::uint64_t l) {
  if (l < 2) throw DomainError("l must be at least 2");
  if (l * k > n) throw DomainError("need lk <= n, got l = " + std::to_string(l) + ", k = " + std::to_string(k));
  SizeFormula out;
  out.first = checked_binomial(l * (k + 1) - 1, l);
  out.second = checked_binomial(n, l) - checked_binomial(n - k, l);
  if (out.first > out.second) {
    out.value = out.first;
    out.branch = SizeBranch::kFirst;
  } else if (out.second > out.first) {
    out.value = out.second;
    out.branch = SizeBranch::kSecond;
  } else {
    out.value = out.first;
    out.branch = SizeBranch::kTie;
  }
  return out;
}

P3Moments p3_moments(std::uint64_t n, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p must lie in [0, 1], got " + std::to_string(p));
  P3Moments out;
  if (n < 3 || p == 0.0) return out;
  const auto nd = static_cast<double>(n);
  auto log_choose = [](double a, double b) { return std::lgamma(a + 1) - std::lgamma(b + 1) - std::lgamma(a - b + 1); };
  const double lq = std::log1p(-p);  // −inf at p = 1
  auto power_q = [&](double exponent) { return exponent == 0.0 ? 0.0 : exponent * lq; };
  const double log_mean = std::log(3.0) + log_choose(nd, 3) + 2 * std::log(p) + power_q(3 * nd - 8);
  out.mean = std::exp(log_mean);
  out.second_moment = out.mean;
  if (n >= 6) {
    const double log_pair =
        std::log(9.0) + log_choose(nd, 3) + log_choose(nd - 3, 3) + 4 * std::log(p) + power_q(6 * nd - 25);
    out.second_moment += std::exp(log_pair);
    if (out.mean > 0) out.ratio = std::exp(std::log(out.second_moment) - 2 * log_mean);
  } else if (out.mean > 0) {
    out.ratio = out.second_moment / (out.mean * out.mean);
  }
  return out;
}

}  // namespace egm
