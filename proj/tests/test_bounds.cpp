#include <doctest.h>

#include <cmath>

#include "egm/bounds.hpp"
#include "egm/error.hpp"
#include "oracles.hpp"

using namespace egm;

namespace {

/// Σ_{j in [lo, hi]} C(m,j) q^j (1−q)^{m−j} by direct multiplication.
double direct_tail(std::uint64_t m, double q, std::uint64_t lo, std::uint64_t hi) {
  double total = 0;
  for (std::uint64_t j = lo; j <= hi && j <= m; ++j) {
    double term = 1;
    for (std::uint64_t i = 0; i < j; ++i) term *= static_cast<double>(m - i) / static_cast<double>(i + 1) * q;
    term *= std::pow(1 - q, static_cast<double>(m - j));
    total += term;
  }
  return total;
}

}  // namespace

TEST_CASE("phi values") {
  CHECK(phi(-1) == 1.0);
  CHECK(phi(0) == 0.0);
  CHECK(phi(1) == doctest::Approx(2 * std::log(2.0) - 1).epsilon(1e-12));
  CHECK(phi(1e-5) == doctest::Approx(0.5e-10).epsilon(1e-4));
  CHECK_THROWS_AS(phi(-1.5), DomainError);
}

TEST_CASE("phi is convex with a flat minimum at zero") {
  const double h = 1e-4;
  CHECK(std::abs((phi(h) - phi(-h)) / (2 * h)) < 1e-6);
  for (double x = -0.99; x < 5; x += 0.01) CHECK(phi(x - 0.005) + phi(x + 0.005) >= 2 * phi(x) - 1e-15);
}

TEST_CASE("chernoff upper examples") {
  const BoundPair b = chernoff_upper({100, 0.5, 10, 0});
  CHECK(b.quadratic_form == doctest::Approx(std::exp(-100.0 / (2 * (50 + 10.0 / 3)))).epsilon(1e-12));
  CHECK(b.phi_form <= b.quadratic_form);
  CHECK(b.quadratic_form >= binom_tail_exact(100, 0.5, 60, TailSide::kGreater));
  const BoundPair z = chernoff_upper({100, 0.5, 0, 0});
  CHECK(z.phi_form == 1.0);
  CHECK(z.quadratic_form == 1.0);
  const BoundPair c = chernoff_upper({1000, 0.01, 30, 0});
  const double exact = direct_tail(1000, 0.01, 41, 1000);
  CHECK(c.phi_form <= c.quadratic_form);
  CHECK(c.phi_form >= exact);
  const BoundPair d = chernoff_upper({100, 0.0, 3, 0});
  CHECK(d.degenerate);
  CHECK(d.phi_form == 0.0);
  CHECK_THROWS_AS(chernoff_upper({0, 0.5, 1, 0}), DomainError);
  CHECK_THROWS_AS(chernoff_upper({10, 1.5, 1, 0}), DomainError);
  CHECK_THROWS_AS(chernoff_upper({10, 0.5, -1, 0}), DomainError);
}

TEST_CASE("chernoff lower examples") {
  const BoundPair z = chernoff_lower({100, 0.5, 0, 0});
  CHECK(z.phi_form == 1.0);
  CHECK(z.quadratic_form == 1.0);
  const BoundPair b = chernoff_lower({100, 0.5, 10, 0});
  CHECK(b.quadratic_form == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(b.phi_form >= binom_tail_exact(100, 0.5, 40, TailSide::kLess));
  const BoundPair full = chernoff_lower({100, 0.5, 50, 0});
  CHECK(full.phi_form == doctest::Approx(std::exp(-50.0)).epsilon(1e-12));
  const BoundPair clamp = chernoff_lower({100, 0.5, 70, 0});
  CHECK(clamp.clamped);
  CHECK(clamp.lambda_used == 50.0);
}

TEST_CASE("large deviation examples") {
  const auto e = large_deviation({100, 0.1, 0, std::exp(1.0)});
  CHECK(e.vacuous);
  CHECK(e.value == doctest::Approx(1.0));
  const auto b = large_deviation({100, 0.1, 0, 3});
  CHECK_FALSE(b.vacuous);
  CHECK(b.value == doctest::Approx(std::exp(-30 * std::log(3 / std::exp(1.0)))).epsilon(1e-12));
  CHECK(b.value == doctest::Approx(0.0518).epsilon(5e-3));
  CHECK(b.value >= direct_tail(100, 0.1, 31, 100));
  CHECK_THROWS_AS(large_deviation({100, 0.1, 0, 0}), DomainError);
}

TEST_CASE("exact binomial tails") {
  CHECK(binom_tail_exact(10, 0.3, 0, TailSide::kGreaterEqual) == 1.0);
  CHECK(binom_tail_exact(4, 0.5, 2, TailSide::kGreater) == doctest::Approx(5.0 / 16).epsilon(1e-14));
  CHECK(binom_tail_exact(10, 0.3, 1, TailSide::kLess) == doctest::Approx(std::pow(0.7, 10)).epsilon(1e-13));
  CHECK(binom_tail_exact(10, 0.3, 10, TailSide::kLessEqual) == 1.0);
  CHECK(binom_tail_exact(10, 0.3, 10, TailSide::kGreater) == 0.0);
  for (std::uint64_t m : {7U, 40U, 200U})
    for (double q : {0.02, 0.37, 0.9})
      for (std::uint64_t t = 0; t <= m; t += 3) {
        const double ge = binom_tail_exact(m, q, static_cast<double>(t), TailSide::kGreaterEqual);
        CHECK(ge == doctest::Approx(direct_tail(m, q, t, m)).epsilon(1e-10));
        const double lt = binom_tail_exact(m, q, static_cast<double>(t), TailSide::kLess);
        CHECK(ge + lt == doctest::Approx(1.0).epsilon(1e-12));
      }
}

TEST_CASE("size formula examples") {
  const SizeFormula a = eg_size_formula(6, 1);
  CHECK(a.value == 5);
  CHECK(a.first == 3);
  CHECK(a.second == 5);
  CHECK(a.branch == SizeBranch::kSecond);
  const SizeFormula b = eg_size_formula(7, 2);
  CHECK(b.first == 10);
  CHECK(b.second == 11);
  CHECK(b.value == 11);
  const SizeFormula c = eg_size_formula(5, 2);
  CHECK(c.first == 10);
  CHECK(c.second == 7);
  CHECK(c.value == 10);
  CHECK(c.branch == SizeBranch::kFirst);
  CHECK(eg_size_formula(4, 1).branch == SizeBranch::kTie);
  CHECK(eg_size_formula(9, 2, 3).first == oracle::choose(8, 3));
  CHECK_THROWS_AS(eg_size_formula(5, 3), DomainError);
  CHECK_THROWS_AS(eg_size_formula(5, 1, 1), DomainError);
}

TEST_CASE("isolated P3 moments") {
  CHECK(p3_moments(10, 0).mean == 0.0);
  CHECK_FALSE(p3_moments(10, 0).ratio.has_value());
  const P3Moments m = p3_moments(10, 0.1);
  CHECK(m.mean == doctest::Approx(3 * 120 * 0.01 * std::pow(0.9, 22)).epsilon(1e-12));
  const double second = m.mean + 9.0 * 120 * 35 * std::pow(0.1, 4) * std::pow(0.9, 35);
  CHECK(m.second_moment == doctest::Approx(second).epsilon(1e-12));
  CHECK(p3_moments(5, 0.3).second_moment == doctest::Approx(p3_moments(5, 0.3).mean));
  const P3Moments big = p3_moments(1000000, 1e-6);
  REQUIRE(big.ratio.has_value());
  CHECK(std::abs(*big.ratio - 1) < 1e-3);
}
