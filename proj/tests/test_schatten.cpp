#include <doctest.h>

#include <cmath>
#include <limits>

#include "kohn/errors.hpp"
#include "kohn/schatten.hpp"
#include "oracles.hpp"

using namespace kohn;

TEST_CASE("partial sums") {
  const auto a = partial_sum(2, Rational(3), 0, 1);
  REQUIRE(a.is_exact());
  CHECK(*a.exact == Rational(1, 4));
  const auto b = partial_sum(2, Rational(3), 1, 1);
  REQUIRE(b.is_exact());
  CHECK(*b.exact == Rational(19, 64));
  CHECK(a.approx == 0.25);
  CHECK(partial_sum_float(2, 2.0, 400, 400) > partial_sum_float(2, 2.0, 200, 200));
  const auto frac = partial_sum(3, Rational(7, 2), 10, 10);
  CHECK_FALSE(frac.is_exact());
  CHECK(frac.approx == doctest::Approx(oracle::schatten_block(3, 3.5, 0, 10, 1, 10)).epsilon(1e-13));
  CHECK(to_double(partial_sum_exact(3, 4, 12, 9)) ==
        doctest::Approx(oracle::schatten_block(3, 4.0, 0, 12, 1, 9)).epsilon(1e-13));
}

TEST_CASE("verdicts") {
  CHECK(verdict(2, Rational(3)) == Verdict::Converges);
  CHECK(verdict(2, Rational(2)) == Verdict::Diverges);
  CHECK(verdict(5, Rational(5)) == Verdict::Diverges);
  CHECK(verdict(3, Rational(301, 100)) == Verdict::Converges);
  CHECK(to_string(Verdict::Converges) == "Converges");
  CHECK_THROWS_AS(verdict(2, Rational(1, 2)), DomainError);
}

TEST_CASE("tail bounds") {
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(tail_upper_bound(2, Rational(2), 10, 10) == inf);
  CHECK(tail_upper_bound(3, Rational(5, 2), 10, 10) == inf);
  double prev = inf;
  const double first = tail_upper_bound(2, Rational(4), 10, 10);
  for (long c : {10L, 40L, 160L, 640L, 2560L}) {
    const double t = tail_upper_bound(2, Rational(4), c, c);
    CHECK(t < prev);
    prev = t;
  }
  CHECK(prev < first * 1e-4);
}

TEST_CASE("tail bounds bracket the brute-force tail") {
  for (int n : {2, 3}) {
    const double r = n + 1.0;
    const long P = 50, Q = 50, far = n == 2 ? 5000 : 2000;
    const double head = oracle::schatten_block(n, r, 0, P, 1, Q);
    const double big = oracle::schatten_block(n, r, 0, far, 1, far);
    const double tail = big - head;
    const double upper = tail_upper_bound(n, Rational(n + 1), P, Q);
    CHECK(upper >= tail);
    CHECK(upper < 10 * tail);
    CHECK(tail_lower_bound(n, Rational(n + 1), P, Q) <= tail);
  }
}

TEST_CASE("property: brackets shrink and contain later partial sums") {
  for (int n : {2, 3}) {
    for (const Rational& r : {Rational(n + 1), Rational(2 * n + 1, 2)}) {
      double prev_upper = std::numeric_limits<double>::infinity();
      double prev_partial = 0.0;
      for (long c : {8L, 16L, 32L, 64L, 128L, 256L}) {
        const double part = partial_sum(n, r, c, c).approx;
        const double upper = part + tail_upper_bound(n, r, c, c);
        CHECK(part >= prev_partial);
        CHECK(upper <= prev_upper * (1 + 1e-12));
        CHECK(part <= prev_upper * (1 + 1e-12));
        prev_partial = part;
        prev_upper = upper;
      }
      CHECK(partial_sum_float(n, to_double(r), 2048, 2048) <= prev_upper * (1 + 1e-12));
    }
  }
}

TEST_CASE("lower bound sum, integral and divergence witness") {
  for (int n : {2, 3, 4}) {
    const double r = n;
    for (long c : {n + 5L, 50L, 200L}) {
      const double direct = lower_bound_sum(n, Rational(n), c, c);
      const double integral = lower_bound_integral(n, r, c, c);
      CHECK(integral <= direct);
      CHECK(integral > 0.5 * direct);
    }
    CHECK(lower_bound_sum(n, Rational(n + 1), 60, 60) <= partial_sum_float(n, n + 1.0, 60, 60));
  }
  CHECK_THROWS_AS(lower_bound_sum(3, Rational(3), 2, 10), DomainError);
  const auto w = divergence_witness(2, Rational(2), 100, 3.0, 200);
  CHECK(w.certified);
  CHECK(w.certified_value >= w.target);
  const auto conv = divergence_witness(2, Rational(3), 100, 3.0, 30);
  CHECK_FALSE(conv.certified);
}

TEST_CASE("closed-form lower integral matches quadrature") {
  for (int n : {2, 3}) {
    for (double r : {double(n), n + 0.5, n + 2.0}) {
      const double P = 40, Q = 30;
      double fact = 1.0;
      for (int i = 2; i <= n - 1; ++i) fact *= i;
      for (int i = 2; i <= n - 2; ++i) fact *= i;
      auto g = [&](double p, double q) {
        return (p + q) * std::pow(p, n - 2) * std::pow(q, n - 2) / (std::pow(4 * p * q, r) * fact);
      };
      const double numeric = oracle::simpson(
          [&](double p) { return oracle::simpson([&](double q) { return g(p, q); }, 1.0, Q + 1, 400); }, n, P + 1, 400);
      CHECK(lower_bound_integral(n, r, P, Q) == doctest::Approx(numeric).epsilon(1e-6));
    }
  }
}

TEST_CASE("termwise sandwich") {
  for (int n : {2, 3}) {
    const auto res = termwise_sandwich(n, n + 1, 20);
    CHECK(res.passed());
    CHECK(res.cells_checked > 0);
  }
  CHECK(exact_term(2, 3, 1, 1) == Rational(3, 64));
  CHECK(green_eigenvalue(2, 0, 1) == Rational(1, 2));
}

TEST_CASE("convergence bracket") {
  const auto b = convergence_bracket(2, Rational(3), 50, 2000, 0.05);
  CHECK(b.relative_width <= 0.05);
  const double reference = partial_sum_float(2, 3.0, 2000, 2000);
  CHECK(b.partial <= reference);
  CHECK(b.partial + b.tail_upper >= reference);
}

TEST_CASE("approximation formula") {
  CHECK(approx_formula(2, 3.0) == doctest::Approx(67.0 / 256.0).epsilon(1e-14));
  CHECK(approx_formula(2, 60.0) / (2.0 / std::pow(2.0, 60.0)) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(approx_pole_residue(2) == 0.125);
  for (int n : {2, 3, 4}) {
    const double L = approx_pole_residue(n);
    const double near = approx_formula(n, n + 1e-6) * 1e-6;
    CHECK(near == doctest::Approx(L).epsilon(1e-3));
    CHECK(approx_formula(n, n + 0.001) > approx_formula(n, n + 0.01));
  }
  CHECK_THROWS_AS(approx_formula(3, 3.0), DomainError);
}

TEST_CASE("Schatten report") {
  const auto rep = schatten_report(2, Rational(3), 20, 20);
  CHECK(rep.verdict == Verdict::Converges);
  CHECK(rep.partial_sum.is_exact());
  REQUIRE(rep.approx_value.has_value());
  CHECK(rep.tail_lower <= rep.tail_upper);
  const auto div = schatten_report(3, Rational(2), 20, 20);
  CHECK(div.verdict == Verdict::Diverges);
  CHECK(std::isinf(div.tail_upper));
  CHECK_FALSE(div.approx_value.has_value());
  const auto big = schatten_report(2, Rational(3), 400, 400);
  CHECK_FALSE(big.partial_sum.is_exact());
  const auto series = partial_sum_series(2, Rational(3), 100);
  REQUIRE(series.size() >= 2);
  CHECK(series.back().cutoff == 100);
  for (std::size_t i = 1; i < series.size(); ++i) CHECK(series[i].partial_sum >= series[i - 1].partial_sum);
}
