#include <doctest.h>

#include <cmath>
#include <random>

#include "kohn/errors.hpp"
#include "kohn/harmonic.hpp"
#include "kohn/sobolev.hpp"

using namespace kohn;

TEST_CASE("ratio examples") {
  CHECK(sobolev_ratio_exact(2, 1, 1) == 1);
  CHECK(sobolev_ratio_exact(3, 1, 1) == Rational(3, 8));
  CHECK(sobolev_ratio_exact(2, 1, 100000) > Rational(1, 4));
  CHECK(to_double(sobolev_ratio_exact(2, 1, 100000)) == doctest::Approx(0.25).epsilon(1e-4));
  const auto frac = sobolev_ratio(3, Rational(1, 2), 4);
  CHECK_FALSE(frac.is_exact());
  CHECK(frac.approx == doctest::Approx(std::sqrt(33.0) / 100.0).epsilon(1e-14));
  CHECK(sobolev_ratio(3, Rational(2), 4).is_exact());
  CHECK_THROWS_AS(sobolev_ratio_exact(3, 1, 0), DomainError);
}

TEST_CASE("boundedness") {
  CHECK(is_bounded(2, Rational(1)));
  CHECK_FALSE(is_bounded(4, Rational(101, 100)));
  CHECK(is_bounded(3, Rational(0)));
}

TEST_CASE("best constants") {
  const auto two = best_constant(2, minimum_scan(2));
  CHECK(two.c_squared == 1);
  CHECK(two.argmax_k == 1);
  CHECK(two.equality_bidegrees == std::vector<Bidegree>{{0, 1}});
  CHECK(two.matches_theorem_display);
  CHECK(two.matches_proof_display);
  const auto three = best_constant(3, minimum_scan(3));
  CHECK(three.c_squared == Rational(3, 8));
  CHECK(three.argmax_k == 1);
  CHECK(three.matches_proof_display);
  CHECK_FALSE(three.matches_theorem_display);
  CHECK(theorem_display_constant(3) == Rational(3, 16));
  const auto four = best_constant(4, minimum_scan(4));
  CHECK(four.c_squared == Rational(2, 7));
  CHECK(four.argmax_k == 5);
  CHECK(four.equality_bidegrees == std::vector<Bidegree>{{4, 1}});
  CHECK_THROWS_AS(best_constant(4, 3), DomainError);
}

TEST_CASE("gain certificates") {
  const Polynomial zb1 = Polynomial::zbar(2, 0);
  const auto eq = sobolev_gain_certificate(2, zb1, 0);
  CHECK(eq.lhs == Rational(1, 2));
  CHECK(eq.rhs == Rational(1, 2));
  CHECK(eq.equality);
  CHECK(eq.in_equality_eigenspace);
  const auto kernel = sobolev_gain_certificate(2, Polynomial::z(2, 0), 0);
  CHECK(sgn(kernel.lhs) == 0);
  CHECK(kernel.rhs == Rational(1, 2));
  CHECK(kernel.holds);
  CHECK_FALSE(kernel.equality);
  const auto n3 = sobolev_gain_certificate(3, Polynomial::zbar(3, 1), 0);
  CHECK(n3.equality);
  const auto n4 = sobolev_gain_certificate(4, Polynomial::zbar(4, 2), 0);
  CHECK(n4.holds);
  CHECK_FALSE(n4.equality);
  REQUIRE(n4.ratio.has_value());
  CHECK(*n4.ratio == Rational(7, 9));  // (2/9) / (2/7)
  CHECK_THROWS_AS(sobolev_gain_certificate(3, zb1, 0), DimensionError);
}

TEST_CASE("property: critical index identity") {
  for (long n = 3; n <= 50; ++n) {
    const Integer lhs = Integer(n * n - 3 * n + 1) * (n * n - n - 1) + 1;
    const Integer rhs = Integer(n) * (n - 2) * (n * n - 2 * n - 1);
    CHECK(lhs == rhs);
    Rational expected(n * (n - 2), 4 * (n * n - 2 * n - 1));
    expected.canonicalize();
    CHECK(sobolev_ratio_exact(static_cast<int>(n), 1, critical_index(static_cast<int>(n))) == expected);
    CHECK(proof_display_constant(static_cast<int>(n)) == expected);
  }
}

TEST_CASE("property: the s = 1 sequence peaks at the critical index") {
  for (int n = 2; n <= 12; ++n) {
    const long k_star = critical_index(n);
    CHECK(decreasing_from(n) <= k_star);
    const Rational peak = sobolev_ratio_exact(n, 1, k_star);
    for (long k = 1; k <= k_star + 3 * n * n; ++k) {
      if (k != k_star) CHECK(sobolev_ratio_exact(n, 1, k) < peak);
      if (k >= k_star) CHECK(sobolev_ratio_exact(n, 1, k) > sobolev_ratio_exact(n, 1, k + 1));
    }
    const auto rep = best_constant(n, minimum_scan(n));
    CHECK(rep.tail_certified);
    CHECK(rep.c_squared == peak);
  }
}

TEST_CASE("property: s > 1 grows like k^(2s-2)") {
  for (int n : {2, 3, 5}) {
    for (double s : {1.5, 2.0, 3.0}) {
      const double a = sobolev_ratio_float(n, s, 1000000);
      const double b = sobolev_ratio_float(n, s, 2000000);
      CHECK(std::log2(b / a) == doctest::Approx(2 * s - 2).epsilon(1e-3));
      CHECK(b > 100 * sobolev_ratio_float(n, s, 1));
    }
    CHECK(sobolev_ratio_float(n, 3.0, 1000) == doctest::Approx(to_double(sobolev_ratio_exact(n, 3, 1000))).epsilon(1e-12));
  }
}

TEST_CASE("property: gain inequality holds on random input") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 4;
    const Polynomial f = random_polynomial(n, 6, 4, rng);
    for (long s : {0L, 1L, 2L}) {
      const auto cert = sobolev_gain_certificate(n, f, s);
      CHECK(cert.holds);
      CHECK(cert.lhs <= cert.rhs);
    }
  }
}
