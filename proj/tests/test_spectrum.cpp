#include <doctest.h>

#include "kohn/errors.hpp"
#include "kohn/spectrum.hpp"
#include "oracles.hpp"

using namespace kohn;

TEST_CASE("boxb eigenvalues") {
  CHECK(boxb_eigenvalue(2, {0, 1}) == 2);
  CHECK(boxb_eigenvalue(2, {3, 0}) == 0);
  CHECK(boxb_eigenvalue(3, {2, 2}) == 16);
  CHECK_THROWS_AS(boxb_eigenvalue(1, {0, 1}), DomainError);
}

TEST_CASE("multiplicities") {
  CHECK(multiplicity(2, {1, 1}) == 3);
  CHECK(multiplicity(2, {0, 1}) == 2);
  CHECK(multiplicity(3, {2, 1}) == 15);
  CHECK(oracle::dimension_by_count(3, 2, 1) == 15);
  CHECK(multiplicity(3, {1, 1}) == 8);
  CHECK(multiplicity(5, {0, 0}) == 1);
}

TEST_CASE("Laplace-Beltrami eigenvalues and lambda_min") {
  CHECK(laplace_beltrami_eigenvalue(2, 1) == 3);
  CHECK(laplace_beltrami_eigenvalue(2, 0) == 0);
  CHECK(laplace_beltrami_eigenvalue(4, 3) == 27);
  CHECK(lambda_min(2, 1) == 2);
  CHECK(lambda_min(3, 1) == 4);
  CHECK(lambda_min(2, 5) == 10);
  CHECK_THROWS_AS(lambda_min(2, 0), DomainError);
}

TEST_CASE("aggregate_spectrum examples") {
  const auto two = aggregate_spectrum(2, Rational(4));
  REQUIRE(two.entries.size() == 2);
  CHECK(two.entries[0].eigenvalue == 2);
  CHECK(two.entries[0].multiplicity == 2);
  CHECK(two.entries[0].contributors == std::vector<Bidegree>{{0, 1}});
  CHECK(two.entries[1].eigenvalue == 4);
  CHECK(two.entries[1].multiplicity == 6);
  CHECK(two.entries[1].contributors.size() == 2);
  CHECK(aggregate_spectrum(2, Rational(1)).entries.empty());
  const auto three = aggregate_spectrum(3, Rational(4));
  REQUIRE(three.entries.size() == 1);
  CHECK(three.entries[0].multiplicity == 3);
  CHECK(three.entries[0].contributors == std::vector<Bidegree>{{0, 1}});
}

TEST_CASE("property: eigenvalue vanishes exactly on q = 0") {
  for (int n = 2; n <= 6; ++n)
    for (int p = 0; p <= 12; ++p)
      for (int q = 0; q <= 12; ++q) CHECK((sgn(boxb_eigenvalue(n, {p, q})) == 0) == (q == 0));
}

TEST_CASE("property: multiplicity formulas agree with each other and with counting") {
  for (int n = 2; n <= 6; ++n) {
    for (int p = 0; p <= 12; ++p) {
      for (int q = 0; q <= 12; ++q) {
        const Integer m = multiplicity(n, {p, q});
        CHECK(m >= 1);
        CHECK(m == multiplicity_binomial(n, {p, q}));
        CHECK(m == multiplicity(n, {q, p}));
        CHECK(m == oracle::dimension_by_count(n, p, q));
      }
    }
  }
}

TEST_CASE("property: degree-k sums give the spherical harmonic dimension") {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 0; k <= 15; ++k) {
      Integer total = 0;
      for (int p = 0; p <= k; ++p) total += multiplicity(n, {p, k - p});
      CHECK(total == spherical_harmonic_dimension(n, k));
    }
  }
}

TEST_CASE("property: lambda_min matches enumeration") {
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k <= 30; ++k) CHECK(lambda_min(n, k) == oracle::brute_lambda_min(n, k));
}

TEST_CASE("property: aggregation is consistent under cutoff refinement") {
  for (int n = 2; n <= 4; ++n) {
    const auto coarse = aggregate_spectrum(n, Rational(40));
    const auto fine = aggregate_spectrum(n, Rational(97, 2));
    REQUIRE(coarse.entries.size() <= fine.entries.size());
    for (std::size_t i = 0; i < coarse.entries.size(); ++i) {
      CHECK(coarse.entries[i].eigenvalue == fine.entries[i].eigenvalue);
      CHECK(coarse.entries[i].multiplicity == fine.entries[i].multiplicity);
    }
    for (std::size_t i = 0; i < fine.entries.size(); ++i) {
      const auto& e = fine.entries[i];
      if (i > 0) CHECK(fine.entries[i - 1].eigenvalue < e.eigenvalue);
      Integer total = 0;
      for (auto d : e.contributors) {
        CHECK(boxb_eigenvalue(n, d) == e.eigenvalue);
        total += multiplicity(n, d);
      }
      CHECK(total == e.multiplicity);
    }
    const auto rows = spectrum_entries(n, Rational(97, 2));
    Integer all = 0;
    for (const auto& r : rows) all += r.multiplicity;
    Integer agg = 0;
    for (const auto& e : fine.entries) agg += e.multiplicity;
    CHECK(all == agg);
  }
}
