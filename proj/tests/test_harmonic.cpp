#include <doctest.h>

#include <random>

#include "kohn/harmonic.hpp"
#include "kohn/linalg.hpp"
#include "kohn/operators.hpp"
#include "kohn/spectrum.hpp"

using namespace kohn;

TEST_CASE("exact linear algebra") {
  ExactMatrix a(2, 3);
  a(0, 0) = 1; a(0, 1) = 2; a(0, 2) = 3;
  a(1, 0) = 2; a(1, 1) = 4; a(1, 2) = 6;
  CHECK(rank(a) == 1);
  const auto ker = kernel_basis(a);
  CHECK(ker.size() == 2);
  for (const auto& v : ker) CHECK((v[0] + 2 * v[1] + 3 * v[2]).is_zero());
  ExactMatrix b(2, 2);
  b(0, 0) = 2; b(0, 1) = 1; b(1, 0) = 1; b(1, 1) = 3;
  const auto x = solve_unique(b, {ExactScalar(3), ExactScalar(5)});
  CHECK(x[0] == ExactScalar(Rational(4, 5)));
  CHECK(x[1] == ExactScalar(Rational(7, 5)));
  CHECK_THROWS_AS(solve_unique(a, {ExactScalar(1), ExactScalar(0)}), std::logic_error);
}

TEST_CASE("harmonic_basis examples") {
  const auto anti = harmonic_basis(2, {0, 1});
  REQUIRE(anti.elements.size() == 2);
  const auto b11 = harmonic_basis(2, {1, 1});
  CHECK(b11.elements.size() == 3);
  for (const auto& e : b11.elements) CHECK(ambient_laplacian(e).is_zero());
  CHECK(harmonic_basis(2, {2, 1}).elements.size() == 4);
}

TEST_CASE("orthonormalize examples") {
  const auto anti = orthonormalize(harmonic_basis(2, {0, 1}));
  REQUIRE(anti.squared_norms.size() == 2);
  CHECK(anti.squared_norms[0] == Rational(1, 2));
  CHECK(anti.squared_norms[1] == Rational(1, 2));
  const auto single = orthonormalize(harmonic_basis(2, {0, 0}));
  REQUIRE(single.elements.size() == 1);
  CHECK(single.squared_norms[0] == 1);
  const auto b11 = orthonormalize(harmonic_basis(2, {1, 1}));
  for (std::size_t i = 0; i < b11.elements.size(); ++i) {
    for (std::size_t j = 0; j < b11.elements.size(); ++j) {
      const ExactScalar ip = sphere_inner_product(b11.elements[i], b11.elements[j]);
      if (i == j) {
        CHECK(ip == ExactScalar(b11.squared_norms[i]));
      } else {
        CHECK(ip.is_zero());
      }
    }
  }
}

TEST_CASE("verify_eigen_identities examples") {
  const auto small = verify_eigen_identities(2, 3);
  CHECK(small.passed());
  CHECK(small.cells.size() == 10);
  const auto tiny = verify_eigen_identities(2, 1);
  CHECK(tiny.passed());
  CHECK(tiny.orthogonality_failures.empty());
  const auto three = verify_eigen_identities(3, 2);
  CHECK(three.passed());
  for (const auto& c : three.cells) {
    if (c.bidegree == Bidegree{1, 1}) CHECK(c.kernel_rank == 8);
  }
}

TEST_CASE("property: rank-nullity and dimension sums") {
  for (int n : {2, 3, 4}) {
    const auto rep = verify_eigen_identities(n, n == 4 ? 4 : 5);
    CHECK(rep.passed());
    for (const auto& c : rep.cells) {
      CHECK(c.kernel_rank + c.image_rank == c.monomial_dimension);
      CHECK(Integer(static_cast<unsigned long>(c.kernel_rank)) == multiplicity(n, c.bidegree));
      CHECK(c.boxb_eigenvalue == boxb_eigenvalue(n, c.bidegree));
    }
    for (const auto& d : rep.degrees) CHECK(d.ok);
  }
}

TEST_CASE("property: closed-form Fischer decomposition agrees with elimination") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 3;
    const Polynomial f = random_polynomial(n, 5, 6, rng);
    for (const auto& [d, part] : bidegree_split(f)) {
      const auto closed = fischer_decompose(part, d);
      const auto solved = fischer_decompose_by_elimination(part, d);
      REQUIRE(closed.size() == solved.size());
      for (std::size_t m = 0; m < closed.size(); ++m) CHECK(closed[m] == solved[m]);
    }
  }
}
