// Polynomials in z_1..z_n and their conjugates over the Gaussian rationals,
// viewed as functions on C^n and, by restriction, on the unit sphere.
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "kohn/scalar.hpp"

namespace kohn {

/// Exponent vector of length n.
class Multiindex {
 public:
  Multiindex() = default;
  explicit Multiindex(std::vector<int> entries);
  static Multiindex zero(int n) { return Multiindex(std::vector<int>(static_cast<std::size_t>(n), 0)); }
  static Multiindex unit(int n, int j);

  int size() const { return static_cast<int>(entries_.size()); }
  int degree() const { return degree_; }
  int operator[](int j) const { return entries_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& entries() const { return entries_; }

  Multiindex operator+(const Multiindex& other) const;
  /// Lowers entry j by one; entry must be positive.
  Multiindex decremented(int j) const;

  friend bool operator==(const Multiindex& a, const Multiindex& b) { return a.entries_ == b.entries_; }
  friend std::strong_ordering operator<=>(const Multiindex& a, const Multiindex& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
  int degree_ = 0;
};

/// All multiindices of length n and degree d, in descending lexicographic
/// order (z_1^d first).
std::vector<Multiindex> multiindices_of_degree(int n, int d);

struct Bidegree {
  int p = 0;
  int q = 0;

  int total() const { return p + q; }
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

std::string to_string(const Bidegree& d);

/// z^alpha zbar^beta. Ordered graded-lexicographically: total degree, then
/// alpha, then beta.
struct Monomial {
  Multiindex alpha;
  Multiindex beta;

  Bidegree bidegree() const { return {alpha.degree(), beta.degree()}; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, ExactScalar>;

  explicit Polynomial(int n);

  static Polynomial constant(int n, const ExactScalar& c);
  static Polynomial z(int n, int j);      // zero-based j
  static Polynomial zbar(int n, int j);   // zero-based j
  static Polynomial monomial(Multiindex alpha, Multiindex beta, const ExactScalar& c = ExactScalar(1));
  /// |z|^2 = sum_j z_j zbar_j; identically 1 on the sphere.
  static Polynomial radius_squared(int n);

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c to the coefficient of m, pruning a resulting zero.
  void add_term(const Monomial& m, const ExactScalar& c);
  ExactScalar coefficient(const Monomial& m) const;

  /// Nothing for the zero polynomial.
  bool is_bihomogeneous(Bidegree d) const;
  int max_total_degree() const;

  Polynomial conj() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const ExactScalar& c);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const ExactScalar& c) { return lhs *= c; }
  friend Polynomial operator*(const ExactScalar& c, Polynomial rhs) { return rhs *= c; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Human-readable form, e.g. "1/2 z1 zb1 - 1/2 z2 zb2".
  std::string to_string() const;

 private:
  void check_same_dimension(const Polynomial& other, const char* op) const;

  int n_;
  TermMap terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial multiply(const Polynomial& f, const Polynomial& g);
Polynomial power(const Polynomial& f, int exponent);

/// 4 * sum_j d^2 f / dz_j dzbar_j, termwise.
Polynomial ambient_laplacian(const Polynomial& f);

/// sum_j z_j d/dz_j; multiplies a term of bidegree (p,q) by p.
Polynomial holomorphic_euler(const Polynomial& f);
/// sum_j zbar_j d/dzbar_j; multiplies a term of bidegree (p,q) by q.
Polynomial antiholomorphic_euler(const Polynomial& f);

/// Partition of the terms of f by (|alpha|, |beta|). Zero parts are omitted.
std::map<Bidegree, Polynomial> bidegree_split(const Polynomial& f);

/// Integral of |z^alpha|^2 over the sphere S^{2n-1} against the normalized
/// surface measure: (n-1)! alpha! / (n-1+|alpha|)!.
Rational monomial_sphere_integral(const Multiindex& alpha);

/// <f, g> = integral of f * conj(g) over S^{2n-1}, normalized measure.
ExactScalar sphere_inner_product(const Polynomial& f, const Polynomial& g);
/// <f, f>, a nonnegative rational.
Rational sphere_norm_squared(const Polynomial& f);

/// Deterministic pseudo-random polynomial with up to `terms` monomials of
/// total degree <= max_degree and small Gaussian-integer/rational
/// coefficients. The output depends only on (n, max_degree, terms, rng
/// state), not on the standard library's distribution implementations.
Polynomial random_polynomial(int n, int max_degree, int terms, std::mt19937_64& rng);

}  // namespace kohn
