// Sobolev gain of the complex Green operator: ||G f||_{s+1} <= C_n ||f||_s,
// with C_n^2 the supremum of (1+mu(k)) / lambda_min(k)^2 over k >= 1.
#pragma once

#include <optional>
#include <vector>

#include "kohn/polynomial.hpp"
#include "kohn/scalar.hpp"

namespace kohn {

/// (1+k(k+2n-2))^s / (2(k+n-2))^2; exact for integer s.
MixedValue sobolev_ratio(int n, const Rational& s, long k);
Rational sobolev_ratio_exact(int n, long s, long k);
double sobolev_ratio_float(int n, double s, long k);

/// The ratio sequence is bounded in k iff s <= 1.
bool is_bounded(int n, const Rational& s);

/// The index n^2 - 3n + 1 (n >= 3) or 1 (n = 2) where the s = 1 sequence peaks.
long critical_index(int n);

/// n(n-2) / (4(n^2-2n-1)), the value at the critical index for n >= 3.
/// Both display constants are 1 for n = 2, where C_2 = 1 is stated separately.
Rational proof_display_constant(int n);
/// n(n-2) / (4(n-1)^2), the square of sqrt(n(n-2))/(2(n-1)).
Rational theorem_display_constant(int n);

/// Smallest k0 >= 1 from which ratio(n,1,k) > ratio(n,1,k+1) holds for every
/// k >= k0. With u = k+n-2 and c = n^2-2n-1, the difference
/// ratio(k) - ratio(k+1) has the sign of 2u(u+1-c) - c, a quadratic in u
/// increasing past (c-1)/2; k0 is read off from that.
long decreasing_from(int n);

struct BestConstantReport {
  int n = 0;
  long scan_max = 0;
  Rational c_squared;
  long argmax_k = 0;
  std::vector<Bidegree> equality_bidegrees;
  bool matches_theorem_display = false;
  bool matches_proof_display = false;
  bool tail_certified = false;  // scan_max >= decreasing_from(n) and argmax before it
  long decreasing_from_k = 0;
};

/// Minimum admissible scan length: max(1, n^2-3n+1) + n^2.
long minimum_scan(int n);

/// Exact scan of ratio(n, 1, k) for 1 <= k <= scan_max.
BestConstantReport best_constant(int n, long scan_max);

struct GainCertificate {
  int n = 0;
  long s = 0;
  Rational lhs;          // ||G f||_{s+1}^2
  Rational rhs;          // c_squared * ||f||_s^2
  Rational c_squared;
  bool holds = false;    // lhs <= rhs
  bool equality = false; // lhs == rhs
  bool in_equality_eigenspace = false;
  std::optional<Rational> ratio;  // lhs / rhs when rhs > 0
};

/// Exact comparison of ||G f||_{s+1}^2 against C_n^2 ||f||_s^2 for integer s >= 0.
GainCertificate sobolev_gain_certificate(int n, const Polynomial& f, long s);

}  // namespace kohn
