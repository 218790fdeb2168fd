// Independent reference computations used to cross-check the library.
#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "kohn/polynomial.hpp"
#include "kohn/scalar.hpp"

namespace kohn::oracle {

// (|z_1|^2, ..., |z_n|^2) is uniform on the standard simplex, so the sphere
// integral of |z^alpha|^2 is (n-1)! times the simplex integral of t^alpha.
// The simplex integral is done one coordinate at a time: integrating
// t^a (L - t)^b over [0, L] after binomial expansion of (L - t)^b leaves
// L^{a+b+1} times an alternating sum.
inline Rational simplex_moment(const Multiindex& alpha) {
  const int n = alpha.size();
  Rational total = 1;
  long b = alpha[n - 1];
  for (int i = 0; i < n - 1; ++i) {
    const long a = alpha[i];
    Rational step = 0;
    for (long j = 0; j <= b; ++j) {
      Rational term(binomial(b, j), a + j + 1);
      term.canonicalize();
      step += (j % 2 == 0) ? term : Rational(-term);
    }
    total *= step;
    b = a + b + 1;
  }
  return total * Rational(factorial(static_cast<unsigned long>(n - 1)));
}

// min over p+q = k, q >= 1 of 2q(p+n-1), by enumeration.
inline Rational brute_lambda_min(int n, int k) {
  Rational best = -1;
  for (int q = 1; q <= k; ++q) {
    const Rational v = 2 * q * (k - q + n - 1);
    if (best < 0 || v < best) best = v;
  }
  return best;
}

// Composite Simpson rule on [a, b] with an even number of panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// dim H_{p,q} by counting: monomials of bidegree (p,q) minus those of (p-1,q-1).
inline long dimension_by_count(int n, int p, int q) {
  auto count = [n](int d) -> long { return d < 0 ? 0 : binomial(d + n - 1, n - 1).get_si(); };
  return count(p) * count(q) - count(p - 1) * count(q - 1);
}

// Direct float sum of the Schatten terms over an arbitrary rectangle.
inline double schatten_block(int n, double r, long p0, long p1, long q0, long q1) {
  double total = 0.0;
  for (long q = q0; q <= q1; ++q) {
    for (long p = p0; p <= p1; ++p) {
      double m = static_cast<double>(n + p + q - 1);
      for (int i = 1; i <= n - 2; ++i) m *= static_cast<double>((p + i) * (q + i));
      double fact = 1.0;
      for (int i = 2; i <= n - 1; ++i) fact *= i;
      for (int i = 2; i <= n - 2; ++i) fact *= i;
      if (p == 0 && q == 0) continue;
      total += (m / fact) * std::pow(2.0 * q * (p + n - 1), -r);
    }
  }
  return total;
}

}  // namespace kohn::oracle
