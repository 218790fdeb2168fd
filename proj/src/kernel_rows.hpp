// Per-row work shared by the serial and OpenMP kernels. Keeping a single
// definition is what makes the two backends agree bit for bit.
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "kohn/kernels.hpp"
#include "kohn/spectrum.hpp"

namespace kohn::kernels::detail {

// Row q of the Schatten sum, p running from P down to 0 (smallest terms first).
inline double schatten_row(int n, double r, long P, long q) {
  double sum = 0.0;
  double carry = 0.0;
  for (long p = P; p >= 0; --p) {
    const double term = schatten_term(n, r, p, q);
    const double t = sum + term;
    carry += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return sum + carry;
}

inline double lower_bound_row(int n, double r, long P, long q) {
  double sum = 0.0;
  double carry = 0.0;
  for (long p = P; p >= n; --p) {
    const double term = lower_bound_term(n, r, p, q);
    const double t = sum + term;
    carry += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return sum + carry;
}

inline Rational schatten_row_exact(int n, long r, long P, long q) {
  Rational row = 0;
  for (long p = 0; p <= P; ++p) {
    const Bidegree d{static_cast<int>(p), static_cast<int>(q)};
    row += Rational(multiplicity(n, d)) / pow(Rational(p + n - 1), r);
  }
  return row / pow(Rational(2 * q), r);
}

inline Rational ratio_value(int n, long s, long k) {
  const Rational one_plus_mu = 1 + Rational(k * (k + 2L * n - 2));
  const Rational lambda = 2 * (k + n - 2);
  return pow(one_plus_mu, s) / (lambda * lambda);
}

// Folds b into a: larger value wins, ties go to the smaller k.
inline void merge_argmax(RatioArgmax& a, const RatioArgmax& b) {
  if (b.occurrences == 0) return;
  if (a.occurrences == 0 || b.value > a.value) {
    a = b;
  } else if (b.value == a.value) {
    a.occurrences += b.occurrences;
    a.k = std::min(a.k, b.k);
  }
}

inline void observe(RatioArgmax& best, long k, Rational value) {
  if (best.occurrences == 0 || value > best.value) {
    best.k = k;
    best.value = std::move(value);
    best.occurrences = 1;
  } else if (value == best.value) {
    ++best.occurrences;
  }
}

}  // namespace kohn::kernels::detail
