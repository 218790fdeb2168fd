#include <cmath>
#include <cstdlib>
#include <string>

#include "kernel_rows.hpp"
#include "kohn/errors.hpp"

namespace kohn::kernels {

namespace {

// (n-1)!(n-2)! as a double; exact for every n this library accepts in float paths.
double factorial_pair(int n) {
  double out = 1.0;
  for (int i = 2; i <= n - 1; ++i) out *= i;
  for (int i = 2; i <= n - 2; ++i) out *= i;
  return out;
}

}  // namespace

double schatten_term(int n, double r, long p, long q) {
  double m = static_cast<double>(n + p + q - 1);
  for (int i = 1; i <= n - 2; ++i) m *= static_cast<double>(p + i) * static_cast<double>(q + i);
  m /= factorial_pair(n);
  const double lambda = 2.0 * static_cast<double>(q) * static_cast<double>(p + n - 1);
  return m * std::pow(lambda, -r);
}

double lower_bound_term(int n, double r, long p, long q) {
  const double pd = static_cast<double>(p);
  const double qd = static_cast<double>(q);
  double numerator = pd + qd;
  for (int i = 0; i < n - 2; ++i) numerator *= pd * qd;
  return numerator * std::pow(4.0 * pd * qd, -r) / factorial_pair(n);
}

double ordered_total(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  double carry = 0.0;
  for (double v : values) {
    const double t = sum + v;
    carry += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  return sum + carry;
}

namespace serial {

double schatten_sum(int n, double r, long P, long Q) {
  std::vector<double> rows(static_cast<std::size_t>(std::max(Q, 0L)));
  for (long q = 1; q <= Q; ++q) rows[static_cast<std::size_t>(q - 1)] = detail::schatten_row(n, r, P, q);
  return ordered_total(std::move(rows));
}

double lower_bound_sum(int n, double r, long P, long Q) {
  std::vector<double> rows(static_cast<std::size_t>(std::max(Q, 0L)));
  for (long q = 1; q <= Q; ++q) rows[static_cast<std::size_t>(q - 1)] = detail::lower_bound_row(n, r, P, q);
  return ordered_total(std::move(rows));
}

Rational schatten_sum_exact(int n, long r, long P, long Q) {
  Rational total = 0;
  for (long q = 1; q <= Q; ++q) total += detail::schatten_row_exact(n, r, P, q);
  return total;
}

RatioArgmax ratio_argmax(int n, long s, long k_max) {
  RatioArgmax best;
  for (long k = 1; k <= k_max; ++k) detail::observe(best, k, detail::ratio_value(n, s, k));
  return best;
}

}  // namespace serial

}  // namespace kohn::kernels
