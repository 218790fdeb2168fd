// Data-parallel inner loops. Every kernel exists twice: a serial reference
// in kohn::kernels::serial and an OpenMP version in kohn::kernels::omp.
// Both produce bit-identical results: row sums are formed in a fixed order
// and reduced serially in ascending order, so thread count never changes
// the answer.
#pragma once

#include <span>
#include <vector>

#include "kohn/scalar.hpp"

namespace kohn {

/// Thread cap from KOHN_SPECTRA_THREADS (unset, empty, or 0 means the
/// OpenMP default).
int configured_threads();

namespace kernels {

/// m_{p,q} * (2q(p+n-1))^{-r}, the contribution of H_{p,q} to ||G||_r^r.
double schatten_term(int n, double r, long p, long q);

/// (p+q) p^{n-2} q^{n-2} / ((4pq)^r (n-1)!(n-2)!).
double lower_bound_term(int n, double r, long p, long q);

/// Sum of nonnegative values in ascending order with Neumaier compensation.
double ordered_total(std::vector<double> values);

struct RatioArgmax {
  long k = 0;
  Rational value;
  long occurrences = 0;  // number of k attaining the maximum
};

namespace serial {

/// sum_{q=1}^{Q} sum_{p=0}^{P} schatten_term(n, r, p, q)
double schatten_sum(int n, double r, long P, long Q);
/// sum_{q=1}^{Q} sum_{p=n}^{P} lower_bound_term(n, r, p, q)
double lower_bound_sum(int n, double r, long P, long Q);
/// Exact partial sum of ||G||_r^r for integer r.
Rational schatten_sum_exact(int n, long r, long P, long Q);
/// max over 1 <= k <= k_max of (1+k(k+2n-2))^s / (4(k+n-2)^2); ties to smallest k.
RatioArgmax ratio_argmax(int n, long s, long k_max);

}  // namespace serial

namespace omp {

double schatten_sum(int n, double r, long P, long Q);
double lower_bound_sum(int n, double r, long P, long Q);
Rational schatten_sum_exact(int n, long r, long P, long Q);
RatioArgmax ratio_argmax(int n, long s, long k_max);

}  // namespace omp

}  // namespace kernels
}  // namespace kohn
