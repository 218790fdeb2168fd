#include <omp.h>

#include <cstdlib>
#include <string>

#include "kernel_rows.hpp"

namespace kohn {

int configured_threads() {
  const char* env = std::getenv("KOHN_SPECTRA_THREADS");
  if (env != nullptr && *env != '\0') {
    const int requested = std::atoi(env);
    if (requested > 0) return requested;
  }
  return omp_get_max_threads();
}

namespace kernels::omp {

double schatten_sum(int n, double r, long P, long Q) {
  std::vector<double> rows(static_cast<std::size_t>(std::max(Q, 0L)));
#pragma omp parallel for schedule(dynamic, 16) num_threads(configured_threads())
  for (long q = 1; q <= Q; ++q) rows[static_cast<std::size_t>(q - 1)] = detail::schatten_row(n, r, P, q);
  return ordered_total(std::move(rows));
}

double lower_bound_sum(int n, double r, long P, long Q) {
  std::vector<double> rows(static_cast<std::size_t>(std::max(Q, 0L)));
#pragma omp parallel for schedule(dynamic, 16) num_threads(configured_threads())
  for (long q = 1; q <= Q; ++q) rows[static_cast<std::size_t>(q - 1)] = detail::lower_bound_row(n, r, P, q);
  return ordered_total(std::move(rows));
}

Rational schatten_sum_exact(int n, long r, long P, long Q) {
  std::vector<Rational> rows(static_cast<std::size_t>(std::max(Q, 0L)));
#pragma omp parallel for schedule(dynamic, 4) num_threads(configured_threads())
  for (long q = 1; q <= Q; ++q) rows[static_cast<std::size_t>(q - 1)] = detail::schatten_row_exact(n, r, P, q);
  Rational total = 0;
  for (const auto& row : rows) total += row;
  return total;
}

RatioArgmax ratio_argmax(int n, long s, long k_max) {
  RatioArgmax best;
#pragma omp parallel num_threads(configured_threads())
  {
    RatioArgmax local;
#pragma omp for schedule(static) nowait
    for (long k = 1; k <= k_max; ++k) detail::observe(local, k, detail::ratio_value(n, s, k));
#pragma omp critical(kohn_ratio_argmax)
    detail::merge_argmax(best, local);
  }
  return best;
}

}  // namespace kernels::omp
}  // namespace kohn
