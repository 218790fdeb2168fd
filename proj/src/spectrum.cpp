#include "kohn/spectrum.hpp"

#include <algorithm>
#include <map>

#include "kohn/errors.hpp"

namespace kohn {

namespace {

void require_bidegree(Bidegree d) {
  if (d.p < 0 || d.q < 0) throw DomainError("bidegree entries must be nonnegative, got " + to_string(d));
}

}  // namespace

Rational boxb_eigenvalue(int n, Bidegree d) {
  require_dimension(n);
  require_bidegree(d);
  return Rational(2L * d.q * (d.p + n - 1));
}

Integer multiplicity(int n, Bidegree d) {
  require_dimension(n);
  require_bidegree(d);
  if (d.p == 0 && d.q == 0) return 1;
  Integer numerator = n + d.p + d.q - 1;
  for (int i = 1; i <= n - 2; ++i) {
    numerator *= d.p + i;
    numerator *= d.q + i;
  }
  const Integer denominator = factorial(static_cast<unsigned long>(n - 1)) * factorial(static_cast<unsigned long>(n - 2));
  if (numerator % denominator != 0) throw std::logic_error("multiplicity product form is not integral");
  return numerator / denominator;
}

Integer multiplicity_binomial(int n, Bidegree d) {
  require_dimension(n);
  require_bidegree(d);
  if (d.p == 0 && d.q == 0) return 1;
  if (d.p == 0) return binomial(n + d.q - 1, d.q);
  if (d.q == 0) return binomial(n + d.p - 1, d.p);
  const Integer numerator = Integer(n - 1) * (n + d.p + d.q - 1) * binomial(n + d.p - 2, d.p - 1) *
                            binomial(n + d.q - 2, d.q - 1);
  const Integer denominator = Integer(d.p) * d.q;
  if (numerator % denominator != 0) throw std::logic_error("multiplicity binomial form is not integral");
  return numerator / denominator;
}

Rational laplace_beltrami_eigenvalue(int n, int k) {
  require_dimension(n);
  if (k < 0) throw DomainError("degree k must be nonnegative, got " + std::to_string(k));
  return Rational(static_cast<long>(k) * (k + 2L * n - 2));
}

Integer spherical_harmonic_dimension(int n, int k) {
  require_dimension(n);
  if (k < 0) throw DomainError("degree k must be nonnegative");
  if (k == 0) return 1;
  return binomial(k + 2L * n - 2, k) + binomial(k + 2L * n - 3, k - 1);
}

Rational lambda_min(int n, int k) {
  require_dimension(n);
  if (k < 1) throw DomainError("lambda_min needs k >= 1, got " + std::to_string(k));
  return Rational(2L * (k + n - 2));
}

namespace {

// All (p,q), q >= 1, with 2q(p+n-1) <= cutoff, in q-major order. The bound
// 2q(n-1) <= 2q(p+n-1) makes the search finite.
std::vector<Bidegree> cells_below(int n, const Rational& cutoff) {
  std::vector<Bidegree> out;
  for (int q = 1; Rational(2L * q * (n - 1)) <= cutoff; ++q) {
    for (int p = 0; Rational(2L * q * (p + n - 1)) <= cutoff; ++p) out.push_back({p, q});
  }
  return out;
}

}  // namespace

AggregatedSpectrum aggregate_spectrum(int n, const Rational& cutoff) {
  require_dimension(n);
  if (sgn(cutoff) <= 0) throw DomainError("cutoff must be positive");
  std::map<Rational, AggregatedEigenvalue> by_value;
  for (const Bidegree d : cells_below(n, cutoff)) {
    const Rational lambda = boxb_eigenvalue(n, d);
    auto& entry = by_value[lambda];
    entry.eigenvalue = lambda;
    entry.multiplicity += multiplicity(n, d);
    entry.contributors.push_back(d);
  }
  AggregatedSpectrum out{n, cutoff, {}};
  out.entries.reserve(by_value.size());
  for (auto& [value, entry] : by_value) out.entries.push_back(std::move(entry));
  return out;
}

std::vector<SpectrumEntry> spectrum_entries(int n, const Rational& cutoff) {
  require_dimension(n);
  if (sgn(cutoff) <= 0) throw DomainError("cutoff must be positive");
  std::vector<SpectrumEntry> out;
  for (const Bidegree d : cells_below(n, cutoff)) out.push_back({d, boxb_eigenvalue(n, d), multiplicity(n, d)});
  std::stable_sort(out.begin(), out.end(),
                   [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.eigenvalue < b.eigenvalue; });
  return out;
}

}  // namespace kohn
