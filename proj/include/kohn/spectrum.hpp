// Closed-form spectral data of the Kohn Laplacian and the Laplace-Beltrami
// operator on the sphere S^{2n-1}, at the level of functions.
#pragma once

#include <vector>

#include "kohn/polynomial.hpp"
#include "kohn/scalar.hpp"

namespace kohn {

struct SpectrumEntry {
  Bidegree bidegree;
  Rational eigenvalue;
  Integer multiplicity;
};

struct AggregatedEigenvalue {
  Rational eigenvalue;
  Integer multiplicity;
  std::vector<Bidegree> contributors;  // enumeration order: q ascending, then p ascending
};

struct AggregatedSpectrum {
  int n = 0;
  Rational cutoff;
  std::vector<AggregatedEigenvalue> entries;  // eigenvalues strictly increasing
};

/// 2q(p+n-1); zero exactly on the q = 0 (Hardy) cells.
Rational boxb_eigenvalue(int n, Bidegree d);

/// dim H_{p,q}(S^{2n-1}) from the product form
/// (n+p+q-1)/((n-1)!(n-2)!) * prod_{i=1}^{n-2} (p+i)(q+i), with dim H_{0,0} = 1.
Integer multiplicity(int n, Bidegree d);

/// Same dimension from the binomial forms:
/// (n-1)(n+p+q-1)/(pq) C(n+p-2,p-1) C(n+q-2,q-1) for p,q >= 1, and
/// C(n+q-1,q) on the boundary cells (by conjugation symmetry for q = 0).
Integer multiplicity_binomial(int n, Bidegree d);

/// k(k+2n-2).
Rational laplace_beltrami_eigenvalue(int n, int k);

/// Dimension of all degree-k spherical harmonics on S^{2n-1}:
/// C(k+2n-2,k) + C(k+2n-3,k-1).
Integer spherical_harmonic_dimension(int n, int k);

/// min over p+q = k, q >= 1 of 2q(p+n-1) = 2(k+n-2).
Rational lambda_min(int n, int k);

/// Every nonzero eigenvalue <= cutoff with total multiplicity and the
/// bidegrees contributing to it.
AggregatedSpectrum aggregate_spectrum(int n, const Rational& cutoff);

/// Per-bidegree rows (q >= 1) with eigenvalue <= cutoff, ordered by
/// eigenvalue, then q, then p.
std::vector<SpectrumEntry> spectrum_entries(int n, const Rational& cutoff);

}  // namespace kohn
