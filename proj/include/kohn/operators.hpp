// Spectral calculus on sphere-restricted polynomials. Every operator here
// acts diagonally on the decomposition L^2(S^{2n-1}) = (+) H_{p,q}, so it is
// applied by decomposing the input and scaling each harmonic component.
#pragma once

#include <vector>

#include "kohn/polynomial.hpp"
#include "kohn/scalar.hpp"

namespace kohn {

struct HarmonicComponent {
  Bidegree bidegree;
  Polynomial part;  // harmonic, bihomogeneous of `bidegree`, nonzero
};

struct SphericalDecomposition {
  int n = 0;
  std::vector<HarmonicComponent> components;  // strictly increasing bidegree

  /// Sum of the components: the harmonic polynomial agreeing with the
  /// decomposed input on the sphere.
  Polynomial sum() const;
  const HarmonicComponent* find(Bidegree d) const;
  std::vector<Rational> squared_norms() const;
  bool empty() const { return components.empty(); }
};

/// Fischer decomposition of a bihomogeneous f of bidegree d:
/// f = sum_{m=0}^{min(p,q)} |z|^{2m} h_m with h_m harmonic of bidegree
/// (p-m, q-m). Uses Delta(|z|^{2m} h) = 4m(n+deg h+m-1)|z|^{2m-2} h for
/// harmonic h, recursing on Delta f. Throws std::logic_error if the
/// remainder fails to be harmonic.
std::vector<Polynomial> fischer_decompose(const Polynomial& f, Bidegree d);

SphericalDecomposition decompose(const Polynomial& f);

/// Each component (p,q) scaled by 2q(p+n-1); the q = 0 components vanish.
SphericalDecomposition apply_boxb(const SphericalDecomposition& decomposition);
SphericalDecomposition apply_boxb(const Polynomial& f);

/// Complex Green operator: components with q >= 1 scaled by 1/(2q(p+n-1)),
/// q = 0 components annihilated.
SphericalDecomposition apply_green(const SphericalDecomposition& decomposition);
SphericalDecomposition apply_green(const Polynomial& f);

/// The q = 0 components (the kernel of the Kohn Laplacian).
SphericalDecomposition hardy_projection(const SphericalDecomposition& decomposition);
SphericalDecomposition hardy_projection(const Polynomial& f);

struct SobolevPowerResult {
  /// Scaled components when `exact`; otherwise the unscaled components,
  /// with the multiplier for component i in float_factors[i].
  SphericalDecomposition decomposition;
  std::vector<double> float_factors;
  bool exact = true;
};

/// (I + Delta_S)^t: component of degree k = p+q scaled by (1+k(k+2n-2))^t.
/// Exact for integer t, float factors otherwise.
SobolevPowerResult apply_sobolev_power(const Polynomial& f, const Rational& t);

/// ||f||_s^2 = sum over components of (1+mu(k))^s <h,h>. Exact for integer s.
MixedValue sobolev_norm_squared(const SphericalDecomposition& decomposition, const Rational& s);
MixedValue sobolev_norm_squared(const Polynomial& f, const Rational& s);

/// ||boxb(G f) - (f - hardy_projection(f))||^2 in L^2 of the sphere; zero
/// for every polynomial.
Rational residual_check(const Polynomial& f);

}  // namespace kohn
