// Explicit bases of the harmonic spaces H_{p,q}, built by exact elimination.
// This module is deliberately brute force: it is the independent oracle
// for the closed-form dimensions, the orthogonal decomposition, and the
// Fischer decomposition used by kohn::decompose.
#pragma once

#include <string>
#include <vector>

#include "kohn/linalg.hpp"
#include "kohn/polynomial.hpp"

namespace kohn {

struct HarmonicBasis {
  int n = 0;
  Bidegree bidegree;
  std::vector<Polynomial> elements;
  /// <e, e> per element; filled by orthonormalize, empty otherwise.
  std::vector<Rational> squared_norms;
};

/// Monomials z^alpha zbar^beta of bidegree (p,q), ordered by alpha then beta,
/// each in descending lexicographic order.
std::vector<Monomial> monomials_of_bidegree(int n, Bidegree d);

/// Matrix of the ambient Laplacian from bidegree (p,q) monomials (columns)
/// to bidegree (p-1,q-1) monomials (rows). Zero rows when p or q is 0.
ExactMatrix laplacian_matrix(int n, Bidegree d);

HarmonicBasis harmonic_basis(int n, Bidegree d);

/// Gram-Schmidt against the sphere inner product. Elements come back
/// mutually orthogonal with their exact squared norms; no square roots are
/// taken, so nothing leaves the rational field.
HarmonicBasis orthonormalize(const HarmonicBasis& basis);

/// Fischer decomposition f = sum_m |z|^{2m} h_m of a bihomogeneous f of
/// bidegree d, obtained by solving one exact linear system whose unknowns are
/// coordinates in the harmonic bases of H_{p-m,q-m}. Returns h_0..h_{min(p,q)}.
std::vector<Polynomial> fischer_decompose_by_elimination(const Polynomial& f, Bidegree d);

struct CellCheck {
  Bidegree bidegree;
  std::size_t monomial_dimension = 0;
  std::size_t kernel_rank = 0;
  std::size_t image_rank = 0;
  Integer expected_dimension;  // closed-form multiplicity
  Rational boxb_eigenvalue;
  Rational laplace_beltrami_eigenvalue;
  bool dimension_ok = false;
  bool rank_nullity_ok = false;
  bool harmonic_ok = false;
  bool bihomogeneous_ok = false;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

struct DegreeCheck {
  int k = 0;
  Integer summed_dimension;
  Integer expected_dimension;
  bool ok = false;
};

struct EigenVerificationReport {
  int n = 0;
  int max_degree = 0;
  std::vector<CellCheck> cells;
  std::vector<DegreeCheck> degrees;
  std::size_t orthogonality_pairs = 0;
  std::vector<std::string> orthogonality_failures;

  bool passed() const;
};

/// For every cell p+q <= max_degree: kernel rank against the closed-form
/// dimension, rank-nullity, harmonicity and Euler bihomogeneity of each basis
/// element, the eigenvalues assigned to the cell, and exact orthogonality
/// against every other cell.
EigenVerificationReport verify_eigen_identities(int n, int max_degree);

}  // namespace kohn
