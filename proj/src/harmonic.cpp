#include "kohn/harmonic.hpp"

#include <map>
#include <stdexcept>

#include "kohn/errors.hpp"
#include "kohn/kernels.hpp"
#include "kohn/spectrum.hpp"

namespace kohn {

std::vector<Monomial> monomials_of_bidegree(int n, Bidegree d) {
  require_dimension(n);
  std::vector<Monomial> out;
  if (d.p < 0 || d.q < 0) return out;
  const auto alphas = multiindices_of_degree(n, d.p);
  const auto betas = multiindices_of_degree(n, d.q);
  out.reserve(alphas.size() * betas.size());
  for (const auto& a : alphas) {
    for (const auto& b : betas) out.push_back({a, b});
  }
  return out;
}

namespace {

std::map<Monomial, std::size_t> index_of(const std::vector<Monomial>& monomials) {
  std::map<Monomial, std::size_t> out;
  for (std::size_t i = 0; i < monomials.size(); ++i) out.emplace(monomials[i], i);
  return out;
}

Polynomial from_coordinates(int n, const std::vector<Monomial>& monomials, const ExactVector& coords) {
  Polynomial out(n);
  for (std::size_t i = 0; i < monomials.size(); ++i) out.add_term(monomials[i], coords[i]);
  return out;
}

}  // namespace

ExactMatrix laplacian_matrix(int n, Bidegree d) {
  const auto domain = monomials_of_bidegree(n, d);
  const auto image = monomials_of_bidegree(n, {d.p - 1, d.q - 1});
  const auto row_of = index_of(image);
  ExactMatrix m(image.size(), domain.size());
  for (std::size_t c = 0; c < domain.size(); ++c) {
    const Polynomial lap = ambient_laplacian(Polynomial::monomial(domain[c].alpha, domain[c].beta));
    for (const auto& [mono, coeff] : lap.terms()) m(row_of.at(mono), c) = coeff;
  }
  return m;
}

HarmonicBasis harmonic_basis(int n, Bidegree d) {
  require_dimension(n);
  if (d.p < 0 || d.q < 0) throw DomainError("bidegree entries must be nonnegative");
  const auto domain = monomials_of_bidegree(n, d);
  HarmonicBasis out{n, d, {}, {}};
  for (const auto& v : kernel_basis(laplacian_matrix(n, d))) out.elements.push_back(from_coordinates(n, domain, v));
  return out;
}

HarmonicBasis orthonormalize(const HarmonicBasis& basis) {
  HarmonicBasis out{basis.n, basis.bidegree, {}, {}};
  for (const auto& v : basis.elements) {
    Polynomial e = v;
    for (std::size_t j = 0; j < out.elements.size(); ++j) {
      const ExactScalar coeff = sphere_inner_product(v, out.elements[j]) / ExactScalar(out.squared_norms[j]);
      e -= out.elements[j] * coeff;
    }
    Rational norm = sphere_norm_squared(e);
    if (sgn(norm) == 0) throw std::logic_error("orthonormalize: basis is linearly dependent");
    out.elements.push_back(std::move(e));
    out.squared_norms.push_back(std::move(norm));
  }
  return out;
}

std::vector<Polynomial> fischer_decompose_by_elimination(const Polynomial& f, Bidegree d) {
  const int n = f.n();
  if (!f.is_bihomogeneous(d)) throw DomainError("fischer_decompose_by_elimination: input is not of bidegree " + to_string(d));
  const int levels = std::min(d.p, d.q) + 1;
  const auto rows = monomials_of_bidegree(n, d);
  const auto row_of = index_of(rows);

  std::vector<HarmonicBasis> bases;
  std::vector<Polynomial> columns;
  const Polynomial r2 = Polynomial::radius_squared(n);
  Polynomial r2m = Polynomial::constant(n, ExactScalar(1));
  for (int m = 0; m < levels; ++m) {
    bases.push_back(harmonic_basis(n, {d.p - m, d.q - m}));
    for (const auto& h : bases.back().elements) columns.push_back(r2m * h);
    r2m = r2m * r2;
  }
  ExactMatrix a(rows.size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& [mono, coeff] : columns[c].terms()) a(row_of.at(mono), c) = coeff;
  }
  ExactVector rhs(rows.size());
  for (const auto& [mono, coeff] : f.terms()) rhs[row_of.at(mono)] = coeff;

  const ExactVector x = solve_unique(a, rhs);
  std::vector<Polynomial> out;
  std::size_t offset = 0;
  for (const auto& basis : bases) {
    Polynomial h(n);
    for (const auto& e : basis.elements) h += e * x[offset++];
    out.push_back(std::move(h));
  }
  return out;
}

bool EigenVerificationReport::passed() const {
  for (const auto& c : cells) {
    if (!c.passed()) return false;
  }
  for (const auto& d : degrees) {
    if (!d.ok) return false;
  }
  return orthogonality_failures.empty();
}

namespace {

CellCheck check_cell(int n, Bidegree d, HarmonicBasis& basis_out) {
  CellCheck check;
  check.bidegree = d;
  ExactMatrix lap = laplacian_matrix(n, d);
  check.monomial_dimension = lap.cols();
  check.image_rank = rank(lap);
  basis_out = harmonic_basis(n, d);
  check.kernel_rank = basis_out.elements.size();
  check.expected_dimension = multiplicity(n, d);
  check.boxb_eigenvalue = boxb_eigenvalue(n, d);
  check.laplace_beltrami_eigenvalue = laplace_beltrami_eigenvalue(n, d.total());

  check.dimension_ok = Integer(static_cast<unsigned long>(check.kernel_rank)) == check.expected_dimension;
  if (!check.dimension_ok) {
    check.failures.push_back("kernel rank " + std::to_string(check.kernel_rank) + " != closed-form dimension " +
                             check.expected_dimension.get_str());
  }
  check.rank_nullity_ok = check.kernel_rank + check.image_rank == check.monomial_dimension;
  if (!check.rank_nullity_ok) check.failures.push_back("rank-nullity violated");

  check.harmonic_ok = true;
  check.bihomogeneous_ok = true;
  for (const auto& h : basis_out.elements) {
    if (!ambient_laplacian(h).is_zero()) {
      check.harmonic_ok = false;
      check.failures.push_back("not harmonic: " + h.to_string());
    }
    const bool euler = holomorphic_euler(h) == h * ExactScalar(static_cast<long>(d.p)) &&
                       antiholomorphic_euler(h) == h * ExactScalar(static_cast<long>(d.q));
    if (!euler || !h.is_bihomogeneous(d) || h.is_zero()) {
      check.bihomogeneous_ok = false;
      check.failures.push_back("not bihomogeneous of bidegree " + to_string(d) + ": " + h.to_string());
    }
  }
  return check;
}

}  // namespace

EigenVerificationReport verify_eigen_identities(int n, int max_degree) {
  require_dimension(n);
  if (max_degree < 1) throw DomainError("max_degree must be >= 1");
  std::vector<Bidegree> cells;
  for (int k = 0; k <= max_degree; ++k) {
    for (int q = 0; q <= k; ++q) cells.push_back({k - q, q});
  }

  EigenVerificationReport report;
  report.n = n;
  report.max_degree = max_degree;
  report.cells.resize(cells.size());
  std::vector<HarmonicBasis> bases(cells.size());
  const long cell_count = static_cast<long>(cells.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(configured_threads())
  for (long i = 0; i < cell_count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    report.cells[idx] = check_cell(n, cells[idx], bases[idx]);
  }

  for (int k = 0; k <= max_degree; ++k) {
    DegreeCheck dc;
    dc.k = k;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].total() == k) dc.summed_dimension += Integer(static_cast<unsigned long>(report.cells[i].kernel_rank));
    }
    dc.expected_dimension = spherical_harmonic_dimension(n, k);
    dc.ok = dc.summed_dimension == dc.expected_dimension;
    report.degrees.push_back(std::move(dc));
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) pairs.emplace_back(i, j);
  }
  std::vector<std::vector<std::string>> failures(pairs.size());
  std::vector<std::size_t> counted(pairs.size(), 0);
  const long pair_count = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(configured_threads())
  for (long t = 0; t < pair_count; ++t) {
    const auto idx = static_cast<std::size_t>(t);
    const auto [i, j] = pairs[idx];
    for (const auto& a : bases[i].elements) {
      for (const auto& b : bases[j].elements) {
        ++counted[idx];
        const ExactScalar ip = sphere_inner_product(a, b);
        if (!ip.is_zero()) {
          failures[idx].push_back("<" + a.to_string() + ", " + b.to_string() + "> = " + ip.to_string());
        }
      }
    }
  }
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    report.orthogonality_pairs += counted[t];
    for (auto& f : failures[t]) report.orthogonality_failures.push_back(std::move(f));
  }
  return report;
}

}  // namespace kohn
