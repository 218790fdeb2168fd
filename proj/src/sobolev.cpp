#include "kohn/sobolev.hpp"

#include <cmath>
#include <stdexcept>

#include "kohn/errors.hpp"
#include "kohn/kernels.hpp"
#include "kohn/operators.hpp"
#include "kohn/spectrum.hpp"

namespace kohn {

namespace {

void require_k(long k) {
  if (k < 1) throw DomainError("ratio index k must be >= 1, got " + std::to_string(k));
}

}  // namespace

Rational sobolev_ratio_exact(int n, long s, long k) {
  require_dimension(n);
  require_k(k);
  const Rational one_plus_mu = 1 + laplace_beltrami_eigenvalue(n, static_cast<int>(k));
  const Rational lambda = lambda_min(n, static_cast<int>(k));
  return pow(one_plus_mu, s) / (lambda * lambda);
}

double sobolev_ratio_float(int n, double s, long k) {
  require_dimension(n);
  require_k(k);
  const double kd = static_cast<double>(k);
  const double one_plus_mu = 1.0 + kd * (kd + 2.0 * n - 2.0);
  const double lambda = 2.0 * (kd + n - 2.0);
  return std::exp(s * std::log(one_plus_mu) - 2.0 * std::log(lambda));
}

MixedValue sobolev_ratio(int n, const Rational& s, long k) {
  if (is_integer(s)) return MixedValue::from_exact(sobolev_ratio_exact(n, s.get_num().get_si(), k));
  return MixedValue::from_float(sobolev_ratio_float(n, to_double(s), k));
}

bool is_bounded(int n, const Rational& s) {
  require_dimension(n);
  return s <= 1;
}

long critical_index(int n) {
  require_dimension(n);
  return n == 2 ? 1 : static_cast<long>(n) * n - 3L * n + 1;
}

Rational proof_display_constant(int n) {
  require_dimension(n);
  if (n == 2) return 1;
  const long den = 4L * (static_cast<long>(n) * n - 2L * n - 1);
  Rational out(static_cast<long>(n) * (n - 2), den);
  out.canonicalize();
  return out;
}

Rational theorem_display_constant(int n) {
  require_dimension(n);
  if (n == 2) return 1;
  Rational out(static_cast<long>(n) * (n - 2), 4L * (n - 1) * (n - 1));
  out.canonicalize();
  return out;
}

long decreasing_from(int n) {
  require_dimension(n);
  const Integer c = Integer(n) * n - 2 * n - 1;
  auto d = [&c](const Integer& u) -> Integer { return 2 * u * (u + 1 - c) - c; };
  const Integer u_min = n - 1;
  const Integer vertex = (c - 1) / 2;
  Integer u = vertex > u_min ? vertex : u_min;
  if (u < 1) u = 1;
  while (sgn(d(u)) <= 0) ++u;
  while (u - 1 >= u_min && sgn(d(u - 1)) > 0) --u;
  return Integer(u - n + 2).get_si();
}

long minimum_scan(int n) {
  require_dimension(n);
  const long crit = static_cast<long>(n) * n - 3L * n + 1;
  return std::max(1L, crit) + static_cast<long>(n) * n;
}

BestConstantReport best_constant(int n, long scan_max) {
  require_dimension(n);
  const long needed = minimum_scan(n);
  if (scan_max < needed) {
    throw DomainError("scan_max " + std::to_string(scan_max) + " too small for n=" + std::to_string(n) +
                      "; need at least " + std::to_string(needed));
  }
  const auto best = kernels::omp::ratio_argmax(n, 1, scan_max);
  if (best.occurrences != 1) throw std::logic_error("best_constant: maximum attained at more than one k");

  BestConstantReport rep;
  rep.n = n;
  rep.scan_max = scan_max;
  rep.c_squared = best.value;
  rep.argmax_k = best.k;
  rep.decreasing_from_k = decreasing_from(n);
  rep.tail_certified = scan_max >= rep.decreasing_from_k;

  const int k = static_cast<int>(best.k);
  const Rational lmin = lambda_min(n, k);
  for (int q = 1; q <= k; ++q) {
    const Bidegree d{k - q, q};
    if (boxb_eigenvalue(n, d) == lmin) rep.equality_bidegrees.push_back(d);
  }
  rep.matches_theorem_display = rep.c_squared == theorem_display_constant(n);
  rep.matches_proof_display = rep.c_squared == proof_display_constant(n);
  return rep;
}

GainCertificate sobolev_gain_certificate(int n, const Polynomial& f, long s) {
  require_dimension(n);
  if (f.n() != n) throw DimensionError("sobolev_gain_certificate: polynomial lives in C^" + std::to_string(f.n()));
  if (s < 0) throw DomainError("sobolev_gain_certificate needs s >= 0");
  const BestConstantReport best = best_constant(n, minimum_scan(n));

  const SphericalDecomposition dec = decompose(f);
  const SphericalDecomposition green = apply_green(dec);

  GainCertificate cert;
  cert.n = n;
  cert.s = s;
  cert.c_squared = best.c_squared;
  cert.lhs = *sobolev_norm_squared(green, Rational(s + 1)).exact;
  cert.rhs = best.c_squared * *sobolev_norm_squared(dec, Rational(s)).exact;
  cert.holds = cert.lhs <= cert.rhs;
  cert.equality = cert.lhs == cert.rhs;
  if (sgn(cert.rhs) > 0) cert.ratio = cert.lhs / cert.rhs;
  if (dec.components.size() == 1) {
    for (const auto& d : best.equality_bidegrees) {
      if (dec.components.front().bidegree == d) cert.in_equality_eigenspace = true;
    }
  }
  return cert;
}

}  // namespace kohn
