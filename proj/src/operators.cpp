#include "kohn/operators.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "kohn/errors.hpp"
#include "kohn/spectrum.hpp"

namespace kohn {

Polynomial SphericalDecomposition::sum() const {
  Polynomial out(n);
  for (const auto& c : components) out += c.part;
  return out;
}

const HarmonicComponent* SphericalDecomposition::find(Bidegree d) const {
  for (const auto& c : components) {
    if (c.bidegree == d) return &c;
  }
  return nullptr;
}

std::vector<Rational> SphericalDecomposition::squared_norms() const {
  std::vector<Rational> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(sphere_norm_squared(c.part));
  return out;
}

std::vector<Polynomial> fischer_decompose(const Polynomial& f, Bidegree d) {
  const int n = f.n();
  if (!f.is_bihomogeneous(d)) throw DomainError("fischer_decompose: input is not of bidegree " + to_string(d));
  if (d.p == 0 || d.q == 0) return {f};

  const auto lowered = fischer_decompose(ambient_laplacian(f), {d.p - 1, d.q - 1});
  std::vector<Polynomial> h;
  h.reserve(lowered.size() + 1);
  h.emplace_back(n);
  for (std::size_t i = 0; i < lowered.size(); ++i) {
    const long m = static_cast<long>(i) + 1;
    const long weight = 4 * m * (n + d.p + d.q - m - 1);
    h.push_back(lowered[i] * ExactScalar(Rational(1, weight)));
  }

  Polynomial remainder = f;
  const Polynomial r2 = Polynomial::radius_squared(n);
  Polynomial r2m = r2;
  for (std::size_t m = 1; m < h.size(); ++m) {
    remainder -= r2m * h[m];
    if (m + 1 < h.size()) r2m = r2m * r2;
  }
  if (!ambient_laplacian(remainder).is_zero()) {
    throw std::logic_error("fischer_decompose: harmonic remainder check failed at bidegree " + to_string(d));
  }
  h[0] = std::move(remainder);
  return h;
}

SphericalDecomposition decompose(const Polynomial& f) {
  std::map<Bidegree, Polynomial> merged;
  for (const auto& [d, piece] : bidegree_split(f)) {
    const auto levels = fischer_decompose(piece, d);
    for (std::size_t m = 0; m < levels.size(); ++m) {
      const int mi = static_cast<int>(m);
      const Bidegree target{d.p - mi, d.q - mi};
      merged.try_emplace(target, f.n()).first->second += levels[m];
    }
  }
  SphericalDecomposition out{f.n(), {}};
  for (auto& [d, part] : merged) {
    if (!part.is_zero()) out.components.push_back({d, std::move(part)});
  }
  return out;
}

namespace {

template <typename Scale>
SphericalDecomposition scale_components(const SphericalDecomposition& in, Scale scale) {
  SphericalDecomposition out{in.n, {}};
  for (const auto& c : in.components) {
    const Rational factor = scale(c.bidegree);
    if (sgn(factor) == 0) continue;
    out.components.push_back({c.bidegree, c.part * ExactScalar(factor)});
  }
  return out;
}

Rational one_plus_mu(int n, int k) { return 1 + laplace_beltrami_eigenvalue(n, k); }

}  // namespace

SphericalDecomposition apply_boxb(const SphericalDecomposition& decomposition) {
  const int n = decomposition.n;
  return scale_components(decomposition, [n](Bidegree d) { return boxb_eigenvalue(n, d); });
}

SphericalDecomposition apply_boxb(const Polynomial& f) { return apply_boxb(decompose(f)); }

SphericalDecomposition apply_green(const SphericalDecomposition& decomposition) {
  const int n = decomposition.n;
  return scale_components(decomposition, [n](Bidegree d) -> Rational {
    if (d.q == 0) return 0;
    return 1 / boxb_eigenvalue(n, d);
  });
}

SphericalDecomposition apply_green(const Polynomial& f) { return apply_green(decompose(f)); }

SphericalDecomposition hardy_projection(const SphericalDecomposition& decomposition) {
  return scale_components(decomposition, [](Bidegree d) { return Rational(d.q == 0 ? 1 : 0); });
}

SphericalDecomposition hardy_projection(const Polynomial& f) { return hardy_projection(decompose(f)); }

SobolevPowerResult apply_sobolev_power(const Polynomial& f, const Rational& t) {
  SobolevPowerResult out;
  const SphericalDecomposition dec = decompose(f);
  const int n = f.n();
  if (is_integer(t)) {
    const long exponent = t.get_num().get_si();
    out.decomposition = scale_components(dec, [&](Bidegree d) { return pow(one_plus_mu(n, d.total()), exponent); });
    out.exact = true;
    return out;
  }
  out.decomposition = dec;
  out.exact = false;
  const double td = to_double(t);
  for (const auto& c : dec.components) out.float_factors.push_back(std::pow(to_double(one_plus_mu(n, c.bidegree.total())), td));
  return out;
}

MixedValue sobolev_norm_squared(const SphericalDecomposition& decomposition, const Rational& s) {
  const int n = decomposition.n;
  if (is_integer(s)) {
    const long exponent = s.get_num().get_si();
    Rational total = 0;
    for (const auto& c : decomposition.components) {
      total += pow(one_plus_mu(n, c.bidegree.total()), exponent) * sphere_norm_squared(c.part);
    }
    return MixedValue::from_exact(std::move(total));
  }
  const double sd = to_double(s);
  std::vector<double> terms;
  for (const auto& c : decomposition.components) {
    terms.push_back(std::pow(to_double(one_plus_mu(n, c.bidegree.total())), sd) * to_double(sphere_norm_squared(c.part)));
  }
  double total = 0.0;
  for (double t : terms) total += t;
  return MixedValue::from_float(total);
}

MixedValue sobolev_norm_squared(const Polynomial& f, const Rational& s) {
  return sobolev_norm_squared(decompose(f), s);
}

Rational residual_check(const Polynomial& f) {
  const SphericalDecomposition dec = decompose(f);
  const Polynomial round_trip = apply_boxb(apply_green(dec)).sum();
  const Polynomial expected = f - hardy_projection(dec).sum();
  return sphere_norm_squared(round_trip - expected);
}

}  // namespace kohn
