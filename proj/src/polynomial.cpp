#include "kohn/polynomial.hpp"

#include <numeric>
#include <sstream>

#include "kohn/errors.hpp"

namespace kohn {

Multiindex::Multiindex(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw DomainError("multiindex entries must be nonnegative");
    degree_ += e;
  }
}

Multiindex Multiindex::unit(int n, int j) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e.at(static_cast<std::size_t>(j)) = 1;
  return Multiindex(std::move(e));
}

Multiindex Multiindex::operator+(const Multiindex& other) const {
  if (size() != other.size()) throw DimensionError("multiindex length mismatch");
  Multiindex out = *this;
  for (std::size_t j = 0; j < entries_.size(); ++j) out.entries_[j] += other.entries_[j];
  out.degree_ += other.degree_;
  return out;
}

Multiindex Multiindex::decremented(int j) const {
  Multiindex out = *this;
  auto& e = out.entries_.at(static_cast<std::size_t>(j));
  if (e == 0) throw DomainError("cannot decrement a zero multiindex entry");
  --e;
  --out.degree_;
  return out;
}

namespace {

void fill_multiindices(int n, int remaining, std::vector<int>& current, std::vector<Multiindex>& out) {
  const auto pos = current.size();
  if (static_cast<int>(pos) == n - 1) {
    current.push_back(remaining);
    out.emplace_back(current);
    current.pop_back();
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current.push_back(e);
    fill_multiindices(n, remaining - e, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Multiindex> multiindices_of_degree(int n, int d) {
  if (n < 1) throw DomainError("multiindex length must be positive");
  std::vector<Multiindex> out;
  if (d < 0) return out;
  std::vector<int> current;
  current.reserve(static_cast<std::size_t>(n));
  fill_multiindices(n, d, current, out);
  return out;
}

std::string to_string(const Bidegree& d) {
  return "(" + std::to_string(d.p) + "," + std::to_string(d.q) + ")";
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  const int da = a.alpha.degree() + a.beta.degree();
  const int db = b.alpha.degree() + b.beta.degree();
  if (auto c = da <=> db; c != 0) return c;
  if (auto c = a.alpha <=> b.alpha; c != 0) return c;
  return a.beta <=> b.beta;
}

Polynomial::Polynomial(int n) : n_(n) { require_dimension(n); }

Polynomial Polynomial::constant(int n, const ExactScalar& c) {
  Polynomial out(n);
  out.add_term({Multiindex::zero(n), Multiindex::zero(n)}, c);
  return out;
}

Polynomial Polynomial::z(int n, int j) {
  Polynomial out(n);
  out.add_term({Multiindex::unit(n, j), Multiindex::zero(n)}, ExactScalar(1));
  return out;
}

Polynomial Polynomial::zbar(int n, int j) {
  Polynomial out(n);
  out.add_term({Multiindex::zero(n), Multiindex::unit(n, j)}, ExactScalar(1));
  return out;
}

Polynomial Polynomial::monomial(Multiindex alpha, Multiindex beta, const ExactScalar& c) {
  if (alpha.size() != beta.size()) throw DimensionError("alpha and beta lengths differ");
  Polynomial out(alpha.size());
  out.add_term({std::move(alpha), std::move(beta)}, c);
  return out;
}

Polynomial Polynomial::radius_squared(int n) {
  Polynomial out(n);
  for (int j = 0; j < n; ++j) out.add_term({Multiindex::unit(n, j), Multiindex::unit(n, j)}, ExactScalar(1));
  return out;
}

void Polynomial::add_term(const Monomial& m, const ExactScalar& c) {
  if (m.alpha.size() != n_ || m.beta.size() != n_) {
    throw DimensionError("monomial length does not match n=" + std::to_string(n_));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExactScalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ExactScalar{} : it->second;
}

bool Polynomial::is_bihomogeneous(Bidegree d) const {
  for (const auto& [m, c] : terms_) {
    if (m.bidegree() != d) return false;
  }
  return true;
}

int Polynomial::max_total_degree() const {
  int out = -1;
  for (const auto& [m, c] : terms_) out = std::max(out, m.alpha.degree() + m.beta.degree());
  return out;
}

Polynomial Polynomial::conj() const {
  Polynomial out(n_);
  for (const auto& [m, c] : terms_) out.add_term({m.beta, m.alpha}, c.conj());
  return out;
}

void Polynomial::check_same_dimension(const Polynomial& other, const char* op) const {
  if (n_ != other.n_) {
    throw DimensionError(std::string(op) + ": dimension mismatch (n=" + std::to_string(n_) +
                         " vs n=" + std::to_string(other.n_) + ")");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_same_dimension(rhs, "add");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_same_dimension(rhs, "subtract");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const ExactScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  lhs.check_same_dimension(rhs, "multiply");
  Polynomial out(lhs.n_);
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      out.add_term({ma.alpha + mb.alpha, ma.beta + mb.beta}, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << (c.is_real() ? c.to_string() : "(" + c.to_string() + ")");
    for (int j = 0; j < n_; ++j) {
      if (m.alpha[j] > 0) os << " z" << j + 1 << (m.alpha[j] > 1 ? "^" + std::to_string(m.alpha[j]) : "");
    }
    for (int j = 0; j < n_; ++j) {
      if (m.beta[j] > 0) os << " zb" << j + 1 << (m.beta[j] > 1 ? "^" + std::to_string(m.beta[j]) : "");
    }
  }
  return os.str();
}

Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }

Polynomial multiply(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial power(const Polynomial& f, int exponent) {
  if (exponent < 0) throw DomainError("negative polynomial power");
  Polynomial out = Polynomial::constant(f.n(), ExactScalar(1));
  for (int i = 0; i < exponent; ++i) out = out * f;
  return out;
}

Polynomial ambient_laplacian(const Polynomial& f) {
  Polynomial out(f.n());
  for (const auto& [m, c] : f.terms()) {
    for (int j = 0; j < f.n(); ++j) {
      const int a = m.alpha[j];
      const int b = m.beta[j];
      if (a == 0 || b == 0) continue;
      out.add_term({m.alpha.decremented(j), m.beta.decremented(j)}, c * ExactScalar(4L * a * b));
    }
  }
  return out;
}

Polynomial holomorphic_euler(const Polynomial& f) {
  Polynomial out(f.n());
  for (const auto& [m, c] : f.terms()) out.add_term(m, c * ExactScalar(static_cast<long>(m.alpha.degree())));
  return out;
}

Polynomial antiholomorphic_euler(const Polynomial& f) {
  Polynomial out(f.n());
  for (const auto& [m, c] : f.terms()) out.add_term(m, c * ExactScalar(static_cast<long>(m.beta.degree())));
  return out;
}

std::map<Bidegree, Polynomial> bidegree_split(const Polynomial& f) {
  std::map<Bidegree, Polynomial> out;
  for (const auto& [m, c] : f.terms()) {
    out.try_emplace(m.bidegree(), f.n()).first->second.add_term(m, c);
  }
  return out;
}

Rational monomial_sphere_integral(const Multiindex& alpha) {
  const int n = alpha.size();
  Integer num = factorial(static_cast<unsigned long>(n - 1));
  for (int e : alpha.entries()) num *= factorial(static_cast<unsigned long>(e));
  Rational out(num, factorial(static_cast<unsigned long>(n - 1 + alpha.degree())));
  out.canonicalize();
  return out;
}

namespace {

// alpha - beta, the key under which z^alpha zbar^beta pairs nontrivially.
std::vector<int> charge(const Monomial& m) {
  std::vector<int> out(m.alpha.entries());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] -= m.beta.entries()[j];
  return out;
}

}  // namespace

ExactScalar sphere_inner_product(const Polynomial& f, const Polynomial& g) {
  if (f.n() != g.n()) {
    throw DimensionError("sphere_inner_product: dimension mismatch (n=" + std::to_string(f.n()) +
                         " vs n=" + std::to_string(g.n()) + ")");
  }
  // f conj(g) picks up z^{alpha+delta} zbar^{beta+gamma} from (alpha,beta) in
  // f and (gamma,delta) in g; it integrates to zero unless alpha-beta = gamma-delta.
  std::map<std::vector<int>, std::vector<const Polynomial::TermMap::value_type*>> by_charge;
  for (const auto& term : g.terms()) by_charge[charge(term.first)].push_back(&term);

  ExactScalar total;
  for (const auto& [mf, cf] : f.terms()) {
    auto it = by_charge.find(charge(mf));
    if (it == by_charge.end()) continue;
    for (const auto* term : it->second) {
      const Multiindex diagonal = mf.alpha + term->first.beta;
      total += cf * term->second.conj() * ExactScalar(monomial_sphere_integral(diagonal));
    }
  }
  return total;
}

Rational sphere_norm_squared(const Polynomial& f) { return sphere_inner_product(f, f).re(); }

Polynomial random_polynomial(int n, int max_degree, int terms, std::mt19937_64& rng) {
  require_dimension(n);
  if (max_degree < 0) throw DomainError("max_degree must be nonnegative");
  auto uniform = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  Polynomial out(n);
  for (int t = 0; t < terms; ++t) {
    const int total = uniform(0, max_degree);
    std::vector<int> alpha(static_cast<std::size_t>(n), 0);
    std::vector<int> beta(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < total; ++i) {
      const int slot = uniform(0, 2 * n - 1);
      if (slot < n) {
        ++alpha[static_cast<std::size_t>(slot)];
      } else {
        ++beta[static_cast<std::size_t>(slot - n)];
      }
    }
    Rational re(uniform(-6, 6), uniform(1, 4));
    re.canonicalize();
    Rational im = 0;
    if (uniform(0, 2) == 0) {
      im = Rational(uniform(-3, 3), uniform(1, 3));
      im.canonicalize();
    }
    if (sgn(re) == 0 && sgn(im) == 0) re = 1;
    out.add_term({Multiindex(std::move(alpha)), Multiindex(std::move(beta))}, ExactScalar(re, im));
  }
  return out;
}

}  // namespace kohn
