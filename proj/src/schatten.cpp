#include "kohn/schatten.hpp"

#include <cmath>
#include <limits>

#include "kohn/errors.hpp"
#include "kohn/kernels.hpp"
#include "kohn/spectrum.hpp"

namespace kohn {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

void require_r(const Rational& r) {
  if (r < 1) throw DomainError("Schatten exponent r must be >= 1, got " + to_string(r));
}

void require_cutoffs(long P, long Q) {
  if (P < 0) throw DomainError("cutoff P must be >= 0");
  if (Q < 1) throw DomainError("cutoff Q must be >= 1");
}

double factorial_d(int k) {
  double out = 1.0;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

double binomial_d(int top, int bottom) { return to_double(Rational(binomial(top, bottom))); }

// integral_A^inf x^e dx, e < -1, A > 0.
double tail_integral(double a, double e) { return std::pow(a, e + 1.0) / (-e - 1.0); }

// integral_A^B x^e dx.
double range_integral(double a, double b, double e) {
  if (e == -1.0) return std::log(b / a);
  return (std::pow(b, e + 1.0) - std::pow(a, e + 1.0)) / (e + 1.0);
}

// Coefficients c[a][b] of (n-1+x+y)(x+n-2)^{n-2}(y+n-2)^{n-2} = sum c_ab x^a y^b.
std::vector<std::vector<double>> upper_numerator(int n) {
  const int d = n - 2;
  std::vector<double> single(static_cast<std::size_t>(d + 1));
  for (int a = 0; a <= d; ++a) single[static_cast<std::size_t>(a)] = binomial_d(d, a) * std::pow(static_cast<double>(d), d - a);
  std::vector<std::vector<double>> c(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int a = 0; a <= d; ++a) {
    for (int b = 0; b <= d; ++b) {
      const double base = single[static_cast<std::size_t>(a)] * single[static_cast<std::size_t>(b)];
      c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += (n - 1) * base;
      c[static_cast<std::size_t>(a + 1)][static_cast<std::size_t>(b)] += base;
      c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b + 1)] += base;
    }
  }
  return c;
}

}  // namespace

std::string to_string(Verdict v) { return v == Verdict::Converges ? "Converges" : "Diverges"; }

Verdict verdict(int n, const Rational& r) {
  require_dimension(n);
  require_r(r);
  return r > n ? Verdict::Converges : Verdict::Diverges;
}

Rational partial_sum_exact(int n, long r, long P, long Q) {
  require_dimension(n);
  require_r(Rational(r));
  require_cutoffs(P, Q);
  return kernels::omp::schatten_sum_exact(n, r, P, Q);
}

double partial_sum_float(int n, double r, long P, long Q) {
  require_dimension(n);
  if (!(r >= 1.0)) throw DomainError("Schatten exponent r must be >= 1");
  require_cutoffs(P, Q);
  return kernels::omp::schatten_sum(n, r, P, Q);
}

MixedValue partial_sum(int n, const Rational& r, long P, long Q) {
  require_r(r);
  if (is_integer(r)) return MixedValue::from_exact(partial_sum_exact(n, r.get_num().get_si(), P, Q));
  return MixedValue::from_float(partial_sum_float(n, r.get_d(), P, Q));
}

double tail_upper_bound(int n, const Rational& r_exact, long P, long Q) {
  require_dimension(n);
  require_r(r_exact);
  require_cutoffs(P, Q);
  if (r_exact <= n) return kInfinity;
  const double r = r_exact.get_d();
  const double pair = factorial_d(n - 1) * factorial_d(n - 2);
  const double scale = std::pow(2.0, -r) / pair;
  const auto c = upper_numerator(n);
  const double qd = static_cast<double>(Q);

  // p = 0, q > Q: m_{0,q} <= (q+n-1)^{n-1}/(n-1)!, eigenvalue exactly 1/(2q(n-1)).
  double hardy_edge = 0.0;
  for (int b = 0; b <= n - 1; ++b) {
    hardy_edge += binomial_d(n - 1, b) * std::pow(n - 1.0, n - 1 - b) * tail_integral(qd, b - r);
  }
  hardy_edge *= std::pow(2.0 * (n - 1), -r) / factorial_d(n - 1);

  // p >= 1, q > Q: sum_p g(p,q) <= g(1,q) + int_1^inf g(x,q) dx, then integrate in q.
  double q_tail = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const double cab = c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (cab == 0.0) continue;
      q_tail += cab * (1.0 + tail_integral(1.0, a - r)) * tail_integral(qd, b - r);
    }
  }
  q_tail *= scale;

  // 1 <= q <= Q, p > P: sum_{p>P} g(p,q) <= int_P^inf g(x,q) dx (P >= 1), summed over q directly.
  std::vector<double> x_factor(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    x_factor[static_cast<std::size_t>(a)] =
        P >= 1 ? tail_integral(static_cast<double>(P), a - r) : 1.0 + tail_integral(1.0, a - r);
  }
  double p_tail = 0.0;
  for (int b = 0; b < n; ++b) {
    double coeff = 0.0;
    for (int a = 0; a < n; ++a) coeff += c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] * x_factor[static_cast<std::size_t>(a)];
    if (coeff == 0.0) continue;
    std::vector<double> powers;
    powers.reserve(static_cast<std::size_t>(Q));
    for (long q = 1; q <= Q; ++q) powers.push_back(std::pow(static_cast<double>(q), b - r));
    p_tail += coeff * kernels::ordered_total(std::move(powers));
  }
  p_tail *= scale;

  return hardy_edge + q_tail + p_tail;
}

double lower_bound_integral(int n, double r, double P, double Q) {
  require_dimension(n);
  if (r < n - 1.0) throw DomainError("lower_bound_integral needs r >= n-1 for a monotone integrand");
  if (P < n || Q < 1) return 0.0;
  const double k = std::pow(4.0, -r) / (factorial_d(n - 1) * factorial_d(n - 2));
  const double x_hi = range_integral(n, P + 1.0, n - 1.0 - r);
  const double x_lo = range_integral(n, P + 1.0, n - 2.0 - r);
  const double y_hi = range_integral(1.0, Q + 1.0, n - 1.0 - r);
  const double y_lo = range_integral(1.0, Q + 1.0, n - 2.0 - r);
  return k * (x_hi * y_lo + x_lo * y_hi);
}

double tail_lower_bound(int n, const Rational& r_exact, long P, long Q) {
  require_dimension(n);
  require_r(r_exact);
  require_cutoffs(P, Q);
  if (r_exact <= n) return kInfinity;
  const double r = r_exact.get_d();
  const double k = std::pow(4.0, -r) / (factorial_d(n - 1) * factorial_d(n - 2));
  // p >= max(P+1, n), q >= 1.
  const double p_start = static_cast<double>(std::max<long>(P + 1, n));
  double out = k * (tail_integral(p_start, n - 1.0 - r) * tail_integral(1.0, n - 2.0 - r) +
                    tail_integral(p_start, n - 2.0 - r) * tail_integral(1.0, n - 1.0 - r));
  // n <= p <= P, q >= Q+1.
  if (P >= n) {
    const double qs = static_cast<double>(Q + 1);
    out += k * (range_integral(n, P + 1.0, n - 1.0 - r) * tail_integral(qs, n - 2.0 - r) +
                range_integral(n, P + 1.0, n - 2.0 - r) * tail_integral(qs, n - 1.0 - r));
  }
  return out;
}

double lower_bound_sum(int n, const Rational& r, long P, long Q) {
  require_dimension(n);
  require_r(r);
  if (P < n) throw DomainError("lower_bound_sum needs P >= n");
  if (Q < 1) throw DomainError("cutoff Q must be >= 1");
  return kernels::omp::lower_bound_sum(n, r.get_d(), P, Q);
}

Rational green_eigenvalue(int n, long p, long q) {
  if (q < 1) throw DomainError("Green operator eigenvalue needs q >= 1");
  return Rational(1, 2 * q * (p + n - 1));
}

Rational exact_term(int n, long r, long p, long q) {
  require_dimension(n);
  const Rational m(multiplicity(n, {static_cast<int>(p), static_cast<int>(q)}));
  return m * pow(green_eigenvalue(n, p, q), r);
}

Rational multiplicity_upper_bound(int n, long p, long q) {
  if (p < 1) throw DomainError("multiplicity_upper_bound needs p >= 1");
  const Integer pair = factorial(static_cast<unsigned long>(n - 1)) * factorial(static_cast<unsigned long>(n - 2));
  Integer num = n + p + q - 1;
  for (int i = 0; i < n - 2; ++i) num *= Integer(p + n - 2) * (q + n - 2);
  Rational out(num, pair);
  out.canonicalize();
  return out;
}

Rational multiplicity_lower_bound(int n, long p, long q) {
  if (p < 1 || q < 1) throw DomainError("multiplicity_lower_bound needs p, q >= 1");
  const Integer pair = factorial(static_cast<unsigned long>(n - 1)) * factorial(static_cast<unsigned long>(n - 2));
  Integer num = p + q;
  for (int i = 0; i < n - 2; ++i) num *= Integer(p) * q;
  Rational out(num, pair);
  out.canonicalize();
  return out;
}

Rational upper_bound_term_exact(int n, long r, long p, long q) {
  require_dimension(n);
  if (q < 1 || p < 0) throw DomainError("upper_bound_term_exact needs p >= 0, q >= 1");
  if (p == 0) {
    Integer num;
    mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(q + n - 1), static_cast<unsigned long>(n - 1));
    Rational m(num, factorial(static_cast<unsigned long>(n - 1)));
    m.canonicalize();
    return m * pow(Rational(1, 2 * q * (n - 1)), r);
  }
  return multiplicity_upper_bound(n, p, q) * pow(Rational(1, 2 * p * q), r);
}

Rational lower_bound_term_exact(int n, long r, long p, long q) {
  require_dimension(n);
  const Rational lambda = p < n ? Rational(1, 4L * n * q) : Rational(1, 4 * p * q);
  return multiplicity_lower_bound(n, p, q) * pow(lambda, r);
}

SandwichResult termwise_sandwich(int n, long r, long grid) {
  require_dimension(n);
  require_r(Rational(r));
  SandwichResult out;
  auto fail = [&](long p, long q, const std::string& what) {
    out.failures.push_back("n=" + std::to_string(n) + " r=" + std::to_string(r) + " (p,q)=(" + std::to_string(p) +
                           "," + std::to_string(q) + "): " + what);
  };
  for (long q = 1; q <= grid; ++q) {
    for (long p = 0; p <= grid; ++p) {
      ++out.cells_checked;
      const Rational m(multiplicity(n, {static_cast<int>(p), static_cast<int>(q)}));
      const Rational lambda = green_eigenvalue(n, p, q);
      const Rational term = exact_term(n, r, p, q);
      if (term > upper_bound_term_exact(n, r, p, q)) fail(p, q, "term exceeds upper bound");
      if (p == 0) continue;
      if (m > multiplicity_upper_bound(n, p, q)) fail(p, q, "multiplicity above upper bound");
      if (!(lambda < Rational(1, 2 * p * q))) fail(p, q, "eigenvalue not below 1/(2pq)");
      if (m < multiplicity_lower_bound(n, p, q)) fail(p, q, "multiplicity below lower bound");
      const Rational lambda_floor = p < n ? Rational(1, 4L * n * q) : Rational(1, 4 * p * q);
      if (lambda < lambda_floor) fail(p, q, "eigenvalue below case bound");
      if (lower_bound_term_exact(n, r, p, q) > term) fail(p, q, "lower bound exceeds term");
    }
  }
  return out;
}

DivergenceWitness divergence_witness(int n, const Rational& r, long base_cutoff, double factor, int max_doublings,
                                     long direct_limit) {
  require_dimension(n);
  require_r(r);
  if (base_cutoff < n) throw DomainError("divergence_witness needs base_cutoff >= n");
  DivergenceWitness w;
  w.baseline = lower_bound_sum(n, r, base_cutoff, base_cutoff);
  w.target = factor * w.baseline;
  const double rd = r.get_d();
  double cutoff = static_cast<double>(base_cutoff);
  for (int j = 1; j <= max_doublings; ++j) {
    cutoff *= 2.0;
    double value = 0.0;
    if (cutoff <= static_cast<double>(direct_limit)) {
      value = lower_bound_sum(n, r, static_cast<long>(cutoff), static_cast<long>(cutoff));
      w.used_integral = false;
    } else if (rd >= n - 1.0) {
      value = lower_bound_integral(n, rd, cutoff, cutoff);
      w.used_integral = true;
    } else {
      break;
    }
    w.doublings = j;
    w.final_cutoff = cutoff;
    w.certified_value = value;
    if (value > w.target) {
      w.certified = true;
      break;
    }
  }
  return w;
}

ConvergenceBracket convergence_bracket(int n, const Rational& r, long start_cutoff, long max_cutoff, double tolerance) {
  require_dimension(n);
  require_r(r);
  if (start_cutoff < 1) throw DomainError("start_cutoff must be >= 1");
  ConvergenceBracket b;
  for (long c = start_cutoff;; c = std::min(2 * c, max_cutoff)) {
    b.P = c;
    b.Q = c;
    b.partial = partial_sum_float(n, r.get_d(), c, c);
    b.tail_upper = tail_upper_bound(n, r, c, c);
    b.relative_width = b.tail_upper / b.partial;
    if (b.relative_width <= tolerance || c >= max_cutoff) break;
  }
  return b;
}

double approx_formula(int n, double r) {
  require_dimension(n);
  if (!(r > n)) throw DomainError("approx_formula needs r > n");
  const double denom = std::pow(4.0, r) * (r - n) * (r - n + 1.0) * std::pow(static_cast<double>(n), r - n) * (n - 1.0) *
                       factorial_d(n - 1) * factorial_d(n - 2);
  return r / denom + n / std::pow(2.0 * n - 2.0, r);
}

double approx_pole_residue(int n) {
  require_dimension(n);
  return n / (std::pow(4.0, n) * (n - 1.0) * factorial_d(n - 1) * factorial_d(n - 2));
}

SchattenReport schatten_report(int n, const Rational& r, long P, long Q, long exact_term_limit) {
  require_dimension(n);
  require_r(r);
  require_cutoffs(P, Q);
  SchattenReport rep;
  rep.n = n;
  rep.r = r;
  rep.cutoff_p = P;
  rep.cutoff_q = Q;
  if (is_integer(r) && (P + 1) * Q <= exact_term_limit) {
    rep.partial_sum = MixedValue::from_exact(partial_sum_exact(n, r.get_num().get_si(), P, Q));
  } else {
    rep.partial_sum = MixedValue::from_float(partial_sum_float(n, r.get_d(), P, Q));
  }
  rep.verdict = verdict(n, r);
  rep.tail_upper = tail_upper_bound(n, r, P, Q);
  rep.tail_lower = tail_lower_bound(n, r, P, Q);
  if (rep.verdict == Verdict::Converges) rep.approx_value = approx_formula(n, r.get_d());
  return rep;
}

std::vector<PlotPoint> partial_sum_series(int n, const Rational& r, long max_cutoff) {
  require_r(r);
  if (max_cutoff < 1) throw DomainError("max_cutoff must be >= 1");
  std::vector<PlotPoint> out;
  for (long c = 1;; c = std::min(2 * c, max_cutoff)) {
    out.push_back({c, partial_sum_float(n, r.get_d(), c, c), tail_upper_bound(n, r, c, c)});
    if (c >= max_cutoff) break;
  }
  return out;
}

}  // namespace kohn
