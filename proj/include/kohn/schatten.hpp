// Schatten r-norms of the complex Green operator on S^{2n-1}:
//
//   ||G||_r^r = sum_{q>=1} sum_{p>=0} m_{p,q} / (2q(p+n-1))^r,
//
// finite exactly when r > n. Partial sums are certified from above by
// closed-form integral-test tails and from below by a comparison series
// whose growth witnesses divergence.
#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "kohn/scalar.hpp"

namespace kohn {

enum class Verdict { Converges, Diverges };

std::string to_string(Verdict v);

/// Converges iff r > n; r = n is Diverges. Requires r >= 1.
Verdict verdict(int n, const Rational& r);

/// sum_{q=1}^{Q} sum_{p=0}^{P} m_{p,q} (2q(p+n-1))^{-r}. Exact when r is an
/// integer, otherwise a float accumulated in ascending order.
MixedValue partial_sum(int n, const Rational& r, long P, long Q);
Rational partial_sum_exact(int n, long r, long P, long Q);
double partial_sum_float(int n, double r, long P, long Q);

/// Rigorous upper bound (up to float rounding) for the terms left out of
/// partial_sum(n, r, P, Q), i.e. the region {q > Q} U {q <= Q, p > P}.
/// +infinity when r <= n.
double tail_upper_bound(int n, const Rational& r, long P, long Q);

/// Lower bound for the same discarded terms: integrals of the comparison
/// integrand over {p > P, p >= n} and {n <= p <= P, q > Q}. +infinity when r <= n.
double tail_lower_bound(int n, const Rational& r, long P, long Q);

/// sum_{q=1}^{Q} sum_{p=n}^{P} (p+q) p^{n-2} q^{n-2} / ((4pq)^r (n-1)!(n-2)!),
/// which is below the matching part of ||G||_r^r term by term. Requires P >= n.
double lower_bound_sum(int n, const Rational& r, long P, long Q);

/// int_n^{P+1} int_1^{Q+1} of the lower_bound_sum integrand, in closed form.
/// The integrand decreases in p and q once r >= n-1, so this never exceeds
/// lower_bound_sum(n, r, P, Q); valid for cutoffs far beyond direct summation.
double lower_bound_integral(int n, double r, double P, double Q);

// Exact termwise quantities for integer r.
Rational exact_term(int n, long r, long p, long q);
/// m_{p,q} upper bound times the eigenvalue bound used in the convergence
/// argument: 1/(2pq) for p >= 1, exact 1/(2q(n-1)) with the binomial
/// bound (q+n-1)^{n-1}/(n-1)! for p = 0.
Rational upper_bound_term_exact(int n, long r, long p, long q);
/// (p+q) p^{n-2} q^{n-2}/((n-1)!(n-2)!) times (1/(4nq))^r for p < n or
/// (1/(4pq))^r for p >= n. Requires p, q >= 1.
Rational lower_bound_term_exact(int n, long r, long p, long q);
Rational multiplicity_upper_bound(int n, long p, long q);  // p >= 1
Rational multiplicity_lower_bound(int n, long p, long q);  // p, q >= 1
Rational green_eigenvalue(int n, long p, long q);          // 1/(2q(p+n-1)), q >= 1

struct SandwichResult {
  long cells_checked = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// Exact termwise checks on 0 <= p <= grid, 1 <= q <= grid for integer r:
/// the multiplicity and eigenvalue bounds separately, then
/// lower_bound_term_exact <= exact_term <= upper_bound_term_exact (the lower
/// side for p >= 1).
SandwichResult termwise_sandwich(int n, long r, long grid);

struct DivergenceWitness {
  double baseline = 0.0;           // lower_bound_sum at the base cutoff
  double target = 0.0;             // factor * baseline
  double certified_value = 0.0;    // certified lower bound at the final cutoff
  double final_cutoff = 0.0;
  int doublings = 0;
  bool certified = false;
  bool used_integral = false;      // final value came from lower_bound_integral
};

/// Doubles P = Q from base_cutoff until lower_bound_sum is certified to
/// exceed factor * lower_bound_sum(base, base). Direct summation is used up
/// to direct_limit, the closed-form integral beyond it.
DivergenceWitness divergence_witness(int n, const Rational& r, long base_cutoff, double factor, int max_doublings,
                                     long direct_limit = 4096);

struct ConvergenceBracket {
  long P = 0;
  long Q = 0;
  double partial = 0.0;
  double tail_upper = 0.0;
  double relative_width = 0.0;  // tail_upper / partial
};

/// Doubles P = Q from start_cutoff up to max_cutoff until the bracket
/// [partial, partial + tail_upper] has relative width <= tolerance, returning
/// the last bracket computed.
ConvergenceBracket convergence_bracket(int n, const Rational& r, long start_cutoff, long max_cutoff, double tolerance);

/// r / (4^r (r-n)(r-n+1) n^{r-n} (n-1)(n-1)!(n-2)!) + n / (2n-2)^r, r > n.
double approx_formula(int n, double r);
/// lim_{r -> n+} (r-n) approx_formula(n, r) = n / (4^n (n-1)(n-1)!(n-2)!).
double approx_pole_residue(int n);

struct SchattenReport {
  int n = 0;
  Rational r;
  long cutoff_p = 0;
  long cutoff_q = 0;
  MixedValue partial_sum;
  double tail_upper = 0.0;  // +infinity when diverging
  double tail_lower = 0.0;  // +infinity when diverging
  Verdict verdict = Verdict::Diverges;
  std::optional<double> approx_value;  // only for r > n
};

/// Exact partial sums are used for integer r while (P+1)*Q <= exact_term_limit.
SchattenReport schatten_report(int n, const Rational& r, long P, long Q, long exact_term_limit = 40000);

struct PlotPoint {
  long cutoff = 0;
  double partial_sum = 0.0;
  double tail_upper = 0.0;
};

/// (cutoff, partial sum, tail bound) at P = Q = 1, 2, 4, ... and finally max_cutoff.
std::vector<PlotPoint> partial_sum_series(int n, const Rational& r, long max_cutoff);

}  // namespace kohn
