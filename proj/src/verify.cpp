#include "kohn/verify.hpp"

#include <algorithm>
#include <random>

#include "kohn/errors.hpp"

namespace kohn {

std::vector<std::string> check_sphere_integral_recursion(int n, int max_degree) {
  require_dimension(n);
  std::vector<std::string> failures;
  if (monomial_sphere_integral(Multiindex::zero(n)) != 1) failures.push_back("<1,1> != 1");
  for (int d = 0; d < max_degree; ++d) {
    for (const auto& alpha : multiindices_of_degree(n, d)) {
      Rational lifted = 0;
      for (int j = 0; j < n; ++j) lifted += monomial_sphere_integral(alpha + Multiindex::unit(n, j));
      if (lifted != monomial_sphere_integral(alpha)) {
        failures.push_back("|z|^2 recursion fails at degree " + std::to_string(d));
      }
      auto reversed = alpha.entries();
      std::reverse(reversed.begin(), reversed.end());
      if (monomial_sphere_integral(Multiindex(reversed)) != monomial_sphere_integral(alpha)) {
        failures.push_back("permutation symmetry fails at degree " + std::to_string(d));
      }
    }
  }
  return failures;
}

VerifyOutcome run_verification(const VerifyOptions& options) {
  const int n = options.n;
  require_dimension(n);
  if (options.max_degree < 1) throw DomainError("max_degree must be >= 1");
  bool passed = true;
  Json report;
  report["n"] = n;
  report["max_degree"] = options.max_degree;
  report["seed"] = options.seed;

  const auto integral_failures = check_sphere_integral_recursion(n, options.max_degree);
  report["sphere_integral"] = {{"status", integral_failures.empty() ? "pass" : "fail"},
                               {"counterexamples", integral_failures}};
  passed = passed && integral_failures.empty();

  const auto eigen = verify_eigen_identities(n, options.max_degree);
  report["harmonic_spaces"] = verification_report_to_json(eigen);
  passed = passed && eigen.passed();

  std::mt19937_64 rng(options.seed);
  std::vector<Polynomial> samples;
  for (int i = 0; i < options.samples; ++i) {
    samples.push_back(random_polynomial(n, options.max_degree, options.terms_per_sample, rng));
  }

  Json residuals = Json::array();
  bool residuals_ok = true;
  for (const auto& f : samples) {
    const Rational res = residual_check(f);
    if (sgn(res) != 0) {
      residuals_ok = false;
      residuals.push_back({{"polynomial", polynomial_to_json(f)}, {"residual", to_string(res)}});
    }
  }
  report["canonical_solution"] = {{"status", residuals_ok ? "pass" : "fail"},
                                  {"samples", options.samples},
                                  {"counterexamples", residuals}};
  passed = passed && residuals_ok;

  Json sandwich = Json::array();
  bool sandwich_ok = true;
  for (long r : {static_cast<long>(n) + 1, static_cast<long>(n) + 2}) {
    const auto result = termwise_sandwich(n, r, options.sandwich_grid);
    sandwich_ok = sandwich_ok && result.passed();
    sandwich.push_back({{"r", r},
                        {"grid", options.sandwich_grid},
                        {"cells", result.cells_checked},
                        {"status", result.passed() ? "pass" : "fail"},
                        {"counterexamples", result.failures}});
  }
  report["schatten_sandwich"] = std::move(sandwich);
  passed = passed && sandwich_ok;

  Json gains = Json::array();
  bool gains_ok = true;
  for (const auto& f : samples) {
    for (long s : {0L, 1L}) {
      const auto cert = sobolev_gain_certificate(n, f, s);
      if (!cert.holds) {
        gains_ok = false;
        Json bad = gain_certificate_to_json(cert);
        bad["polynomial"] = polynomial_to_json(f);
        gains.push_back(std::move(bad));
      }
    }
  }
  report["sobolev_gain"] = {{"status", gains_ok ? "pass" : "fail"},
                            {"certificates", 2 * options.samples},
                            {"counterexamples", gains}};
  passed = passed && gains_ok;

  report["passed"] = passed;
  return {passed, std::move(report)};
}

}  // namespace kohn
