// The bundled oracle suite behind `kohn-spectra verify`.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kohn/json_io.hpp"

namespace kohn {

struct VerifyOptions {
  int n = 2;
  int max_degree = 3;
  std::uint64_t seed = 20190601;
  int samples = 20;         // random polynomials for residual and gain checks
  int terms_per_sample = 6;
  long sandwich_grid = 20;  // p, q range of the Schatten termwise check
};

/// Checks the closed-form sphere integral against the |z|^2 recursion
/// sum_j I(alpha + e_j) = I(alpha), permutation symmetry, and I(0) = 1 for
/// all |alpha| <= max_degree. Returns the failures.
std::vector<std::string> check_sphere_integral_recursion(int n, int max_degree);

struct VerifyOutcome {
  bool passed = false;
  Json report;
};

VerifyOutcome run_verification(const VerifyOptions& options);

}  // namespace kohn
