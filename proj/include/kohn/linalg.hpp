// Dense exact linear algebra over the Gaussian rationals.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kohn/scalar.hpp"

namespace kohn {

class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  ExactScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const ExactScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<ExactScalar> data_;
};

using ExactVector = std::vector<ExactScalar>;

/// Reduced row echelon form in place. Pivots are chosen as the first
/// nonzero entry scanning down each column. Returns the pivot columns.
std::vector<std::size_t> reduce_to_rref(ExactMatrix& m);

std::size_t rank(ExactMatrix m);

/// Basis of {x : A x = 0}; one vector per free column, with a 1 in that
/// column, in increasing free-column order.
std::vector<ExactVector> kernel_basis(ExactMatrix a);

/// The unique solution of A x = b. Throws std::logic_error if the system is
/// inconsistent or has a nontrivial kernel.
ExactVector solve_unique(const ExactMatrix& a, const ExactVector& b);

}  // namespace kohn
