#include "kohn/linalg.hpp"

#include <stdexcept>

namespace kohn {

std::vector<std::size_t> reduce_to_rref(ExactMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    }
    const ExactScalar inv = ExactScalar(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) {
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const ExactScalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(ExactMatrix m) { return reduce_to_rref(m).size(); }

std::vector<ExactVector> kernel_basis(ExactMatrix a) {
  const auto pivots = reduce_to_rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<ExactVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    ExactVector v(a.cols());
    v[free] = ExactScalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

ExactVector solve_unique(const ExactMatrix& a, const ExactVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_unique: right-hand side has wrong length");
  ExactMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const auto pivots = reduce_to_rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) throw std::logic_error("solve_unique: inconsistent system");
  if (pivots.size() != a.cols()) throw std::logic_error("solve_unique: singular system");
  ExactVector x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

}  // namespace kohn
