#include <optional>
#include <utility>
#include <vector>

#include "morlog/quotient_ring.hpp"

namespace morlog::detail {

std::optional<std::vector<BigRat>> solve_rational(std::vector<std::vector<BigRat>> m,
                                                  std::vector<BigRat> rhs) {
  const size_t n = rhs.size();
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    const BigRat inv = BigRat(1) / m[col][col];
    for (size_t j = col; j < n; ++j) m[col][j] *= inv;
    rhs[col] *= inv;
    for (size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      const BigRat f = m[row][col];
      for (size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
      rhs[row] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace morlog::detail
