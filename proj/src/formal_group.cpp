#include "morlog/formal_group.hpp"

namespace morlog::detail {

std::vector<std::vector<BigRat>> honda_coefficients(long p, int n, size_t degree) {
  Rationals q;
  const size_t order = degree + 1;
  auto f = series_zero(q, order);
  BigInt step = pow_int(BigInt(p), static_cast<unsigned long>(n));
  BigInt deg(1);
  for (long i = 0; deg < BigInt(static_cast<unsigned long>(order)); ++i, deg *= step)
    f[deg.get_ui()] = BigRat(1) / BigRat(pow_int(BigInt(p), static_cast<unsigned long>(i)));
  auto g = series_reversion(q, f);

  MultiSeries<Rationals> u(q, 2, degree);
  for (size_t k = 1; k <= degree; ++k) {
    u.at({k, 0}) = f[k];
    u.at({0, k}) = f[k];
  }
  MultiSeries<Rationals> result(q, 2, degree);
  for (size_t k = order; k-- > 0;) {
    result = result.mul(q, u);
    result.at({0, 0}) = result.at({0, 0}) + g[k];
  }
  auto c = triangle<BigRat>(degree, BigRat(0));
  for (size_t i = 0; i <= degree; ++i)
    for (size_t j = 0; i + j <= degree; ++j) c[i][j] = result.at({i, j});
  return c;
}

}  // namespace morlog::detail
