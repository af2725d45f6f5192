#pragma once

#include <string>
#include <vector>

#include "morlog/log_ops.hpp"
#include "morlog/quotient_ring.hpp"
#include "morlog/ring.hpp"

// Built-in psi-ring families shared by the CLI and the acceptance suite.
namespace morlog::instances {

using EpsRing = PolyQuotient<Integers>;
using PadicPolyRing = PolyQuotient<PadicRing>;
using IntPolyRing = PolyQuotient<Integers>;

/// Z_p with psi = id; theta is the Fermat quotient (x - x^p)/p.
inline PsiRing<PadicRing> padic_identity(long p, long precision) {
  return {PadicRing(p, precision), p, [](const PadicInt& x) { return x; }, std::nullopt, "Z_p, psi = id"};
}

/// Scalars lambda with psi(e) = lambda e on Z[e]/(e^2). Each is divisible by
/// p, as the Frobenius congruence psi(e) = e^p = 0 mod p requires.
inline std::vector<long> square_zero_psi_scalars(long p) { return {0, p, -p, 2 * p, p * p}; }

/// Base[e]/(e^m) with psi(e) = lambda e and psi the identity on Base.
template <Ring Base>
PsiRing<PolyQuotient<Base>> scaled_truncated(Base base, long p, int m, long lambda) {
  auto r = PolyQuotient<Base>::truncated(std::move(base), m, "e");
  auto image = r.monomial(1, r.base().from_int(BigInt(lambda)));
  return {r, p, [r, image](const typename PolyQuotient<Base>::Elem& x) { return r.substitute(x, image); },
          std::nullopt, r.name() + ", psi(e) = " + std::to_string(lambda) + "e"};
}

/// Z[e]/(e^2) with psi(e) = lambda e.
inline PsiRing<EpsRing> square_zero(long p, long lambda) { return scaled_truncated(Integers{}, p, 2, lambda); }

/// Base[t]/(t^m) with psi(t) = t^p.
template <Ring Base>
PsiRing<PolyQuotient<Base>> frobenius_truncated(Base base, long p, int m) {
  auto r = PolyQuotient<Base>::truncated(std::move(base), m, "t");
  auto image = r.monomial(static_cast<size_t>(p), r.base().one());
  return {r, p, [r, image](const typename PolyQuotient<Base>::Elem& x) { return r.substitute(x, image); },
          std::nullopt, r.name() + ", psi(t) = t^" + std::to_string(p)};
}

/// Filtration witness for Base[t]/(t^m): the t-adic order.
template <Ring Base>
ConvergenceWitness<typename PolyQuotient<Base>::Elem> t_adic_witness(const PolyQuotient<Base>& r) {
  return ConvergenceWitness<typename PolyQuotient<Base>::Elem>::nilpotent(
      [r](const typename PolyQuotient<Base>::Elem& x) { return r.order(x); }, r.variable(), r.degree());
}

/// Elements of t Z_p[t]/(t^m) used as exponential inputs: sum c_k t^k.
inline std::vector<std::vector<long>> convergent_family() {
  return {{0, 2}, {0, 1}, {0, 1, 0, 1}, {0, 0, 2, 0, 0, -1}, {0, 4, 0, 2, 0, 0, 0, 1}, {0, 3, 1}, {0, -1, 5}};
}

template <Ring Base>
typename PolyQuotient<Base>::Elem from_coeffs(const PolyQuotient<Base>& r, const std::vector<long>& c) {
  auto x = r.zero();
  for (size_t k = 0; k < c.size() && k < r.degree(); ++k) x[k] = r.base().from_int(BigInt(c[k]));
  return x;
}

}  // namespace morlog::instances
