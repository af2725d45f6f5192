#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "morlog/burnside.hpp"
#include "morlog/errors.hpp"
#include "morlog/quotient_ring.hpp"
#include "morlog/ring.hpp"
#include "morlog/series.hpp"

namespace morlog {

/// A ring with a Frobenius lift psi (psi(x) = x^p mod p). theta may be given
/// explicitly; otherwise it is (psi(x) - x^p)/p.
template <Ring R>
struct PsiRing {
  using Elem = typename R::Elem;
  using Map = std::function<Elem(const Elem&)>;

  R ring;
  long p;
  Map psi;
  std::optional<Map> theta;
  std::string description;
};

/// Checks psi(ab) = psi(a)psi(b), psi(a+b) = psi(a)+psi(b), psi(1) = 1 and
/// p | psi(a) - a^p on the samples. Returns a description of the first failure.
template <Ring R>
std::optional<std::string> check_psi_ring(const PsiRing<R>& s, const std::vector<typename R::Elem>& samples) {
  const auto& r = s.ring;
  if (!r.equal(s.psi(r.one()), r.one())) return "psi(1) != 1";
  for (size_t i = 0; i < samples.size(); ++i) {
    const auto& a = samples[i];
    const auto& b = samples[(i + 1) % samples.size()];
    if (!r.equal(s.psi(r.mul(a, b)), r.mul(s.psi(a), s.psi(b)))) return "psi not multiplicative at sample " + std::to_string(i);
    if (!r.equal(s.psi(r.add(a, b)), r.add(s.psi(a), s.psi(b)))) return "psi not additive at sample " + std::to_string(i);
    auto diff = r.sub(s.psi(a), ring_pow(r, a, static_cast<unsigned long>(s.p)));
    if (s.theta) {
      if (!r.equal(diff, r.mul(r.from_int(BigInt(s.p)), (*s.theta)(a))))
        return "psi(x) != x^p + p theta(x) at sample " + std::to_string(i);
    } else if (!r.try_divide_int(diff, BigInt(s.p))) {
      return "psi(x) - x^p not divisible by p at sample " + std::to_string(i);
    }
  }
  return std::nullopt;
}

/// theta(x) = (psi(x) - x^p)/p.
template <Ring R>
typename R::Elem theta(const PsiRing<R>& s, const typename R::Elem& x) {
  if (s.theta) return (*s.theta)(x);
  const auto& r = s.ring;
  auto diff = r.sub(s.psi(x), ring_pow(r, x, static_cast<unsigned long>(s.p)));
  auto q = r.try_divide_int(diff, BigInt(s.p));
  if (!q) throw InternalError("theta: psi(x) - x^p = " + r.format(diff) + " is not divisible by p in " + r.name());
  return *q;
}

/// Number of terms of sum_k c_k y^k with v_p(c_k) >= k - 1 - v_p(k) that can
/// matter modulo p^precision: the smallest K with K - 1 - floor(log_p K) >= precision.
long log_series_bound(long p, long precision);

namespace detail {

/// sum_{k>=1} (-1)^{k-1} p^{k-1} y^k / k. In a Q-algebra, or when
/// precision <= 0, y must be nilpotent and the sum is exact; otherwise terms
/// past log_series_bound vanish modulo p^precision and are dropped.
template <Ring R>
typename R::Elem p_scaled_log(const R& r, long p, const typename R::Elem& y, long precision, const char* who) {
  constexpr long kMaxExactTerms = 4096;
  const bool exact = r.is_q_algebra() || precision <= 0;
  const long bound = exact ? kMaxExactTerms : log_series_bound(p, precision);
  auto total = r.zero();
  auto power = y;
  for (long k = 1;; ++k) {
    if (r.is_zero(power)) return total;
    if (k >= bound) {
      if (exact)
        throw PrecisionError(std::string(who) + ": series does not terminate (argument not nilpotent in " + r.name() + ")");
      return total;
    }
    BigRat c = BigRat(pow_int(BigInt(p), static_cast<unsigned long>(k - 1))) / BigRat(k);
    if (k % 2 == 0) c = BigRat(0) - c;
    total = r.add(total, scale(r, c, power));
    power = r.mul(power, y);
  }
}

template <Ring R>
typename R::Elem pow_signed(const R& r, const typename R::Elem& x, const BigInt& e) {
  if (e >= 0) return ring_pow(r, x, e.get_ui());
  auto inv = r.try_inverse(x);
  if (!inv) throw DomainError("negative power of a non-unit " + r.format(x) + " in " + r.name());
  BigInt m = -e;
  return ring_pow(r, *inv, m.get_ui());
}

}  // namespace detail

/// l(x) = sum_{k>=1} (-1)^k (p^{k-1}/k) (theta(x)/x^p)^k, which equals
/// (1/p) log(x^p / psi(x)). Terms that vanish modulo p^precision are dropped;
/// precision <= 0 asks for the exact sum (theta(x)/x^p must be nilpotent).
template <Ring R>
typename R::Elem k1_log(const PsiRing<R>& s, const typename R::Elem& x, long precision) {
  const auto& r = s.ring;
  auto inv = r.try_inverse(x);
  if (!inv) throw DomainError("k1_log: " + r.format(x) + " is not a unit in " + r.name());
  auto y = r.mul(theta(s, x), ring_pow(r, *inv, static_cast<unsigned long>(s.p)));
  // sum (-1)^k p^{k-1} y^k / k = -(sum (-1)^{k-1} p^{k-1} y^k / k)
  return r.neg(detail::p_scaled_log(r, s.p, y, precision, "k1_log"));
}

/// log(x) = sum (-1)^{k-1} (x-1)^k / k for x - 1 nilpotent in a Q-algebra.
template <Ring R>
typename R::Elem rational_log(const R& r, const typename R::Elem& x, size_t max_terms = 4096) {
  if (!r.is_q_algebra()) throw DomainError("rational_log: " + r.name() + " is not a Q-algebra");
  auto a = r.sub(x, r.one());
  auto total = r.zero();
  auto power = a;
  for (size_t k = 1; k <= max_terms; ++k) {
    if (r.is_zero(power)) return total;
    auto term = r.try_divide_int(power, BigInt(static_cast<unsigned long>(k)));
    if (!term) throw InternalError("rational_log: division by an integer failed in a Q-algebra");
    total = (k % 2 == 1) ? r.add(total, *term) : r.sub(total, *term);
    power = r.mul(power, a);
  }
  throw DomainError("rational_log: x - 1 is not nilpotent within " + std::to_string(max_terms) + " steps");
}

/// A ring with commuting endomorphisms psi_A indexed by the subgroups A of
/// (Z/p)^n; psi at the trivial subgroup is the identity.
template <Ring R>
struct PowerOpRing {
  using Elem = typename R::Elem;
  using Map = std::function<Elem(const Elem&)>;

  R ring;
  long p;
  int n;
  SubgroupTablePtr subgroups;
  std::vector<Map> psi;  // indexed like `subgroups`
};

/// Exponent (-1)^j p^{(j-1)(j-2)/2} of the order-p^j factor in 1 + p M(x).
BigInt morava_exponent(int j, long p);

/// Synthetic power operations on Base[e]/(e^m): psi_A(e) = c_A e, with
/// c at the trivial subgroup forced to 1.
template <Ring Base>
PowerOpRing<PolyQuotient<Base>> scaled_power_ops(const PolyQuotient<Base>& ring, long p, int n,
                                                  std::vector<typename Base::Elem> scalars) {
  auto table = SubgroupTable::build(FinAbPGroup::homocyclic(p, 1, n));
  if (scalars.size() != table->size())
    throw DomainError("scaled_power_ops: need one scalar per subgroup of (Z/p)^n (" + std::to_string(table->size()) + ")");
  if (!ring.relation_is_nilpotent()) throw DomainError("scaled_power_ops: ring must be truncated polynomial");
  scalars[table->trivial()] = ring.base().one();
  PowerOpRing<PolyQuotient<Base>> out{ring, p, n, table, {}};
  for (const auto& c : scalars) {
    auto image = ring.monomial(1, c);
    out.psi.push_back([ring, image](const typename PolyQuotient<Base>::Elem& a) { return ring.substitute(a, image); });
  }
  return out;
}

/// prod_j (prod_{|A| = p^j} psi_A(x))^{(-1)^j p^{(j-1)(j-2)/2}}, which is 1 + p M(x).
template <Ring R>
typename R::Elem morava_product(const PowerOpRing<R>& s, const typename R::Elem& x) {
  const auto& r = s.ring;
  const auto& t = *s.subgroups;
  auto prod = r.one();
  for (size_t a = 0; a < t.size(); ++a) {
    BigInt e = morava_exponent(t.log_order(a), s.p);
    prod = r.mul(prod, detail::pow_signed(r, s.psi[a](x), e));
  }
  return prod;
}

template <Ring R>
typename R::Elem morava_M(const PowerOpRing<R>& s, const typename R::Elem& x) {
  const auto& r = s.ring;
  auto prod = morava_product(s, x);
  auto m = r.try_divide_int(r.sub(prod, r.one()), BigInt(s.p));
  if (!m)
    throw DomainError("morava_M: product " + r.format(prod) + " is not congruent to 1 mod p in " + r.name());
  return *m;
}

/// sum (-1)^{k-1} p^{k-1} M(x)^k / k = (1/p) log(1 + p M(x)).
template <Ring R>
typename R::Elem morava_log(const PowerOpRing<R>& s, const typename R::Elem& x, long precision) {
  return detail::p_scaled_log(s.ring, s.p, morava_M(s, x), precision, "morava_log");
}

template <class E>
struct HeckeFormReport {
  E log_side;    // morava_log(x)
  E hecke_side;  // F_1 applied to log(x)
  bool equal = false;
};

/// Compares morava_log(x) with sum_j (-1)^j p^{j(j-1)/2} p^{-j} sum_{|A|=p^j} psi_A(log x).
template <Ring R>
HeckeFormReport<typename R::Elem> hecke_form_check(const PowerOpRing<R>& s, const typename R::Elem& x) {
  const auto& r = s.ring;
  const auto& t = *s.subgroups;
  auto lx = rational_log(r, x);
  auto rhs = r.zero();
  for (size_t a = 0; a < t.size(); ++a) {
    int j = t.log_order(a);
    BigRat c = BigRat(pow_int(BigInt(s.p), static_cast<unsigned long>(j * (j - 1) / 2))) /
               BigRat(pow_int(BigInt(s.p), static_cast<unsigned long>(j)));
    if (j % 2 == 1) c = BigRat(0) - c;
    rhs = r.add(rhs, scale(r, c, s.psi[a](lx)));
  }
  HeckeFormReport<typename R::Elem> rep{morava_log(s, x, 0), rhs, false};
  rep.equal = r.equal(rep.log_side, rep.hecke_side);
  return rep;
}

template <class E>
struct WittVector {
  long p;
  std::vector<E> components;
};

/// W_k = sum_{i<=k} p^i Theta_i^{p^{k-i}}.
template <Ring R>
std::vector<typename R::Elem> ghost_from_witt(const R& r, const WittVector<typename R::Elem>& w) {
  std::vector<typename R::Elem> ghosts;
  for (size_t k = 0; k < w.components.size(); ++k) {
    auto g = r.zero();
    for (size_t i = 0; i <= k; ++i) {
      auto e = pow_int(BigInt(w.p), static_cast<unsigned long>(k - i));
      auto term = ring_pow(r, w.components[i], e.get_ui());
      g = r.add(g, r.mul(r.from_int(pow_int(BigInt(w.p), static_cast<unsigned long>(i))), term));
    }
    ghosts.push_back(g);
  }
  return ghosts;
}

/// Theta_k = (W_k - sum_{i<k} p^i Theta_i^{p^{k-i}}) / p^k; DomainError naming k on failure.
template <Ring R>
WittVector<typename R::Elem> witt_from_ghost(const R& r, long p, const std::vector<typename R::Elem>& ghosts) {
  WittVector<typename R::Elem> w{p, {}};
  for (size_t k = 0; k < ghosts.size(); ++k) {
    auto rest = ghosts[k];
    for (size_t i = 0; i < k; ++i) {
      auto e = pow_int(BigInt(p), static_cast<unsigned long>(k - i));
      auto term = ring_pow(r, w.components[i], e.get_ui());
      rest = r.sub(rest, r.mul(r.from_int(pow_int(BigInt(p), static_cast<unsigned long>(i))), term));
    }
    auto q = r.try_divide_int(rest, pow_int(BigInt(p), static_cast<unsigned long>(k)));
    if (!q)
      throw DomainError("witt_from_ghost: component " + std::to_string(k) + " is not divisible by p^" +
                        std::to_string(k) + " in " + r.name());
    w.components.push_back(*q);
  }
  return w;
}

/// theta_0(x), ..., theta_{m-1}(x): Witt components of the ghosts x, psi(x), psi(psi(x)), ...
template <Ring R>
std::vector<typename R::Elem> theta_tower(const PsiRing<R>& s, const typename R::Elem& x, size_t m) {
  std::vector<typename R::Elem> ghosts;
  auto g = x;
  for (size_t k = 0; k < m; ++k) {
    ghosts.push_back(g);
    g = s.psi(g);
  }
  return witt_from_ghost(s.ring, s.p, ghosts).components;
}

/// exp(sum_{p^j <= D} T^{p^j} / p^j), coefficients of T^0..T^D.
TruncSeries<BigRat> artin_hasse(long p, size_t degree);

/// Reason the product prod_i f(theta_i(alpha)) is finite at working precision.
///
/// Nilpotent: `order` is a filtration degree with order(generator) = 1,
/// order >= nilpotency meaning zero, and psi multiplying it by at least p
/// (checked on the generator);
/// then theta_i(alpha) vanishes once p^i >= nilpotency.
/// Valuation: weight(theta_i(alpha)) must start >= 1 and increase strictly
/// until it reaches cutoff, where elements vanish at working precision.
template <class E>
struct ConvergenceWitness {
  enum class Kind { Nilpotent, Valuation };
  Kind kind;
  std::function<size_t(const E&)> order;
  E generator;
  size_t nilpotency = 0;
  std::function<long(const E&)> weight;
  long cutoff = 0;

  static ConvergenceWitness nilpotent(std::function<size_t(const E&)> order, E generator, size_t nilpotency) {
    return {Kind::Nilpotent, std::move(order), std::move(generator), nilpotency, {}, 0};
  }
  static ConvergenceWitness valuation(std::function<long(const E&)> weight, long cutoff, E zero) {
    return {Kind::Valuation, {}, std::move(zero), 0, std::move(weight), cutoff};
  }
};

namespace detail {

/// f(z) = sum a_k z^k with f the Artin-Hasse series; stops when z^k vanishes
/// or, given a weight, when k * weight(z) reaches cutoff.
template <Ring R>
typename R::Elem artin_hasse_at(const R& r, long p, const typename R::Elem& z, size_t max_degree) {
  auto f = artin_hasse(p, max_degree);
  auto total = r.one();
  auto power = z;
  for (size_t k = 1; k <= max_degree; ++k) {
    if (r.is_zero(power)) return total;
    total = r.add(total, scale(r, f[k], power));
    power = r.mul(power, z);
  }
  return total;
}

}  // namespace detail

/// e(alpha) = prod_{i>=0} f(theta_i(alpha)) with f the Artin-Hasse
/// exponential. The witness is checked; DomainError if it does not hold.
template <Ring R>
typename R::Elem k1_exp(const PsiRing<R>& s, const typename R::Elem& alpha,
                        const ConvergenceWitness<typename R::Elem>& w) {
  using W = ConvergenceWitness<typename R::Elem>;
  const auto& r = s.ring;
  const long p = s.p;
  if (r.is_zero(alpha)) return r.one();
  if (w.kind == W::Kind::Nilpotent) {
    if (w.nilpotency < 1) throw DomainError("k1_exp: nilpotency must be >= 1");
    if (w.order(w.generator) != 1) throw DomainError("k1_exp: witness generator must have order 1");
    if (!r.is_zero(ring_pow(r, w.generator, w.nilpotency)))
      throw DomainError("k1_exp: generator^" + std::to_string(w.nilpotency) + " is nonzero");
    size_t psi_order = w.order(s.psi(w.generator));
    if (psi_order < w.nilpotency && psi_order < static_cast<size_t>(p))
      throw DomainError("k1_exp: psi does not raise the filtration by a factor of p");
    if (w.order(alpha) < 1) throw DomainError("k1_exp: alpha must lie in positive filtration");
    size_t count = 0;
    for (BigInt q = 1; q < BigInt(static_cast<unsigned long>(w.nilpotency)); q *= p) ++count;
    auto thetas = theta_tower(s, alpha, count + 1);
    if (!r.is_zero(thetas[count])) throw InternalError("k1_exp: theta tower did not vanish where the filtration forces it");
    auto result = r.one();
    for (size_t i = 0; i < count; ++i)
      result = r.mul(result, detail::artin_hasse_at(r, p, thetas[i], w.nilpotency));
    return result;
  }
  if (w.cutoff < 1) throw DomainError("k1_exp: cutoff must be >= 1");
  auto result = r.one();
  long previous = 0;
  for (size_t i = 0;; ++i) {
    if (static_cast<long>(i) > w.cutoff + 1) throw DomainError("k1_exp: theta tower does not reach the cutoff");
    auto th = theta_tower(s, alpha, i + 1)[i];
    if (r.is_zero(th)) break;
    long v = w.weight(th);
    if (v >= w.cutoff) break;
    if (v < 1 || (i > 0 && v <= previous))
      throw DomainError("k1_exp: weight of theta_" + std::to_string(i) + " is " + std::to_string(v) +
                        ", valuations do not increase");
    previous = v;
    size_t degree = static_cast<size_t>(w.cutoff / v + 1);
    result = r.mul(result, detail::artin_hasse_at(r, p, th, degree));
  }
  return result;
}

struct AdamsSymmetricReport {
  int variables = 0;
  int degree = 0;
  /// matches[k]: coefficient of t^k agrees, k = 0..degree.
  std::vector<bool> matches;
  std::vector<std::string> coefficients;  // h_k as expanded polynomials
  bool ok() const {
    for (bool b : matches)
      if (!b) return false;
    return true;
  }
};

/// Compares sum_k h_k t^k with exp(sum_k psi^k(x_1 + ... + x_m) t^k / k)
/// through t^D in Q[x_1..x_m]; DomainError if D > m.
AdamsSymmetricReport adams_to_symmetric(int m, int degree);

}  // namespace morlog
