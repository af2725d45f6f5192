#pragma once

#include <concepts>
#include <optional>
#include <string>

#include "morlog/bigrat.hpp"
#include "morlog/errors.hpp"
#include "morlog/padic.hpp"

namespace morlog {

// A commutative ring given as a context object. Elements are plain values;
// every operation goes through the ring so that contexts (primes,
// precisions, relations) never have to be stored per element.
//
// Partial operations return std::nullopt when undefined:
//   try_scalar(q)       image of a rational number
//   try_inverse(a)      multiplicative inverse
//   try_divide(a, b)    some c with b*c = a
//   try_divide_int(a,k) some c with k*c = a
template <class R>
concept Ring = requires(const R& r, const typename R::Elem& a, const typename R::Elem& b,
                        const BigInt& k, const BigRat& q) {
  typename R::Elem;
  { r.zero() } -> std::same_as<typename R::Elem>;
  { r.one() } -> std::same_as<typename R::Elem>;
  { r.from_int(k) } -> std::same_as<typename R::Elem>;
  { r.add(a, b) } -> std::same_as<typename R::Elem>;
  { r.sub(a, b) } -> std::same_as<typename R::Elem>;
  { r.neg(a) } -> std::same_as<typename R::Elem>;
  { r.mul(a, b) } -> std::same_as<typename R::Elem>;
  { r.equal(a, b) } -> std::same_as<bool>;
  { r.is_zero(a) } -> std::same_as<bool>;
  { r.try_scalar(q) } -> std::same_as<std::optional<typename R::Elem>>;
  { r.try_inverse(a) } -> std::same_as<std::optional<typename R::Elem>>;
  { r.try_divide(a, b) } -> std::same_as<std::optional<typename R::Elem>>;
  { r.try_divide_int(a, k) } -> std::same_as<std::optional<typename R::Elem>>;
  { r.characteristic() } -> std::same_as<BigInt>;
  { r.is_q_algebra() } -> std::same_as<bool>;
  { r.format(a) } -> std::same_as<std::string>;
  { r.name() } -> std::same_as<std::string>;
};

template <Ring R>
typename R::Elem ring_pow(const R& r, const typename R::Elem& a, unsigned long e) {
  typename R::Elem result = r.one();
  typename R::Elem base = a;
  while (e > 0) {
    if (e & 1UL) result = r.mul(result, base);
    e >>= 1;
    if (e > 0) base = r.mul(base, base);
  }
  return result;
}

template <Ring R>
typename R::Elem scalar_or_throw(const R& r, const BigRat& q) {
  auto s = r.try_scalar(q);
  if (!s) throw DomainError(q.str() + " has no image in " + r.name());
  return *s;
}

template <Ring R>
typename R::Elem scale(const R& r, const BigRat& q, const typename R::Elem& a) {
  return r.mul(scalar_or_throw(r, q), a);
}

/// The field Q.
struct Rationals {
  using Elem = BigRat;
  Elem zero() const { return BigRat(0); }
  Elem one() const { return BigRat(1); }
  Elem from_int(const BigInt& k) const { return BigRat(k); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  std::optional<Elem> try_scalar(const BigRat& q) const { return q; }
  std::optional<Elem> try_inverse(const Elem& a) const {
    if (a.is_zero()) return std::nullopt;
    return BigRat(1) / a;
  }
  std::optional<Elem> try_divide(const Elem& a, const Elem& b) const {
    if (b.is_zero()) return std::nullopt;
    return a / b;
  }
  std::optional<Elem> try_divide_int(const Elem& a, const BigInt& k) const {
    if (k == 0) return std::nullopt;
    return a / BigRat(k);
  }
  BigInt characteristic() const { return 0; }
  bool is_q_algebra() const { return true; }
  std::string format(const Elem& a) const { return a.str(); }
  std::string name() const { return "Q"; }
  BigRat to_rational(const Elem& a) const { return a; }
};

/// The ring Z.
struct Integers {
  using Elem = BigInt;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(const BigInt& k) const { return k; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  bool is_zero(const Elem& a) const { return a == 0; }
  std::optional<Elem> try_scalar(const BigRat& q) const {
    if (!q.is_integer()) return std::nullopt;
    return q.num();
  }
  std::optional<Elem> try_inverse(const Elem& a) const {
    if (a == 1 || a == -1) return a;
    return std::nullopt;
  }
  std::optional<Elem> try_divide(const Elem& a, const Elem& b) const {
    if (b == 0) return a == 0 ? std::optional<Elem>(0) : std::nullopt;
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
    return BigInt(a / b);
  }
  std::optional<Elem> try_divide_int(const Elem& a, const BigInt& k) const { return try_divide(a, k); }
  BigInt characteristic() const { return 0; }
  bool is_q_algebra() const { return false; }
  std::string format(const Elem& a) const { return a.get_str(); }
  std::string name() const { return "Z"; }
  BigRat to_rational(const Elem& a) const { return BigRat(a); }
  std::optional<Elem> from_rational(const BigRat& q) const { return try_scalar(q); }
};

/// Z_p at working precision N; equivalently the exact ring Z/p^N when no
/// division by p is performed. Precision loss is tracked per element.
class PadicRing {
 public:
  using Elem = PadicInt;
  PadicRing(long p, long precision) : p_(p), prec_(precision) {
    require_prime(p);
    if (precision < 1) throw DomainError("PadicRing: precision must be positive");
  }
  long prime() const { return p_; }
  long precision() const { return prec_; }

  Elem zero() const { return PadicInt(p_, prec_, 0); }
  Elem one() const { return PadicInt(p_, prec_, 1); }
  Elem from_int(const BigInt& k) const { return PadicInt(p_, prec_, k); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  std::optional<Elem> try_scalar(const BigRat& q) const {
    if (!q.is_zero() && padic_val_int(q.den(), p_) > 0) return std::nullopt;
    return PadicInt::from_rational(p_, prec_, q);
  }
  std::optional<Elem> try_inverse(const Elem& a) const {
    if (!a.is_unit()) return std::nullopt;
    return a.inverse();
  }
  std::optional<Elem> try_divide(const Elem& a, const Elem& b) const {
    if (b.is_zero() || a.valuation_bound() < b.valuation_bound()) return std::nullopt;
    return a.divide(b);
  }
  std::optional<Elem> try_divide_int(const Elem& a, const BigInt& k) const {
    if (k == 0) return std::nullopt;
    if (a.valuation_bound() < padic_val_int(k, p_)) return std::nullopt;
    return a.divide_int(k);
  }
  /// The exact ring Z/p^N has characteristic p^N.
  BigInt characteristic() const { return pow_int(BigInt(p_), static_cast<unsigned long>(prec_)); }
  bool is_q_algebra() const { return false; }
  std::string format(const Elem& a) const { return a.balanced().get_str(); }
  std::string name() const {
    return "Z_" + std::to_string(p_) + " (mod " + std::to_string(p_) + "^" + std::to_string(prec_) + ")";
  }

 private:
  long p_;
  long prec_;
};

static_assert(Ring<Rationals>);
static_assert(Ring<Integers>);
static_assert(Ring<PadicRing>);

}  // namespace morlog
