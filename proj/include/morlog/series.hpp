#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "morlog/ring.hpp"

namespace morlog {

/// Univariate power series sum_{k < order} c_k T^k, truncated at T^order.
template <class E>
struct TruncSeries {
  std::vector<E> coeffs;

  size_t order() const { return coeffs.size(); }
  const E& operator[](size_t k) const { return coeffs[k]; }
  E& operator[](size_t k) { return coeffs[k]; }
};

namespace detail {

template <class E>
void require_same_order(const TruncSeries<E>& a, const TruncSeries<E>& b, const char* op) {
  if (a.order() != b.order())
    throw ContextMismatch(std::string(op) + ": truncation orders differ (" + std::to_string(a.order()) +
                          " vs " + std::to_string(b.order()) + ")");
}

}  // namespace detail

template <Ring R>
TruncSeries<typename R::Elem> series_zero(const R& r, size_t order) {
  return {std::vector<typename R::Elem>(order, r.zero())};
}

template <Ring R>
TruncSeries<typename R::Elem> series_constant(const R& r, const typename R::Elem& c, size_t order) {
  auto s = series_zero(r, order);
  if (order > 0) s[0] = c;
  return s;
}

/// c * T^k truncated at order.
template <Ring R>
TruncSeries<typename R::Elem> series_monomial(const R& r, const typename R::Elem& c, size_t k, size_t order) {
  auto s = series_zero(r, order);
  if (k < order) s[k] = c;
  return s;
}

template <Ring R>
TruncSeries<typename R::Elem> series_add(const R& r, const TruncSeries<typename R::Elem>& a,
                                         const TruncSeries<typename R::Elem>& b) {
  detail::require_same_order(a, b, "series_add");
  auto s = a;
  for (size_t k = 0; k < s.order(); ++k) s[k] = r.add(a[k], b[k]);
  return s;
}

template <Ring R>
TruncSeries<typename R::Elem> series_sub(const R& r, const TruncSeries<typename R::Elem>& a,
                                         const TruncSeries<typename R::Elem>& b) {
  detail::require_same_order(a, b, "series_sub");
  auto s = a;
  for (size_t k = 0; k < s.order(); ++k) s[k] = r.sub(a[k], b[k]);
  return s;
}

template <Ring R>
TruncSeries<typename R::Elem> series_scale(const R& r, const typename R::Elem& c,
                                           const TruncSeries<typename R::Elem>& a) {
  auto s = a;
  for (size_t k = 0; k < s.order(); ++k) s[k] = r.mul(c, a[k]);
  return s;
}

template <Ring R>
TruncSeries<typename R::Elem> series_mul(const R& r, const TruncSeries<typename R::Elem>& a,
                                         const TruncSeries<typename R::Elem>& b) {
  detail::require_same_order(a, b, "series_mul");
  const size_t n = a.order();
  auto s = series_zero(r, n);
  for (size_t i = 0; i < n; ++i) {
    if (r.is_zero(a[i])) continue;
    for (size_t j = 0; i + j < n; ++j) {
      if (r.is_zero(b[j])) continue;
      s[i + j] = r.add(s[i + j], r.mul(a[i], b[j]));
    }
  }
  return s;
}

template <Ring R>
bool series_equal(const R& r, const TruncSeries<typename R::Elem>& a, const TruncSeries<typename R::Elem>& b) {
  if (a.order() != b.order()) return false;
  for (size_t k = 0; k < a.order(); ++k)
    if (!r.equal(a[k], b[k])) return false;
  return true;
}

template <Ring R>
bool series_is_zero(const R& r, const TruncSeries<typename R::Elem>& a) {
  for (const auto& c : a.coeffs)
    if (!r.is_zero(c)) return false;
  return true;
}

/// Multiplicative inverse; the constant term must be a unit of the ring.
template <Ring R>
TruncSeries<typename R::Elem> series_inverse(const R& r, const TruncSeries<typename R::Elem>& a) {
  const size_t n = a.order();
  if (n == 0) return a;
  auto c_inv = r.try_inverse(a[0]);
  if (!c_inv) throw DomainError("series_inverse: constant term " + r.format(a[0]) + " is not a unit in " + r.name());
  auto b = series_zero(r, n);
  b[0] = *c_inv;
  for (size_t k = 1; k < n; ++k) {
    auto acc = r.zero();
    for (size_t i = 1; i <= k; ++i) acc = r.add(acc, r.mul(a[i], b[k - i]));
    b[k] = r.neg(r.mul(*c_inv, acc));
  }
  return b;
}

/// f(g(T)) for g with zero constant term.
template <Ring R>
TruncSeries<typename R::Elem> series_compose(const R& r, const TruncSeries<typename R::Elem>& f,
                                             const TruncSeries<typename R::Elem>& g) {
  detail::require_same_order(f, g, "series_compose");
  if (g.order() > 0 && !r.is_zero(g[0])) throw DomainError("series_compose: inner series must have zero constant term");
  const size_t n = f.order();
  auto result = series_zero(r, n);
  for (size_t k = n; k-- > 0;) {
    result = series_mul(r, result, g);
    result[0] = r.add(result[0], f[k]);
  }
  return result;
}

/// exp(a) for a with zero constant term, via n b_n = sum_k k a_k b_{n-k}.
/// Needs division by 1..order-1 in the ring.
template <Ring R>
TruncSeries<typename R::Elem> series_exp(const R& r, const TruncSeries<typename R::Elem>& a) {
  const size_t n = a.order();
  if (n > 0 && !r.is_zero(a[0])) throw DomainError("series_exp: constant term must be zero");
  auto b = series_zero(r, n);
  if (n == 0) return b;
  b[0] = r.one();
  for (size_t m = 1; m < n; ++m) {
    auto acc = r.zero();
    for (size_t k = 1; k <= m; ++k)
      acc = r.add(acc, r.mul(r.from_int(BigInt(static_cast<unsigned long>(k))), r.mul(a[k], b[m - k])));
    auto q = r.try_divide_int(acc, BigInt(static_cast<unsigned long>(m)));
    if (!q) throw DomainError("series_exp: cannot divide by " + std::to_string(m) + " in " + r.name());
    b[m] = *q;
  }
  return b;
}

/// log(a) for a with constant term 1: the integral of a'/a.
template <Ring R>
TruncSeries<typename R::Elem> series_log(const R& r, const TruncSeries<typename R::Elem>& a) {
  const size_t n = a.order();
  if (n > 0 && !r.equal(a[0], r.one())) throw DomainError("series_log: constant term must be 1");
  auto result = series_zero(r, n);
  if (n <= 1) return result;
  auto deriv = series_zero(r, n);
  for (size_t k = 1; k < n; ++k) deriv[k - 1] = r.mul(r.from_int(BigInt(static_cast<unsigned long>(k))), a[k]);
  auto q = series_mul(r, deriv, series_inverse(r, a));
  for (size_t k = 1; k < n; ++k) {
    auto c = r.try_divide_int(q[k - 1], BigInt(static_cast<unsigned long>(k)));
    if (!c) throw DomainError("series_log: cannot divide by " + std::to_string(k) + " in " + r.name());
    result[k] = *c;
  }
  return result;
}

/// Compositional inverse of f = T + (higher terms).
template <Ring R>
TruncSeries<typename R::Elem> series_reversion(const R& r, const TruncSeries<typename R::Elem>& f) {
  const size_t n = f.order();
  if (n < 2 || !r.is_zero(f[0]) || !r.equal(f[1], r.one()))
    throw DomainError("series_reversion: series must be T + O(T^2)");
  auto g = series_monomial(r, r.one(), 1, n);
  // Coefficient k of f(g) is g_k + (terms in g_1..g_{k-1}); fix g_k degree by degree.
  for (size_t k = 2; k < n; ++k) {
    auto fg = series_compose(r, f, g);
    g[k] = r.sub(g[k], fg[k]);
  }
  return g;
}

template <Ring R>
std::string series_format(const R& r, const TruncSeries<typename R::Elem>& a, const std::string& var = "T") {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < a.order(); ++k) {
    if (r.is_zero(a[k])) continue;
    if (!first) os << " + ";
    first = false;
    std::string c = r.format(a[k]);
    if (k == 0) {
      os << c;
    } else {
      if (c != "1") os << "(" << c << ")*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  os << " + O(" << var << "^" << a.order() << ")";
  return os.str();
}

/// R[[T]]/(T^order) as a ring in its own right.
template <Ring R>
class SeriesRing {
 public:
  using Elem = TruncSeries<typename R::Elem>;
  SeriesRing(R base, size_t order) : base_(std::move(base)), order_(order) {
    if (order == 0) throw DomainError("SeriesRing: truncation order must be positive");
  }
  const R& base() const { return base_; }
  size_t order() const { return order_; }

  Elem zero() const { return series_zero(base_, order_); }
  Elem one() const { return series_constant(base_, base_.one(), order_); }
  Elem from_int(const BigInt& k) const { return series_constant(base_, base_.from_int(k), order_); }
  Elem variable() const { return series_monomial(base_, base_.one(), 1, order_); }
  Elem add(const Elem& a, const Elem& b) const { return series_add(base_, a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return series_sub(base_, a, b); }
  Elem neg(const Elem& a) const { return series_scale(base_, base_.neg(base_.one()), a); }
  Elem mul(const Elem& a, const Elem& b) const { return series_mul(base_, a, b); }
  bool equal(const Elem& a, const Elem& b) const { return series_equal(base_, a, b); }
  bool is_zero(const Elem& a) const { return series_is_zero(base_, a); }
  std::optional<Elem> try_scalar(const BigRat& q) const {
    auto c = base_.try_scalar(q);
    if (!c) return std::nullopt;
    return series_constant(base_, *c, order_);
  }
  std::optional<Elem> try_inverse(const Elem& a) const {
    if (!base_.try_inverse(a[0])) return std::nullopt;
    return series_inverse(base_, a);
  }
  std::optional<Elem> try_divide(const Elem& a, const Elem& b) const {
    auto inv = try_inverse(b);
    if (!inv) return std::nullopt;
    return mul(a, *inv);
  }
  std::optional<Elem> try_divide_int(const Elem& a, const BigInt& k) const {
    Elem s = a;
    for (size_t i = 0; i < order_; ++i) {
      auto c = base_.try_divide_int(a[i], k);
      if (!c) return std::nullopt;
      s[i] = *c;
    }
    return s;
  }
  BigInt characteristic() const { return base_.characteristic(); }
  bool is_q_algebra() const { return base_.is_q_algebra(); }
  std::string format(const Elem& a) const { return series_format(base_, a); }
  std::string name() const { return base_.name() + "[[T]]/(T^" + std::to_string(order_) + ")"; }

 private:
  R base_;
  size_t order_;
};

static_assert(Ring<SeriesRing<Rationals>>);

}  // namespace morlog
