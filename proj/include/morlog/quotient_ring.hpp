#pragma once

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "morlog/ring.hpp"

namespace morlog {

namespace detail {

/// Solves the square system m * x = rhs over Q; nullopt when m is singular.
std::optional<std::vector<BigRat>> solve_rational(std::vector<std::vector<BigRat>> m,
                                                  std::vector<BigRat> rhs);

template <class R>
concept RationalBacked = Ring<R> && requires(const R& r, const typename R::Elem& a, const BigRat& q) {
  { r.to_rational(a) } -> std::same_as<BigRat>;
};

}  // namespace detail

/// Base[t] / (relation), relation monic of degree d >= 1. Elements are the
/// reduced representatives sum_{i<d} a_i t^i, stored densely.
template <Ring Base>
class PolyQuotient {
 public:
  using Elem = std::vector<typename Base::Elem>;

  /// tail holds c_0..c_{d-1} of relation t^d + c_{d-1} t^{d-1} + ... + c_0.
  PolyQuotient(Base base, std::vector<typename Base::Elem> tail, std::string var = "t",
               std::string relation_name = "")
      : base_(std::move(base)), tail_(std::move(tail)), var_(std::move(var)),
        relation_name_(std::move(relation_name)) {
    if (tail_.empty()) throw DomainError("PolyQuotient: relation must have degree >= 1");
    nilpotent_ = true;
    for (const auto& c : tail_)
      if (!base_.is_zero(c)) nilpotent_ = false;
    if (relation_name_.empty()) relation_name_ = nilpotent_ ? var_ + "^" + std::to_string(tail_.size()) : "f(" + var_ + ")";
  }

  /// Base[t]/(t^m).
  static PolyQuotient truncated(Base base, int m, std::string var = "t") {
    if (m < 1) throw DomainError("PolyQuotient: nilpotency order must be >= 1");
    std::vector<typename Base::Elem> tail(static_cast<size_t>(m), base.zero());
    return PolyQuotient(std::move(base), std::move(tail), std::move(var));
  }

  /// Base[s]/(Phi_p(1+s)) where Phi_p is the p-th cyclotomic polynomial;
  /// 1+s is then a primitive p-th root of unity.
  static PolyQuotient cyclotomic_shifted(Base base, long p, std::string var = "s") {
    require_prime(p);
    // Phi_p(1+s) = ((1+s)^p - 1)/s = sum_{k=1}^{p} C(p,k) s^{k-1}; monic of degree p-1.
    std::vector<typename Base::Elem> tail;
    BigInt binom = 1;
    for (long k = 1; k < p; ++k) {
      binom = binom * (p - k + 1) / k;
      tail.push_back(base.from_int(binom));
    }
    return PolyQuotient(std::move(base), std::move(tail), std::move(var),
                        "Phi_" + std::to_string(p) + "(1+" + var + ")");
  }

  const Base& base() const { return base_; }
  size_t degree() const { return tail_.size(); }
  bool relation_is_nilpotent() const { return nilpotent_; }
  const std::string& variable_name() const { return var_; }

  Elem zero() const { return Elem(degree(), base_.zero()); }
  Elem one() const { return embed(base_.one()); }
  Elem from_int(const BigInt& k) const { return embed(base_.from_int(k)); }
  Elem embed(const typename Base::Elem& c) const {
    Elem e = zero();
    e[0] = c;
    return e;
  }
  /// The class of t^k.
  Elem monomial(size_t k, const typename Base::Elem& c) const {
    std::vector<typename Base::Elem> raw(k + 1, base_.zero());
    raw[k] = c;
    return reduce(std::move(raw));
  }
  Elem variable() const { return monomial(1, base_.one()); }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r(degree(), base_.zero());
    for (size_t i = 0; i < degree(); ++i) r[i] = base_.add(a[i], b[i]);
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r(degree(), base_.zero());
    for (size_t i = 0; i < degree(); ++i) r[i] = base_.sub(a[i], b[i]);
    return r;
  }
  Elem neg(const Elem& a) const {
    Elem r(degree(), base_.zero());
    for (size_t i = 0; i < degree(); ++i) r[i] = base_.neg(a[i]);
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    const size_t d = degree();
    if (nilpotent_) {
      Elem r(d, base_.zero());
      for (size_t i = 0; i < d; ++i) {
        if (base_.is_zero(a[i])) continue;
        for (size_t j = 0; i + j < d; ++j) r[i + j] = base_.add(r[i + j], base_.mul(a[i], b[j]));
      }
      return r;
    }
    std::vector<typename Base::Elem> raw(2 * d - 1, base_.zero());
    for (size_t i = 0; i < d; ++i) {
      if (base_.is_zero(a[i])) continue;
      for (size_t j = 0; j < d; ++j) raw[i + j] = base_.add(raw[i + j], base_.mul(a[i], b[j]));
    }
    return reduce(std::move(raw));
  }
  Elem scale_by(const typename Base::Elem& c, const Elem& a) const {
    Elem r(degree(), base_.zero());
    for (size_t i = 0; i < degree(); ++i) r[i] = base_.mul(c, a[i]);
    return r;
  }

  bool equal(const Elem& a, const Elem& b) const {
    for (size_t i = 0; i < degree(); ++i)
      if (!base_.equal(a[i], b[i])) return false;
    return true;
  }
  bool is_zero(const Elem& a) const {
    for (const auto& c : a)
      if (!base_.is_zero(c)) return false;
    return true;
  }

  std::optional<Elem> try_scalar(const BigRat& q) const {
    auto c = base_.try_scalar(q);
    if (!c) return std::nullopt;
    return embed(*c);
  }

  std::optional<Elem> try_inverse(const Elem& a) const {
    if (nilpotent_) {
      // a = c + n with n nilpotent: a^{-1} = c^{-1} sum_k (-n/c)^k.
      auto c_inv = base_.try_inverse(a[0]);
      if (!c_inv) return std::nullopt;
      Elem n = a;
      n[0] = base_.zero();
      Elem x = scale_by(base_.neg(*c_inv), n);
      Elem term = one();
      Elem sum = one();
      for (size_t k = 1; k < degree(); ++k) {
        term = mul(term, x);
        sum = add(sum, term);
      }
      return scale_by(*c_inv, sum);
    }
    return try_divide(one(), a);
  }

  std::optional<Elem> try_divide(const Elem& a, const Elem& b) const {
    if (nilpotent_) {
      if (auto inv = try_inverse(b)) return mul(a, *inv);
    }
    if constexpr (detail::RationalBacked<Base>) {
      return divide_by_linear_solve(a, b);
    } else {
      // Constant divisor: divide coefficientwise in the base.
      for (size_t i = 1; i < degree(); ++i)
        if (!base_.is_zero(b[i])) return std::nullopt;
      Elem r(degree(), base_.zero());
      for (size_t i = 0; i < degree(); ++i) {
        auto c = base_.try_divide(a[i], b[0]);
        if (!c) return std::nullopt;
        r[i] = *c;
      }
      return r;
    }
  }

  std::optional<Elem> try_divide_int(const Elem& a, const BigInt& k) const {
    Elem r(degree(), base_.zero());
    for (size_t i = 0; i < degree(); ++i) {
      auto c = base_.try_divide_int(a[i], k);
      if (!c) return std::nullopt;
      r[i] = *c;
    }
    return r;
  }

  BigInt characteristic() const { return base_.characteristic(); }
  bool is_q_algebra() const { return base_.is_q_algebra(); }

  std::string format(const Elem& a) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < degree(); ++i) {
      if (base_.is_zero(a[i])) continue;
      if (!first) os << " + ";
      first = false;
      std::string c = base_.format(a[i]);
      if (i == 0) {
        os << c;
      } else {
        if (c != "1") os << "(" << c << ")*";
        os << var_;
        if (i > 1) os << "^" << i;
      }
    }
    if (first) os << "0";
    return os.str();
  }
  std::string name() const { return base_.name() + "[" + var_ + "]/(" + relation_name_ + ")"; }

  /// Lowest index with a nonzero coefficient, or degree() for zero. For a
  /// nilpotent relation this is the t-adic filtration degree.
  size_t order(const Elem& a) const {
    for (size_t i = 0; i < degree(); ++i)
      if (!base_.is_zero(a[i])) return i;
    return degree();
  }

  /// Ring endomorphism determined by a map on base coefficients and the
  /// image of t: sum a_i t^i -> sum phi(a_i) image^i.
  Elem substitute(const Elem& a, const Elem& image_of_t,
                  const std::function<typename Base::Elem(const typename Base::Elem&)>& coeff_map) const {
    Elem result = zero();
    Elem power = one();
    for (size_t i = 0; i < degree(); ++i) {
      if (!base_.is_zero(a[i])) result = add(result, scale_by(coeff_map(a[i]), power));
      if (i + 1 < degree()) power = mul(power, image_of_t);
    }
    return result;
  }
  Elem substitute(const Elem& a, const Elem& image_of_t) const {
    return substitute(a, image_of_t, [](const typename Base::Elem& c) { return c; });
  }

 private:
  Elem reduce(std::vector<typename Base::Elem> raw) const {
    const size_t d = degree();
    for (size_t k = raw.size(); k-- > d;) {
      if (base_.is_zero(raw[k])) continue;
      const auto c = raw[k];
      // t^k = t^{k-d} * t^d = -t^{k-d} * sum_i tail_i t^i
      for (size_t i = 0; i < d; ++i)
        if (!base_.is_zero(tail_[i])) raw[k - d + i] = base_.sub(raw[k - d + i], base_.mul(c, tail_[i]));
      raw[k] = base_.zero();
    }
    raw.resize(d, base_.zero());
    return raw;
  }

  std::optional<Elem> divide_by_linear_solve(const Elem& a, const Elem& b) const {
    const size_t d = degree();
    std::vector<std::vector<BigRat>> m(d, std::vector<BigRat>(d));
    Elem col = b;
    for (size_t j = 0; j < d; ++j) {
      for (size_t i = 0; i < d; ++i) m[i][j] = base_.to_rational(col[i]);
      col = mul(col, variable());
    }
    std::vector<BigRat> rhs(d);
    for (size_t i = 0; i < d; ++i) rhs[i] = base_.to_rational(a[i]);
    auto x = detail::solve_rational(std::move(m), std::move(rhs));
    if (!x) return std::nullopt;
    Elem r(d, base_.zero());
    for (size_t i = 0; i < d; ++i) {
      auto c = base_.try_scalar((*x)[i]);
      if (!c) return std::nullopt;
      r[i] = *c;
    }
    return r;
  }

  Base base_;
  std::vector<typename Base::Elem> tail_;
  std::string var_;
  std::string relation_name_;
  bool nilpotent_ = false;
};

static_assert(Ring<PolyQuotient<Integers>>);
static_assert(Ring<PolyQuotient<PadicRing>>);

}  // namespace morlog
