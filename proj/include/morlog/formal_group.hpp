#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "morlog/abelian_group.hpp"
#include "morlog/errors.hpp"
#include "morlog/ring.hpp"
#include "morlog/series.hpp"

namespace morlog {

/// Power series in `nvars` variables truncated at total degree > D, stored
/// densely on the (D+1)^nvars exponent box.
template <Ring R>
class MultiSeries {
 public:
  using Elem = typename R::Elem;

  MultiSeries(const R& ring, size_t nvars, size_t degree)
      : nvars_(nvars), degree_(degree), coeffs_(box_size(nvars, degree), ring.zero()) {}

  static MultiSeries variable(const R& ring, size_t nvars, size_t degree, size_t which) {
    MultiSeries s(ring, nvars, degree);
    std::vector<size_t> e(nvars, 0);
    e[which] = 1;
    if (degree >= 1) s.at(e) = ring.one();
    return s;
  }

  size_t nvars() const { return nvars_; }
  size_t degree() const { return degree_; }
  Elem& at(const std::vector<size_t>& e) { return coeffs_[flat(e)]; }
  const Elem& at(const std::vector<size_t>& e) const { return coeffs_[flat(e)]; }

  /// Calls f(exponents, coefficient) for every exponent of total degree <= D.
  template <class F>
  void for_each(F&& f) const {
    std::vector<size_t> e(nvars_, 0);
    for (size_t idx = 0; idx < coeffs_.size(); ++idx) {
      size_t rest = idx, total = 0;
      for (size_t v = 0; v < nvars_; ++v) {
        e[v] = rest % (degree_ + 1);
        rest /= degree_ + 1;
        total += e[v];
      }
      if (total <= degree_) f(e, coeffs_[idx]);
    }
  }

  MultiSeries add(const R& ring, const MultiSeries& o) const {
    MultiSeries r = *this;
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = ring.add(coeffs_[i], o.coeffs_[i]);
    return r;
  }

  MultiSeries scale(const R& ring, const Elem& c) const {
    MultiSeries r = *this;
    for (auto& x : r.coeffs_) x = ring.mul(c, x);
    return r;
  }

  MultiSeries mul(const R& ring, const MultiSeries& o) const {
    MultiSeries r(ring, nvars_, degree_);
    std::vector<std::pair<std::vector<size_t>, Elem>> lhs, rhs;
    for_each([&](const std::vector<size_t>& e, const Elem& c) {
      if (!ring.is_zero(c)) lhs.emplace_back(e, c);
    });
    o.for_each([&](const std::vector<size_t>& e, const Elem& c) {
      if (!ring.is_zero(c)) rhs.emplace_back(e, c);
    });
    std::vector<size_t> sum(nvars_);
    for (const auto& [ea, ca] : lhs) {
      size_t da = 0;
      for (size_t x : ea) da += x;
      for (const auto& [eb, cb] : rhs) {
        size_t db = 0;
        for (size_t x : eb) db += x;
        if (da + db > degree_) continue;
        for (size_t v = 0; v < nvars_; ++v) sum[v] = ea[v] + eb[v];
        auto& slot = r.at(sum);
        slot = ring.add(slot, ring.mul(ca, cb));
      }
    }
    return r;
  }

  bool equal(const R& ring, const MultiSeries& o) const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
      if (!ring.equal(coeffs_[i], o.coeffs_[i])) return false;
    return true;
  }

 private:
  static size_t box_size(size_t nvars, size_t degree) {
    size_t s = 1;
    for (size_t v = 0; v < nvars; ++v) s *= degree + 1;
    return s;
  }
  size_t flat(const std::vector<size_t>& e) const {
    size_t idx = 0;
    for (size_t v = nvars_; v-- > 0;) idx = idx * (degree_ + 1) + e[v];
    return idx;
  }

  size_t nvars_;
  size_t degree_;
  std::vector<Elem> coeffs_;
};

enum class FglKind { Additive, Multiplicative, Honda, Custom };

inline std::string to_string(FglKind k) {
  switch (k) {
    case FglKind::Additive: return "additive";
    case FglKind::Multiplicative: return "multiplicative";
    case FglKind::Honda: return "honda";
    case FglKind::Custom: return "custom";
  }
  return "?";
}

/// Smallest m <= bound with a^m = 0, if any.
template <Ring R>
std::optional<size_t> nilpotency_index(const R& ring, const typename R::Elem& a, size_t bound) {
  auto x = ring.one();
  for (size_t m = 0; m <= bound; ++m) {
    if (ring.is_zero(x)) return m;
    x = ring.mul(x, a);
  }
  return std::nullopt;
}

/// One-dimensional commutative formal group law F(x, y) = sum c_ij x^i y^j
/// over R, known through total degree D. Additive and multiplicative laws are
/// polynomials, so they are exact at every degree.
template <Ring R>
class FormalGroupLaw {
 public:
  using Elem = typename R::Elem;

  /// coeffs[i][j] for i + j <= degree.
  FormalGroupLaw(R ring, FglKind kind, long p, int height, size_t degree, std::vector<std::vector<Elem>> coeffs,
                 bool exact, std::string tag)
      : ring_(std::move(ring)), kind_(kind), p_(p), height_(height), degree_(degree), c_(std::move(coeffs)),
        exact_(exact), tag_(std::move(tag)) {}

  const R& ring() const { return ring_; }
  FglKind kind() const { return kind_; }
  long prime() const { return p_; }
  /// 0 for the additive law.
  int height() const { return height_; }
  size_t degree() const { return degree_; }
  bool exact() const { return exact_; }
  const std::string& tag() const { return tag_; }
  const Elem& coeff(size_t i, size_t j) const { return c_[i][j]; }

  /// F(x, y) as a bivariate series.
  MultiSeries<R> as_series() const {
    MultiSeries<R> s(ring_, 2, degree_);
    for (size_t i = 0; i <= degree_; ++i)
      for (size_t j = 0; i + j <= degree_; ++j) s.at({i, j}) = c_[i][j];
    return s;
  }

  /// F(a, b) for series a, b without constant term, through the common degree.
  MultiSeries<R> substitute(const MultiSeries<R>& a, const MultiSeries<R>& b) const {
    std::vector<MultiSeries<R>> bpow{MultiSeries<R>(ring_, a.nvars(), a.degree())};
    bpow[0].at(std::vector<size_t>(a.nvars(), 0)) = ring_.one();
    for (size_t j = 1; j <= degree_; ++j) bpow.push_back(bpow.back().mul(ring_, b));
    MultiSeries<R> result(ring_, a.nvars(), a.degree());
    // Horner in a: sum_i a^i (sum_j c_ij b^j).
    for (size_t i = degree_ + 1; i-- > 0;) {
      MultiSeries<R> inner(ring_, a.nvars(), a.degree());
      for (size_t j = 0; i + j <= degree_; ++j)
        if (!ring_.is_zero(c_[i][j])) inner = inner.add(ring_, bpow[j].scale(ring_, c_[i][j]));
      result = result.mul(ring_, a).add(ring_, inner);
    }
    return result;
  }

 private:
  R ring_;
  FglKind kind_;
  long p_;
  int height_;
  size_t degree_;
  std::vector<std::vector<Elem>> c_;
  bool exact_;
  std::string tag_;
};

namespace detail {

template <class E>
std::vector<std::vector<E>> triangle(size_t degree, const E& zero) {
  std::vector<std::vector<E>> c(degree + 1);
  for (size_t i = 0; i <= degree; ++i) c[i].assign(degree + 1 - i, zero);
  return c;
}

/// Coefficients over Q of g(f(x) + f(y)) with f(T) = sum_i T^{p^{n i}} / p^i
/// and g the compositional inverse of f.
std::vector<std::vector<BigRat>> honda_coefficients(long p, int n, size_t degree);

}  // namespace detail

/// Builds the additive, multiplicative or height-n Honda law over `ring`
/// through total degree D. Honda coefficients are computed over Q and must
/// be integers; anything else raises InternalError.
template <Ring R>
FormalGroupLaw<R> make_fgl(FglKind kind, long p, int n, R ring, size_t degree) {
  require_prime(p);
  if (degree < 2) throw DomainError("make_fgl: truncation degree must be >= 2");
  using E = typename R::Elem;
  auto c = detail::triangle<E>(degree, ring.zero());
  switch (kind) {
    case FglKind::Additive:
      c[1][0] = ring.one();
      c[0][1] = ring.one();
      return FormalGroupLaw<R>(std::move(ring), kind, p, 0, degree, std::move(c), true, "additive");
    case FglKind::Multiplicative:
      c[1][0] = ring.one();
      c[0][1] = ring.one();
      c[1][1] = ring.one();
      return FormalGroupLaw<R>(std::move(ring), kind, p, 1, degree, std::move(c), true, "multiplicative");
    case FglKind::Honda: {
      if (n < 1) throw DomainError("make_fgl: honda height must be >= 1");
      BigInt pn = pow_int(BigInt(p), static_cast<unsigned long>(n));
      if (BigInt(static_cast<unsigned long>(degree)) < pn + 1)
        throw DomainError("make_fgl: honda(n) needs D >= p^n + 1");
      auto q = detail::honda_coefficients(p, n, degree);
      for (size_t i = 0; i <= degree; ++i) {
        for (size_t j = 0; i + j <= degree; ++j) {
          if (!q[i][j].is_integer())
            throw InternalError("make_fgl: honda coefficient c_" + std::to_string(i) + "," + std::to_string(j) + " = " +
                                q[i][j].str() + " is not integral");
          c[i][j] = ring.from_int(q[i][j].num());
        }
      }
      return FormalGroupLaw<R>(std::move(ring), kind, p, n, degree, std::move(c), false,
                               "honda(" + std::to_string(n) + ")");
    }
    case FglKind::Custom:
      break;
  }
  throw DomainError("make_fgl: custom laws are built with the FormalGroupLaw constructor");
}

/// F(a, b) by substitution. For laws known only through degree D every
/// monomial a^i b^{D+1-i} must vanish, otherwise PrecisionError.
template <Ring R>
typename R::Elem formal_add(const FormalGroupLaw<R>& f, const typename R::Elem& a, const typename R::Elem& b) {
  const auto& r = f.ring();
  const size_t d = f.degree();
  std::vector<typename R::Elem> apow{r.one()}, bpow{r.one()};
  for (size_t k = 1; k <= d + 1; ++k) {
    apow.push_back(r.mul(apow.back(), a));
    bpow.push_back(r.mul(bpow.back(), b));
  }
  if (!f.exact()) {
    for (size_t i = 0; i <= d + 1; ++i)
      if (!r.is_zero(r.mul(apow[i], bpow[d + 1 - i])))
        throw PrecisionError("formal_add: a^" + std::to_string(i) + " b^" + std::to_string(d + 1 - i) +
                             " is nonzero, beyond the truncation of " + f.tag());
  }
  auto total = r.zero();
  for (size_t i = 0; i <= d; ++i)
    for (size_t j = 0; i + j <= d; ++j)
      if (!r.is_zero(f.coeff(i, j))) total = r.add(total, r.mul(f.coeff(i, j), r.mul(apow[i], bpow[j])));
  return total;
}

/// [p]_F(T) = T +_F ... +_F T (p terms), as a series of order D + 1.
template <Ring R>
TruncSeries<typename R::Elem> p_series(const FormalGroupLaw<R>& f) {
  const auto& r = f.ring();
  const size_t d = f.degree();
  auto t = MultiSeries<R>::variable(r, 1, d, 0);
  auto s = t;
  for (long k = 1; k < f.prime(); ++k) s = f.substitute(s, t);
  auto out = series_zero(r, d + 1);
  for (size_t k = 0; k <= d; ++k) out[k] = s.at({k});
  return out;
}

/// Unit, commutativity and associativity of F through its truncation degree.
struct FglAxiomReport {
  bool unit = true;
  bool commutative = true;
  bool associative = true;
  bool ok() const { return unit && commutative && associative; }
};

template <Ring R>
FglAxiomReport check_fgl_axioms(const FormalGroupLaw<R>& f, bool check_associativity = true) {
  const auto& r = f.ring();
  const size_t d = f.degree();
  FglAxiomReport rep;
  for (size_t i = 0; i <= d; ++i) {
    auto want = i == 1 ? r.one() : r.zero();
    if (!r.equal(f.coeff(i, 0), want) || !r.equal(f.coeff(0, i), want)) rep.unit = false;
    for (size_t j = 0; i + j <= d; ++j)
      if (!r.equal(f.coeff(i, j), f.coeff(j, i))) rep.commutative = false;
  }
  if (check_associativity) {
    auto x = MultiSeries<R>::variable(r, 3, d, 0);
    auto y = MultiSeries<R>::variable(r, 3, d, 1);
    auto z = MultiSeries<R>::variable(r, 3, d, 2);
    auto lhs = f.substitute(f.substitute(x, y), z);
    auto rhs = f.substitute(x, f.substitute(y, z));
    rep.associative = lhs.equal(r, rhs);
  }
  return rep;
}

/// Values T(f(a)) of a would-be homomorphism f: A -> F, indexed by the
/// element indices of A.
template <Ring R>
struct LevelStructureCandidate {
  FormalGroupLaw<R> target;
  FinAbPGroup group;
  std::vector<typename R::Elem> points;
};

template <class E>
struct DivisibilityReport {
  bool divides = false;
  std::optional<TruncSeries<E>> quotient;
  std::optional<size_t> obstruction_degree;
  /// Degrees below this were compared.
  size_t checked_order = 0;
  TruncSeries<E> divisor;
  TruncSeries<E> p_series;
};

namespace detail {

/// a is nilpotent, or (outside Q-algebras) some power a^k, k <= bound, is divisible by p.
template <Ring R>
bool topologically_nilpotent(const R& r, const typename R::Elem& a, long p, size_t bound) {
  auto x = a;
  for (size_t k = 1; k <= bound; ++k) {
    if (r.is_zero(x)) return true;
    if (!r.is_q_algebra() && r.try_divide_int(x, BigInt(p))) return true;
    x = r.mul(x, a);
  }
  return false;
}

}  // namespace detail

/// Divides num by den degree by degree: with m the order of den, the
/// coefficients of num below m must vanish and q_{k-m} is solved from
/// degree k by dividing by den_m. The first degree that fails is reported.
template <Ring R>
DivisibilityReport<typename R::Elem> divide_series(const R& r, const TruncSeries<typename R::Elem>& num,
                                                   const TruncSeries<typename R::Elem>& den, size_t order) {
  using E = typename R::Elem;
  DivisibilityReport<E> rep;
  rep.checked_order = order;
  rep.divisor = den;
  rep.p_series = num;
  size_t m = 0;
  while (m < order && r.is_zero(den[m])) ++m;
  if (m == order) throw PrecisionError("divide_series: divisor vanishes through the checked order");
  for (size_t k = 0; k < m; ++k) {
    if (!r.is_zero(num[k])) {
      rep.obstruction_degree = k;
      return rep;
    }
  }
  auto q = series_zero(r, order - m);
  for (size_t k = m; k < order; ++k) {
    auto rhs = num[k];
    for (size_t i = m + 1; i <= k; ++i) rhs = r.sub(rhs, r.mul(den[i], q[k - i]));
    auto c = r.try_divide(rhs, den[m]);
    if (!c) {
      rep.obstruction_degree = k;
      return rep;
    }
    q[k - m] = *c;
  }
  rep.divides = true;
  rep.quotient = q;
  return rep;
}

/// Whether prod_{a in A[p]} (T +_F point(a)) divides [p]_F(T) in R[[T]].
/// Throws DomainError if the points fail the candidate invariants (zero at
/// the identity, topologically nilpotent, additive under F).
template <Ring R>
DivisibilityReport<typename R::Elem> check_level_structure(const LevelStructureCandidate<R>& c) {
  const auto& f = c.target;
  const auto& r = f.ring();
  const auto& g = c.group;
  if (g.prime() != f.prime()) throw DomainError("check_level_structure: A is not a p-group for the law's prime");
  if (c.points.size() != g.order()) throw DomainError("check_level_structure: need one point per element of A");
  if (!r.is_zero(c.points[0])) throw DomainError("check_level_structure: point at the identity must be 0");
  for (uint32_t a = 0; a < g.order(); ++a)
    if (!detail::topologically_nilpotent(r, c.points[a], f.prime(), f.degree() + 2))
      throw DomainError("check_level_structure: point " + std::to_string(a) + " is not topologically nilpotent");
  for (uint32_t a = 0; a < g.order(); ++a)
    for (uint32_t b = 0; b < g.order(); ++b)
      if (!r.equal(c.points[g.add(a, b)], formal_add(f, c.points[a], c.points[b])))
        throw DomainError("check_level_structure: points are not a homomorphism at (" + std::to_string(a) + ", " +
                          std::to_string(b) + ")");

  const size_t d = f.degree();
  size_t order = d + 1;
  auto divisor = series_constant(r, r.one(), order);
  for (uint32_t a = 0; a < g.order(); ++a) {
    if (g.scale(g.prime(), a) != 0) continue;
    const auto& b = c.points[a];
    if (!f.exact()) {
      // F(T, b) is reliable in T-degree i only if b^{D-i+1} = 0.
      auto m = nilpotency_index(r, b, d + 1);
      if (!m) throw PrecisionError("check_level_structure: point is not nilpotent below the truncation");
      order = std::min(order, d + 2 - std::max<size_t>(*m, 1));
    }
    auto factor = series_zero(r, d + 1);
    std::vector<typename R::Elem> bpow{r.one()};
    for (size_t j = 1; j <= d; ++j) bpow.push_back(r.mul(bpow.back(), b));
    for (size_t i = 0; i <= d; ++i)
      for (size_t j = 0; i + j <= d; ++j)
        if (!r.is_zero(f.coeff(i, j))) factor[i] = r.add(factor[i], r.mul(f.coeff(i, j), bpow[j]));
    divisor = series_mul(r, divisor, factor);
  }
  auto ps = p_series(f);
  return divide_series(r, ps, divisor, order);
}

/// T^{p^r} divides [p]_F(T), for F over a ring of characteristic p.
template <Ring R>
bool admits_trivial_level_structure(const FormalGroupLaw<R>& f, int rank) {
  const auto& r = f.ring();
  if (r.characteristic() != f.prime())
    throw DomainError("admits_trivial_level_structure: " + r.name() + " does not have characteristic " +
                      std::to_string(f.prime()));
  if (rank < 0) throw DomainError("admits_trivial_level_structure: rank must be >= 0");
  BigInt pr = pow_int(BigInt(f.prime()), static_cast<unsigned long>(rank));
  if (BigInt(static_cast<unsigned long>(f.degree())) + 1 < pr)
    throw PrecisionError("admits_trivial_level_structure: truncation too low to see T^p^r");
  auto ps = p_series(f);
  size_t bound = static_cast<size_t>(pr.get_ui());
  for (size_t k = 0; k < bound; ++k)
    if (!r.is_zero(ps[k])) return false;
  return true;
}

/// Copies the law coefficientwise into another ring.
template <Ring R, Ring S, class Map>
FormalGroupLaw<S> change_rings(const FormalGroupLaw<R>& f, S target, Map&& map) {
  auto c = detail::triangle<typename S::Elem>(f.degree(), target.zero());
  for (size_t i = 0; i <= f.degree(); ++i)
    for (size_t j = 0; i + j <= f.degree(); ++j) c[i][j] = map(f.coeff(i, j));
  return FormalGroupLaw<S>(std::move(target), f.kind(), f.prime(), f.height(), f.degree(), std::move(c), f.exact(),
                           f.tag());
}

}  // namespace morlog
