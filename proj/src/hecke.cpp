#include "morlog/hecke.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <tuple>

#include "morlog/errors.hpp"
#include "morlog/work_limit.hpp"

namespace morlog {

namespace {

size_t rank_of(const IntMatrix& gens) {
  if (gens.empty()) throw DomainError("Lattice: no generators");
  return gens[0].size();
}

/// Canonical HNF matrices of determinant p^k in dimension n.
void hnf_with_det(size_t n, long p, int k, size_t col, IntMatrix& h, std::vector<IntMatrix>& out) {
  if (col == n) {
    if (k == 0) out.push_back(h);
    return;
  }
  if (col == n - 1) {
    // Last pivot takes the remaining exponent.
    BigInt d = pow_int(BigInt(p), static_cast<unsigned long>(k));
    h[col][col] = d;
    std::vector<BigInt> above(col, BigInt(0));
    while (true) {
      for (size_t r = 0; r < col; ++r) h[r][col] = above[r];
      out.push_back(h);
      size_t r = 0;
      while (r < col) {
        above[r] += 1;
        if (above[r] < d) break;
        above[r] = 0;
        ++r;
      }
      if (r == col) break;
    }
    return;
  }
  for (int a = 0; a <= k; ++a) {
    BigInt d = pow_int(BigInt(p), static_cast<unsigned long>(a));
    h[col][col] = d;
    std::vector<BigInt> above(col, BigInt(0));
    while (true) {
      for (size_t r = 0; r < col; ++r) h[r][col] = above[r];
      hnf_with_det(n, p, k - a, col + 1, h, out);
      size_t r = 0;
      while (r < col) {
        above[r] += 1;
        if (above[r] < d) break;
        above[r] = 0;
        ++r;
      }
      if (r == col) break;
    }
  }
  for (size_t r = 0; r <= col; ++r) h[r][col] = r == col ? BigInt(1) : BigInt(0);
}

std::mutex cache_mutex;
std::map<std::tuple<size_t, long, int>, std::vector<IntMatrix>> all_cache;
std::map<std::tuple<size_t, long, int>, std::vector<IntMatrix>> elementary_cache;

const std::vector<IntMatrix>& relative_sublattices(size_t n, long p, int k) {
  auto key = std::make_tuple(n, p, k);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = all_cache.find(key);
    if (it != all_cache.end()) return it->second;
  }
  require_work(count_sublattices(n, p, k).get_d(), "enumerate_sublattices");
  std::vector<IntMatrix> out;
  IntMatrix h = identity_matrix(n);
  hnf_with_det(n, p, k, 0, h, out);
  std::sort(out.begin(), out.end());
  std::lock_guard<std::mutex> lock(cache_mutex);
  return all_cache.emplace(key, std::move(out)).first->second;
}

/// Those of index p^j whose quotient is (Z/p)^j, by Smith normal form.
const std::vector<IntMatrix>& elementary_sublattices(size_t n, long p, int j) {
  auto key = std::make_tuple(n, p, j);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = elementary_cache.find(key);
    if (it != elementary_cache.end()) return it->second;
  }
  std::vector<IntMatrix> out;
  IntMatrix id = identity_matrix(n);
  for (const auto& h : relative_sublattices(n, p, j)) {
    auto inv = quotient_invariants(id, h);
    bool elementary = std::all_of(inv.begin(), inv.end(), [&](const BigInt& d) { return d == p; });
    if (elementary) out.push_back(h);
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  return elementary_cache.emplace(key, std::move(out)).first->second;
}

bool is_identity(const IntMatrix& m) {
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

Lattice sublattice_from(const Lattice& l, const IntMatrix& h) {
  if (is_identity(l.basis())) return Lattice(h);
  return Lattice(mat_mul(h, l.basis()));
}

BigRat signed_power(long p, long e, bool negative) {
  BigRat v(pow_int(BigInt(p), static_cast<unsigned long>(e)));
  return negative ? BigRat(0) - v : v;
}

}  // namespace

Lattice::Lattice(const IntMatrix& generators) : basis_(hermite_normal_form(generators, rank_of(generators))) {}

Lattice Lattice::standard(size_t n) { return Lattice(Canonical{}, identity_matrix(n)); }

Lattice Lattice::transform(const IntMatrix& u) const {
  if (u.size() != rank()) throw ContextMismatch("Lattice::transform: matrix size differs from rank");
  BigInt d = determinant(u);
  if (d != 1 && d != -1) throw DomainError("Lattice::transform: matrix is not unimodular");
  return Lattice(mat_mul(basis_, u));
}

BigInt count_sublattices(size_t n, long p, int k) {
  require_prime(p);
  if (k < 0) throw DomainError("count_sublattices: k must be >= 0");
  // Sum over pivot exponents a_0..a_{n-1} with sum k of prod_c p^{c a_c}.
  std::vector<BigInt> ways(static_cast<size_t>(k) + 1, BigInt(0));
  ways[0] = 1;
  for (size_t c = 0; c < n; ++c) {
    std::vector<BigInt> next(ways.size(), BigInt(0));
    for (int used = 0; used <= k; ++used) {
      if (ways[used] == 0) continue;
      for (int a = 0; used + a <= k; ++a)
        next[used + a] += ways[used] * pow_int(BigInt(p), static_cast<unsigned long>(c * a));
    }
    ways = std::move(next);
  }
  return ways[k];
}

std::vector<Lattice> enumerate_sublattices(const Lattice& l, long p, int k) {
  require_prime(p);
  if (k < 0) throw DomainError("enumerate_sublattices: k must be >= 0");
  std::vector<Lattice> out;
  for (const auto& h : relative_sublattices(l.rank(), p, k)) out.push_back(sublattice_from(l, h));
  std::sort(out.begin(), out.end());
  return out;
}

LatticeVector LatticeVector::basis(const Lattice& l) {
  LatticeVector v(l.rank());
  v.add_term(l, BigRat(1));
  return v;
}

BigRat LatticeVector::coeff(const Lattice& l) const {
  auto it = terms_.find(l);
  return it == terms_.end() ? BigRat(0) : it->second;
}

BigRat LatticeVector::mass() const {
  BigRat total(0);
  for (const auto& [l, c] : terms_) total = total + c;
  return total;
}

void LatticeVector::add_term(const Lattice& l, const BigRat& c) {
  if (l.rank() != rank_) throw ContextMismatch("LatticeVector: lattice of rank " + std::to_string(l.rank()));
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(l, c);
  if (inserted) return;
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

void LatticeVector::require_rank(const LatticeVector& o) const {
  if (rank_ != o.rank_) throw ContextMismatch("LatticeVector: ranks differ");
}

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
  require_rank(o);
  auto r = *this;
  for (const auto& [l, c] : o.terms_) r.add_term(l, c);
  return r;
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const {
  require_rank(o);
  auto r = *this;
  for (const auto& [l, c] : o.terms_) r.add_term(l, BigRat(0) - c);
  return r;
}

LatticeVector operator*(const BigRat& k, const LatticeVector& v) {
  LatticeVector r(v.rank_);
  if (k.is_zero()) return r;
  for (const auto& [l, c] : v.terms_) r.terms_.emplace(l, k * c);
  return r;
}

LatticeVector LatticeVector::transform(const IntMatrix& u) const {
  LatticeVector r(rank_);
  for (const auto& [l, c] : terms_) r.add_term(l.transform(u), c);
  return r;
}

std::string LatticeVector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, c] : terms_) {
    if (!first) os << " + ";
    os << c.str() << "*" << l.str();
    first = false;
  }
  return os.str();
}

LatticeVector apply_generator(int j, const LatticeVector& v, long p) {
  require_prime(p);
  if (j < 0 || static_cast<size_t>(j) > v.rank()) throw DomainError("apply_generator: need 0 <= j <= n");
  LatticeVector out(v.rank());
  const auto& hs = elementary_sublattices(v.rank(), p, j);
  for (const auto& [l, c] : v.terms())
    for (const auto& h : hs) out.add_term(sublattice_from(l, h), c);
  return out;
}

LatticeVector apply_normalized_generator(int j, const LatticeVector& v, long p) {
  return BigRat(1) / BigRat(pow_int(BigInt(p), static_cast<unsigned long>(j))) * apply_generator(j, v, p);
}

LatticeVector t_pk(int k, const LatticeVector& v, long p) {
  require_prime(p);
  if (k < 0) throw DomainError("t_pk: k must be >= 0");
  LatticeVector out(v.rank());
  const auto& hs = relative_sublattices(v.rank(), p, k);
  for (const auto& [l, c] : v.terms())
    for (const auto& h : hs) out.add_term(sublattice_from(l, h), c);
  return BigRat(1) / BigRat(pow_int(BigInt(p), static_cast<unsigned long>(k))) * out;
}

HeckeOperator::HeckeOperator(size_t n, long p) : n_(n), p_(p) {
  require_prime(p);
  if (n == 0) throw DomainError("HeckeOperator: rank must be >= 1");
}

HeckeOperator HeckeOperator::scalar(size_t n, long p, const BigRat& c) {
  HeckeOperator op(n, p);
  if (!c.is_zero()) op.terms_[Monomial(n, 0)] = c;
  return op;
}

HeckeOperator HeckeOperator::generator(size_t n, long p, int j) {
  if (j < 0 || static_cast<size_t>(j) > n) throw DomainError("HeckeOperator::generator: need 0 <= j <= n");
  if (j == 0) return identity(n, p);
  HeckeOperator op(n, p);
  Monomial m(n, 0);
  m[static_cast<size_t>(j) - 1] = 1;
  op.terms_[m] = BigRat(1);
  return op;
}

HeckeOperator HeckeOperator::normalized_generator(size_t n, long p, int j) {
  return BigRat(1) / BigRat(pow_int(BigInt(p), static_cast<unsigned long>(j))) * generator(n, p, j);
}

void HeckeOperator::require_same(const HeckeOperator& o) const {
  if (n_ != o.n_ || p_ != o.p_) throw ContextMismatch("HeckeOperator: operators for different (n, p)");
}

void HeckeOperator::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

HeckeOperator HeckeOperator::operator+(const HeckeOperator& o) const {
  require_same(o);
  auto r = *this;
  for (const auto& [m, c] : o.terms_) r.terms_[m] = r.terms_.count(m) ? r.terms_[m] + c : c;
  r.prune();
  return r;
}

HeckeOperator HeckeOperator::operator-(const HeckeOperator& o) const { return *this + BigRat(-1) * o; }

HeckeOperator operator*(const BigRat& k, const HeckeOperator& a) {
  auto r = a;
  for (auto& [m, c] : r.terms_) c = k * c;
  r.prune();
  return r;
}

HeckeOperator compose(const HeckeOperator& a, const HeckeOperator& b) {
  a.require_same(b);
  HeckeOperator r(a.n_, a.p_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      HeckeOperator::Monomial m(a.n_);
      for (size_t i = 0; i < a.n_; ++i) m[i] = ma[i] + mb[i];
      auto it = r.terms_.find(m);
      if (it == r.terms_.end()) r.terms_.emplace(m, ca * cb);
      else it->second = it->second + ca * cb;
    }
  }
  r.prune();
  return r;
}

LatticeVector HeckeOperator::apply(const LatticeVector& v) const {
  if (v.rank() != n_) throw ContextMismatch("HeckeOperator::apply: rank mismatch");
  LatticeVector out(n_);
  for (const auto& [m, c] : terms_) {
    LatticeVector w = v;
    for (size_t j = 0; j < n_; ++j)
      for (int e = 0; e < m[j]; ++e) w = apply_generator(static_cast<int>(j) + 1, w, p_);
    out = out + c * w;
  }
  return out;
}

std::string HeckeOperator::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    os << c.str();
    for (size_t j = 0; j < n_; ++j) {
      if (m[j] == 0) continue;
      os << "*Tt" << (j + 1);
      if (m[j] > 1) os << "^" << m[j];
    }
    first = false;
  }
  return os.str();
}

std::vector<HeckeOperator> euler_factor(size_t n, long p) {
  std::vector<HeckeOperator> coeffs;
  for (size_t j = 0; j <= n; ++j) {
    BigRat c = signed_power(p, static_cast<long>(j * (j - (j > 0 ? 1 : 0)) / 2), j % 2 == 1);
    coeffs.push_back(c * HeckeOperator::normalized_generator(n, p, static_cast<int>(j)));
  }
  return coeffs;
}

EulerInverseReport verify_euler_inverse(size_t n, long p, int d) {
  require_prime(p);
  if (n == 0 || d < 0) throw DomainError("verify_euler_inverse: need n >= 1 and d >= 0");
  double work = 0;
  for (int k = 0; k <= d; ++k) work += count_sublattices(n, p, k).get_d() * (1.0 + count_sublattices(n, p, 1).get_d());
  require_work(work, "verify_euler_inverse");
  EulerInverseReport rep;
  rep.n = n;
  rep.p = p;
  rep.degree = d;
  auto start = LatticeVector::basis(Lattice::standard(n));
  std::vector<LatticeVector> tp;
  for (int k = 0; k <= d; ++k) tp.push_back(t_pk(k, start, p));
  auto f = euler_factor(n, p);
  for (int m = 1; m <= d; ++m) {
    LatticeVector res(n);
    for (int j = 0; j <= m && static_cast<size_t>(j) <= n; ++j) res = res + f[j].apply(tp[m - j]);
    if (!res.is_zero() && !rep.first_nonzero_degree) rep.first_nonzero_degree = m;
    rep.residuals.push_back(std::move(res));
  }
  return rep;
}

}  // namespace morlog
