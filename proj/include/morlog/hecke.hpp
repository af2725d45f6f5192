#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "morlog/bigrat.hpp"
#include "morlog/intmat.hpp"

namespace morlog {

/// Full-rank sublattice of Z^n, stored by its Hermite normal form.
class Lattice {
 public:
  explicit Lattice(const IntMatrix& generators);
  static Lattice standard(size_t n);

  size_t rank() const { return basis_.size(); }
  const IntMatrix& basis() const { return basis_; }
  BigInt index() const { return lattice_index(basis_); }
  bool contains(const Lattice& o) const { return lattice_contains(basis_, o.basis_); }
  /// Image under the row action L -> L U of U in GL_n(Z).
  Lattice transform(const IntMatrix& u) const;
  std::string str() const { return matrix_to_string(basis_); }

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.basis_ == b.basis_; }
  friend bool operator<(const Lattice& a, const Lattice& b) { return a.basis_ < b.basis_; }

 private:
  struct Canonical {};
  Lattice(Canonical, IntMatrix hnf) : basis_(std::move(hnf)) {}
  IntMatrix basis_;
  friend std::vector<Lattice> enumerate_sublattices(const Lattice&, long, int);
};

/// All M <= L with [L : M] = p^k, canonical and duplicate-free, ordered by HNF.
/// Throws ResourceError past MORLOG_MAX_WORK.
std::vector<Lattice> enumerate_sublattices(const Lattice& l, long p, int k);
/// Number of index-p^k sublattices of Z^n, from the HNF count.
BigInt count_sublattices(size_t n, long p, int k);

/// Finitely supported formal combination of lattices with rational coefficients.
class LatticeVector {
 public:
  explicit LatticeVector(size_t rank) : rank_(rank) {}
  static LatticeVector basis(const Lattice& l);

  size_t rank() const { return rank_; }
  const std::map<Lattice, BigRat>& terms() const { return terms_; }
  BigRat coeff(const Lattice& l) const;
  bool is_zero() const { return terms_.empty(); }
  /// Sum of all coefficients.
  BigRat mass() const;

  void add_term(const Lattice& l, const BigRat& c);
  LatticeVector operator+(const LatticeVector& o) const;
  LatticeVector operator-(const LatticeVector& o) const;
  friend LatticeVector operator*(const BigRat& k, const LatticeVector& v);
  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }
  LatticeVector transform(const IntMatrix& u) const;
  std::string str() const;

 private:
  void require_rank(const LatticeVector& o) const;
  size_t rank_;
  std::map<Lattice, BigRat> terms_;
};

/// Unnormalized generator: [L] -> sum of M <= L with L/M = (Z/p)^j.
LatticeVector apply_generator(int j, const LatticeVector& v, long p);
/// T_{j,p} = p^{-j} times apply_generator.
LatticeVector apply_normalized_generator(int j, const LatticeVector& v, long p);
/// T(p^k)[L] = p^{-k} sum of all M <= L of index p^k.
LatticeVector t_pk(int k, const LatticeVector& v, long p);

/// Polynomial in the unnormalized generators Tt_1..Tt_n with rational
/// coefficients. Monomials are exponent vectors of length n.
class HeckeOperator {
 public:
  using Monomial = std::vector<int>;

  HeckeOperator(size_t n, long p);
  static HeckeOperator identity(size_t n, long p) { return scalar(n, p, BigRat(1)); }
  static HeckeOperator scalar(size_t n, long p, const BigRat& c);
  /// Tt_j; j = 0 gives the identity.
  static HeckeOperator generator(size_t n, long p, int j);
  /// T_{j,p} = p^{-j} Tt_j.
  static HeckeOperator normalized_generator(size_t n, long p, int j);

  size_t rank() const { return n_; }
  long prime() const { return p_; }
  const std::map<Monomial, BigRat>& terms() const { return terms_; }

  HeckeOperator operator+(const HeckeOperator& o) const;
  HeckeOperator operator-(const HeckeOperator& o) const;
  friend HeckeOperator operator*(const BigRat& k, const HeckeOperator& a);
  friend bool operator==(const HeckeOperator& a, const HeckeOperator& b) {
    return a.n_ == b.n_ && a.p_ == b.p_ && a.terms_ == b.terms_;
  }

  LatticeVector apply(const LatticeVector& v) const;
  std::string str() const;

 private:
  friend HeckeOperator compose(const HeckeOperator& a, const HeckeOperator& b);
  void require_same(const HeckeOperator& o) const;
  void prune();
  size_t n_;
  long p_;
  std::map<Monomial, BigRat> terms_;
};

/// Product in the polynomial ring of generators; acts as a after b.
HeckeOperator compose(const HeckeOperator& a, const HeckeOperator& b);

/// Coefficients (-1)^j p^{j(j-1)/2} T_{j,p}, j = 0..n, of the Euler factor F_X.
std::vector<HeckeOperator> euler_factor(size_t n, long p);

struct EulerInverseReport {
  size_t n = 0;
  long p = 0;
  int degree = 0;
  /// residuals[m-1] is the X^m coefficient of F_X * sum_k T(p^k) X^k on [Z^n].
  std::vector<LatticeVector> residuals;
  std::optional<int> first_nonzero_degree;
  bool ok() const { return !first_nonzero_degree.has_value(); }
};

/// Evaluates each X^m coefficient (1 <= m <= d) of the product on [Z^n].
EulerInverseReport verify_euler_inverse(size_t n, long p, int d);

}  // namespace morlog
