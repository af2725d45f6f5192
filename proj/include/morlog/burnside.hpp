#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "morlog/abelian_group.hpp"
#include "morlog/bigrat.hpp"
#include "morlog/intmat.hpp"

namespace morlog {

/// A subgroup of G = prod Z/p^{r_i}, kept both as its element set and as the
/// lattice M with diag(p^{r_i}) Z^n <= M <= Z^n (HNF) that it corresponds to.
struct Subgroup {
  IntMatrix lattice;
  std::vector<uint64_t> bits;       // membership bitset over element indices
  std::vector<uint32_t> elements;   // sorted
  std::vector<uint32_t> generators;
  uint32_t order = 0;

  bool has(uint32_t e) const { return (bits[e >> 6] >> (e & 63)) & 1U; }
};

/// Every subgroup of a finite abelian p-group, in canonical order (by order,
/// then HNF lattice basis), with containment, sums and intersections
/// tabulated.
class SubgroupTable {
 public:
  static constexpr uint32_t kDefaultMaxOrder = 4096;

  /// Throws ResourceError if |G| exceeds max_order or the enumeration exceeds
  /// MORLOG_MAX_WORK.
  static std::shared_ptr<const SubgroupTable> build(const FinAbPGroup& g,
                                                    uint32_t max_order = kDefaultMaxOrder);

  const FinAbPGroup& group() const { return group_; }
  size_t size() const { return subs_.size(); }
  const Subgroup& operator[](size_t i) const { return subs_[i]; }
  size_t trivial() const { return 0; }
  size_t whole() const { return subs_.size() - 1; }

  /// small <= big
  bool contains(size_t big, size_t small) const { return contains_[big * size() + small] != 0; }
  size_t sum(size_t a, size_t b) const { return sum_[a * size() + b]; }
  size_t meet(size_t a, size_t b) const { return meet_[a * size() + b]; }
  /// [G : S]
  uint32_t index(size_t s) const { return group_.order() / subs_[s].order; }

  std::optional<size_t> find(const std::vector<uint64_t>& bits) const;
  std::optional<size_t> find_lattice(const IntMatrix& hnf) const;
  /// Subgroup generated by the given elements.
  size_t generated_by(const std::vector<uint32_t>& gens) const;
  /// p^k G
  size_t multiple(long k) const;

  /// Invariant factors (> 1) of big/small, via Smith normal form of the lattice inclusion.
  std::vector<BigInt> quotient_type(size_t big, size_t small) const;
  /// big/small is elementary abelian (every invariant factor equals p).
  bool is_elementary_quotient(size_t big, size_t small) const;
  /// log_p of |S|
  int log_order(size_t s) const;

  std::string describe(size_t s) const;

 private:
  explicit SubgroupTable(FinAbPGroup g) : group_(std::move(g)) {}
  std::vector<uint64_t> closure(const std::vector<uint32_t>& base, uint32_t g) const;
  IntMatrix lattice_of(const std::vector<uint32_t>& gens) const;

  FinAbPGroup group_;
  std::vector<Subgroup> subs_;
  std::map<std::vector<uint64_t>, size_t> by_bits_;
  std::map<IntMatrix, size_t> by_lattice_;
  std::vector<uint8_t> contains_;
  std::vector<uint32_t> sum_;
  std::vector<uint32_t> meet_;
};

using SubgroupTablePtr = std::shared_ptr<const SubgroupTable>;

inline SubgroupTablePtr enumerate_subgroups(const FinAbPGroup& g,
                                            uint32_t max_order = SubgroupTable::kDefaultMaxOrder) {
  return SubgroupTable::build(g, max_order);
}

/// [n choose j]_p = prod_{i<j} (p^n - p^i)/(p^j - p^i).
BigRat gaussian_binomial(int n, int j, long p);
/// sum_j (-1)^j p^{j(j-1)/2} [n choose j]_p, which is 1 for n = 0 and 0 otherwise.
BigRat gaussian_alternating_sum(int n, long p);

/// Moebius function of the subgroup lattice on the interval [c, b]. Values
/// are memoized per isomorphism type of b/c.
BigRat moebius(const SubgroupTable& table, size_t c, size_t b);

/// sum_S c_S [G/S] with rational coefficients, indexed like the table.
class BurnsideElem {
 public:
  BurnsideElem(SubgroupTablePtr table, std::vector<BigRat> coeffs);
  static BurnsideElem zero(SubgroupTablePtr table);
  /// The transitive G-set [G/S].
  static BurnsideElem basis(SubgroupTablePtr table, size_t s);
  static BurnsideElem unit(SubgroupTablePtr table) { return basis(table, table->whole()); }

  const SubgroupTable& table() const { return *table_; }
  const SubgroupTablePtr& table_ptr() const { return table_; }
  const std::vector<BigRat>& coeffs() const { return coeffs_; }
  const BigRat& coeff(size_t s) const { return coeffs_[s]; }
  bool is_integral() const;

  BurnsideElem operator+(const BurnsideElem& o) const;
  BurnsideElem operator-(const BurnsideElem& o) const;
  friend BurnsideElem operator*(const BigRat& k, const BurnsideElem& x);
  friend bool operator==(const BurnsideElem& a, const BurnsideElem& b);

  std::string str() const;

 private:
  void require_same(const BurnsideElem& o) const;
  SubgroupTablePtr table_;
  std::vector<BigRat> coeffs_;
};

/// Bilinear extension of [G/S][G/T] = [G : S+T] [G/(S n T)].
BurnsideElem burnside_mul(const BurnsideElem& x, const BurnsideElem& y);
/// d_A(x): linear extension of d_A([G/B]) = [G:B] if A <= B, else 0.
BigRat fixed_points(const BurnsideElem& x, size_t a);
/// e_A = sum_{B <= A} mu(B, A) / [G:B] [G/B], the primitive idempotent for A.
BurnsideElem idempotent(const SubgroupTablePtr& table, size_t a);
/// p * sum_j (-1)^j p^{j(j-1)/2} e_j in A((Z/p^r)^n), where e_j averages the
/// classes [G/S] over p G <= S with G/S = (Z/p)^j. Coefficients are
/// integral; a non-integral coefficient raises InternalError.
BurnsideElem rezk_element(int n, long p, int r);
/// Pull back along (Z/p^{r+1})^n -> (Z/p^r)^n: [G_r/S] -> [G_{r+1}/preimage(S)].
BurnsideElem inflate(const BurnsideElem& x, const SubgroupTablePtr& target);

/// d(j) p^j + d(j+1) p with d(j) = (-1)^j p^{(j-1)(j-2)/2}; always zero.
BigRat exponent_cancellation(int j, long p);

/// A virtual T-set for an open sublattice T of Z^n: stabilizer lattice (HNF,
/// containing some p^k Z^n) -> multiplicity of [T/W].
using LatticeSetClass = std::map<IntMatrix, BigInt>;

struct RestrictionResult {
  IntMatrix t_lattice;          // T = annihilator of V in Z^n
  size_t projected;             // index of Ubar in the dual table
  LatticeSetClass restricted;   // s(Ubar)|_T
  BigInt multiplicity;          // 1 if V is not in U, p if it is
};

/// Annihilator {lambda in Z^n : <u, lambda> = 0 mod p for all u in U} of a
/// subgroup U of the dual group (Z/p)^n; contains p Z^n.
IntMatrix annihilator_lattice(const SubgroupTable& dual, size_t u);

/// Restriction of s(W) = [Z^n / ann(W)] to the sublattice T: it splits into
/// [Z^n : T + ann(W)] copies of [T / (T n ann(W))].
LatticeSetClass restrict_to_sublattice(const IntMatrix& lambda_set_stabilizer, const IntMatrix& t);

/// s(U)|_T = multiplicity * s(Ubar)|_T where Ubar is the projection of U to
/// v_perp along v. `dual` must be the table of (Z/p)^n; v must have order p
/// and v + v_perp must be a direct sum decomposition of the whole group.
RestrictionResult restrict_lambda_set(const SubgroupTable& dual, size_t u, size_t v, size_t v_perp);

}  // namespace morlog
