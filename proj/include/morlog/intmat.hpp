#pragma once

#include <span>
#include <string>
#include <vector>

#include "morlog/bigrat.hpp"

namespace morlog {

using IntVector = std::vector<BigInt>;
/// Row-major; a lattice is the Z-span of the rows.
using IntMatrix = std::vector<IntVector>;

IntMatrix identity_matrix(size_t n);
IntMatrix diagonal_matrix(std::span<const BigInt> diag);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
BigInt determinant(const IntMatrix& m);

/// Incrementally built Hermite normal form of a full-rank sublattice of Z^n.
///
/// Canonical form: upper triangular, positive diagonal, and for each column
/// c the entries above the pivot lie in [0, H[c][c]). Two generating sets
/// span the same lattice iff their HNFs are equal.
class HnfBuilder {
 public:
  explicit HnfBuilder(size_t n) : rows_(n) {}
  void insert(IntVector v);
  /// Throws DomainError if the span is not full rank.
  IntMatrix finish() const;

 private:
  std::vector<IntVector> rows_;  // rows_[c] empty or has pivot in column c
};

IntMatrix hermite_normal_form(const IntMatrix& generators, size_t n);

/// v lies in the row span of the HNF basis h.
bool lattice_contains_vector(const IntMatrix& h, IntVector v);
/// small is a sublattice of big (both HNF).
bool lattice_contains(const IntMatrix& big, const IntMatrix& small);
IntMatrix lattice_sum(const IntMatrix& a, const IntMatrix& b);
/// Intersection of two full-rank lattices, by enumeration modulo
/// lcm(det a, det b); meant for small indices.
IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b);
BigInt lattice_index(const IntMatrix& h);

/// Invariant factors d_1 | d_2 | ... | d_n of a nonsingular square matrix.
std::vector<BigInt> smith_invariants(IntMatrix m);

/// Invariant factors (those > 1) of big/small for small contained in big.
std::vector<BigInt> quotient_invariants(const IntMatrix& big, const IntMatrix& small);

std::string matrix_to_string(const IntMatrix& m);

}  // namespace morlog
