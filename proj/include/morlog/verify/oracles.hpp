#pragma once

#include <vector>

#include "morlog/burnside.hpp"
#include "morlog/series.hpp"

// Brute-force counterparts of closed forms, used only for verification.
namespace morlog::oracle {

/// Decomposes G/S x G/T into diagonal orbits and tallies them by stabilizer.
BurnsideElem product_by_orbits(const SubgroupTablePtr& table, size_t s, size_t t);

/// The Z^n-set Z^n / ann(U) restricted to T (an open sublattice containing
/// p Z^n), decomposed into T-orbits on the finite quotient by p Z^n. `dual`
/// is the table of (Z/p)^n.
LatticeSetClass restrict_by_orbits(const SubgroupTable& dual, size_t u, const IntMatrix& t);

/// Number of subgroups of a finite abelian p-group, counted by closing every
/// subset of a generating family; only for very small groups.
size_t count_subgroups_by_closure(const FinAbPGroup& g);

/// Moebius function from its defining recursion mu(c, b) = -sum_{c <= x < b} mu(c, x),
/// run over the whole subgroup lattice without memoization.
BigRat moebius_by_recursion(const SubgroupTable& table, size_t c, size_t b);

/// Artin-Hasse series from Dwork's product prod_{(m,p)=1} (1 - T^m)^{-mu(m)/m},
/// each factor expanded as a binomial series; coefficients of T^0..T^degree.
TruncSeries<BigRat> artin_hasse_by_product(long p, size_t degree);

}  // namespace morlog::oracle
