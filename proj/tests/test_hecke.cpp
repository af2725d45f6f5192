#include <gtest/gtest.h>

#include "morlog/burnside.hpp"
#include "morlog/errors.hpp"
#include "morlog/hecke.hpp"

using namespace morlog;

namespace {

IntMatrix matrix(std::vector<std::vector<long>> rows) {
  IntMatrix m;
  for (const auto& r : rows) {
    IntVector v;
    for (long x : r) v.emplace_back(x);
    m.push_back(v);
  }
  return m;
}

LatticeVector sum_of(const std::vector<Lattice>& ls, const BigRat& c) {
  LatticeVector v(ls.front().rank());
  for (const auto& l : ls) v.add_term(l, c);
  return v;
}

}  // namespace

TEST(Sublattices, Counts) {
  auto z2 = Lattice::standard(2);
  EXPECT_EQ(enumerate_sublattices(z2, 2, 1).size(), 3U);
  EXPECT_EQ(enumerate_sublattices(z2, 2, 2).size(), 7U);
  for (long p : {2L, 3L, 5L}) {
    for (int k = 0; k <= 3; ++k) {
      auto subs = enumerate_sublattices(Lattice::standard(1), p, k);
      ASSERT_EQ(subs.size(), 1U);
      EXPECT_EQ(subs[0].index(), pow_int(BigInt(p), static_cast<unsigned long>(k)));
    }
  }
  for (auto [n, p, k] : {std::tuple{2, 3L, 2}, std::tuple{3, 2L, 2}, std::tuple{3, 3L, 1}})
    EXPECT_EQ(BigInt(static_cast<unsigned long>(enumerate_sublattices(Lattice::standard(n), p, k).size())),
              count_sublattices(static_cast<size_t>(n), p, k));
}

TEST(Sublattices, RelativeToNonStandardLattice) {
  Lattice l(matrix({{2, 1}, {0, 3}}));
  for (const auto& m : enumerate_sublattices(l, 2, 2)) {
    EXPECT_TRUE(l.contains(m));
    EXPECT_EQ(m.index(), l.index() * 4);
  }
}

TEST(Generators, EdgeCases) {
  for (size_t n : {1U, 2U, 3U}) {
    const long p = 2;
    auto v = LatticeVector::basis(Lattice::standard(n));
    EXPECT_EQ(apply_generator(0, v, p), v);
    IntMatrix scaled = identity_matrix(n);
    for (auto& row : scaled)
      for (auto& x : row) x *= p;
    EXPECT_EQ(apply_generator(static_cast<int>(n), v, p), LatticeVector::basis(Lattice(scaled)));
  }
  auto z2 = LatticeVector::basis(Lattice::standard(2));
  EXPECT_EQ(apply_generator(1, z2, 2), sum_of(enumerate_sublattices(Lattice::standard(2), 2, 1), BigRat(1)));
}

TEST(Generators, ImageMassIsGaussianBinomial) {
  for (auto [n, p] : {std::pair{2, 2L}, std::pair{3, 2L}, std::pair{2, 3L}}) {
    auto v = LatticeVector::basis(Lattice::standard(static_cast<size_t>(n)));
    for (int j = 0; j <= n; ++j) EXPECT_EQ(apply_generator(j, v, p).mass(), gaussian_binomial(n, j, p));
  }
}

TEST(Generators, CommuteWithUnimodularChangeOfBasis) {
  auto u = matrix({{2, 1}, {1, 1}});
  Lattice l(matrix({{1, 0}, {0, 2}}));
  auto v = LatticeVector::basis(l);
  for (int j = 0; j <= 2; ++j) EXPECT_EQ(apply_generator(j, v.transform(u), 3), apply_generator(j, v, 3).transform(u));
  EXPECT_THROW(l.transform(matrix({{2, 0}, {0, 1}})), DomainError);
}

TEST(Generators, Commute) {
  for (auto [n, p] : {std::pair{2, 2L}, std::pair{3, 2L}}) {
    auto v = LatticeVector::basis(Lattice::standard(static_cast<size_t>(n)));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        EXPECT_EQ(apply_generator(i, apply_generator(j, v, p), p), apply_generator(j, apply_generator(i, v, p), p));
  }
}

TEST(TPk, Examples) {
  auto z = LatticeVector::basis(Lattice::standard(1));
  for (long p : {2L, 3L}) {
    EXPECT_EQ(t_pk(0, z, p), z);
    for (int k = 1; k <= 3; ++k) {
      BigInt pk = pow_int(BigInt(p), static_cast<unsigned long>(k));
      LatticeVector want(1);
      want.add_term(Lattice(matrix({{pk.get_si()}})), BigRat(BigInt(1), pk));
      EXPECT_EQ(t_pk(k, z, p), want);
    }
  }
  auto z2 = LatticeVector::basis(Lattice::standard(2));
  EXPECT_EQ(t_pk(2, z2, 2), sum_of(enumerate_sublattices(Lattice::standard(2), 2, 2), BigRat(BigInt(1), BigInt(4))));
}

TEST(Compose, Examples) {
  const long p = 2;
  auto t1 = HeckeOperator::generator(2, p, 1);
  EXPECT_EQ(compose(t1, HeckeOperator::identity(2, p)), t1);
  auto z2 = LatticeVector::basis(Lattice::standard(2));
  auto n1 = HeckeOperator::normalized_generator(2, p, 1);
  auto n2 = HeckeOperator::normalized_generator(2, p, 2);
  EXPECT_EQ(compose(n1, n2).apply(z2), compose(n2, n1).apply(z2));
  EXPECT_EQ(compose(n1, n2).apply(z2), n1.apply(n2.apply(z2)));
  // n = 1: T_{1,p} T(p^k) = T(p^{k+1}) on [Z]
  auto z = LatticeVector::basis(Lattice::standard(1));
  for (int k = 0; k <= 3; ++k)
    EXPECT_EQ(HeckeOperator::normalized_generator(1, 3, 1).apply(t_pk(k, z, 3)), t_pk(k + 1, z, 3));
}

TEST(EulerInverse, ResidualsVanish) {
  for (auto [n, p, d] : {std::tuple{1, 2L, 5}, std::tuple{1, 5L, 5}, std::tuple{2, 2L, 3}, std::tuple{3, 2L, 2}}) {
    auto rep = verify_euler_inverse(static_cast<size_t>(n), p, d);
    EXPECT_TRUE(rep.ok()) << n << " " << p << " " << d;
    EXPECT_EQ(rep.residuals.size(), static_cast<size_t>(d));
  }
}

TEST(EulerInverse, SecondCoefficientByHand) {
  // T(p^2) - T_1 T(p) + p T_2 on [Z^2], p = 2.
  const long p = 2;
  auto z2 = LatticeVector::basis(Lattice::standard(2));
  auto t1 = HeckeOperator::normalized_generator(2, p, 1);
  auto t2 = HeckeOperator::normalized_generator(2, p, 2);
  auto x2 = t_pk(2, z2, p) - t1.apply(t_pk(1, z2, p)) + BigRat(p) * t2.apply(z2);
  EXPECT_TRUE(x2.is_zero());
}

TEST(EulerInverse, DamagedFactorIsDetected) {
  // Dropping the sign of T_1 must leave a residual in degree 1.
  const long p = 2;
  auto z2 = LatticeVector::basis(Lattice::standard(2));
  auto wrong = t_pk(1, z2, p) + HeckeOperator::normalized_generator(2, p, 1).apply(z2);
  EXPECT_FALSE(wrong.is_zero());
}
