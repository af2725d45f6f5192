#include <gtest/gtest.h>

#include <random>

#include "morlog/burnside.hpp"
#include "morlog/errors.hpp"
#include "morlog/verify/oracles.hpp"

using namespace morlog;

namespace {

size_t find_generated(const SubgroupTable& t, std::vector<long> gen) {
  return t.generated_by({t.group().encode(gen)});
}

}  // namespace

TEST(Subgroups, CountsAgainstClosureOracle) {
  struct Case {
    FinAbPGroup g;
    size_t want;
  };
  for (const auto& c : {Case{FinAbPGroup::homocyclic(2, 1, 2), 5}, Case{FinAbPGroup::homocyclic(2, 2, 2), 15},
                        Case{FinAbPGroup::homocyclic(2, 1, 3), 16}, Case{FinAbPGroup::homocyclic(3, 2, 1), 3},
                        Case{FinAbPGroup(2, {2, 1}), 8}}) {
    auto table = enumerate_subgroups(c.g);
    EXPECT_EQ(table->size(), c.want) << c.g.str();
    EXPECT_EQ(oracle::count_subgroups_by_closure(c.g), c.want) << c.g.str();
  }
}

TEST(Subgroups, ElementaryCountsAreGaussianBinomials) {
  for (auto [p, n] : {std::pair{2L, 3}, std::pair{2L, 4}, std::pair{3L, 3}, std::pair{5L, 2}}) {
    auto table = enumerate_subgroups(FinAbPGroup::homocyclic(p, 1, n));
    std::vector<long> count(static_cast<size_t>(n + 1), 0);
    for (size_t s = 0; s < table->size(); ++s) ++count[static_cast<size_t>(table->log_order(s))];
    for (int j = 0; j <= n; ++j) EXPECT_EQ(BigRat(count[j]), gaussian_binomial(n, j, p)) << p << " " << n << " " << j;
  }
}

TEST(Subgroups, LatticeOperationsAgreeWithElementSets) {
  auto table = enumerate_subgroups(FinAbPGroup(2, {2, 1}));
  const auto& g = table->group();
  for (size_t a = 0; a < table->size(); ++a) {
    for (size_t b = 0; b < table->size(); ++b) {
      const auto& sa = (*table)[a];
      const auto& sb = (*table)[b];
      const auto& meet = (*table)[table->meet(a, b)];
      for (uint32_t x = 0; x < g.order(); ++x) EXPECT_EQ(meet.has(x), sa.has(x) && sb.has(x));
      EXPECT_EQ(static_cast<uint64_t>(sa.order) * sb.order, static_cast<uint64_t>(meet.order) * (*table)[table->sum(a, b)].order);
      bool subset = true;
      for (uint32_t x : sb.elements) subset = subset && sa.has(x);
      EXPECT_EQ(table->contains(a, b), subset);
    }
  }
}

TEST(Subgroups, OrderLimitIsResourceError) {
  EXPECT_THROW(enumerate_subgroups(FinAbPGroup::homocyclic(2, 1, 6), 32), ResourceError);
}

TEST(Gaussian, Examples) {
  EXPECT_EQ(gaussian_binomial(2, 1, 2), BigRat(3));
  for (long p : {2L, 3L, 7L}) EXPECT_EQ(gaussian_binomial(4, 0, p), BigRat(1));
  EXPECT_EQ(gaussian_binomial(3, 1, 2), BigRat(7));
  // 1 - 7 + 2*7 - 8*1
  EXPECT_EQ(gaussian_alternating_sum(3, 2), BigRat(0));
  EXPECT_EQ(gaussian_alternating_sum(0, 5), BigRat(1));
}

TEST(Moebius, Examples) {
  auto v4 = enumerate_subgroups(FinAbPGroup::homocyclic(2, 1, 2));
  EXPECT_EQ(moebius(*v4, v4->trivial(), v4->whole()), BigRat(2));
  auto z4 = enumerate_subgroups(FinAbPGroup::homocyclic(2, 2, 1));
  EXPECT_EQ(moebius(*z4, z4->trivial(), z4->whole()), BigRat(0));
  // The interval [(Z/2)^2, (Z/2)^3] looks like the lattice of Z/2.
  auto e3 = enumerate_subgroups(FinAbPGroup::homocyclic(2, 1, 3));
  size_t c = e3->generated_by({e3->group().encode({1, 0, 0}), e3->group().encode({0, 1, 0})});
  EXPECT_EQ(moebius(*e3, c, e3->whole()), BigRat(-1));
}

TEST(Moebius, AgreesWithDefiningRecursionOnEveryInterval) {
  for (const auto& g : {FinAbPGroup::homocyclic(2, 1, 3), FinAbPGroup(2, {2, 1}), FinAbPGroup::homocyclic(3, 1, 2)}) {
    auto table = enumerate_subgroups(g);
    for (size_t c = 0; c < table->size(); ++c)
      for (size_t b = 0; b < table->size(); ++b)
        if (table->contains(b, c))
          EXPECT_EQ(moebius(*table, c, b), oracle::moebius_by_recursion(*table, c, b)) << g.str();
  }
}

TEST(BurnsideMul, UnitAndSquareOfLine) {
  auto table = enumerate_subgroups(FinAbPGroup::homocyclic(2, 1, 2));
  size_t s = find_generated(*table, {1, 0});
  auto gs = BurnsideElem::basis(table, s);
  EXPECT_EQ(burnside_mul(BurnsideElem::unit(table), gs), gs);
  EXPECT_EQ(burnside_mul(gs, gs), BigRat(2) * gs);
  EXPECT_EQ(oracle::product_by_orbits(table, s, s), BigRat(2) * gs);
}

TEST(BurnsideMul, ClosedFormMatchesOrbitOracle) {
  for (const auto& g : {FinAbPGroup::homocyclic(2, 1, 3), FinAbPGroup::homocyclic(3, 2, 1), FinAbPGroup(2, {2, 1})}) {
    auto table = enumerate_subgroups(g);
    for (size_t s = 0; s < table->size(); ++s)
      for (size_t t = 0; t < table->size(); ++t)
        EXPECT_EQ(burnside_mul(BurnsideElem::basis(table, s), BurnsideElem::basis(table, t)),
                  oracle::product_by_orbits(table, s, t));
  }
}

TEST(FixedPoints, Examples) {
  auto table = enumerate_subgroups(FinAbPGroup::homocyclic(3, 1, 2));
  EXPECT_EQ(fixed_points(BurnsideElem::unit(table), table->whole()), BigRat(1));
  for (size_t b = 0; b < table->size(); ++b)
    EXPECT_EQ(fixed_points(BurnsideElem::basis(table, b), table->trivial()), BigRat(static_cast<long>(table->index(b))));
}

TEST(FixedPoints, MarksAreRingHomomorphisms) {
  std::mt19937_64 rng(41);
  auto table = enumerate_subgroups(FinAbPGroup::homocyclic(2, 1, 2));
  std::uniform_int_distribution<long> d(-4, 4);
  auto random = [&] {
    std::vector<BigRat> c;
    for (size_t s = 0; s < table->size(); ++s) c.push_back(BigRat(d(rng)));
    return BurnsideElem(table, c);
  };
  for (int i = 0; i < 50; ++i) {
    auto x = random(), y = random();
    for (size_t a = 0; a < table->size(); ++a) {
      EXPECT_EQ(fixed_points(burnside_mul(x, y), a), fixed_points(x, a) * fixed_points(y, a));
      EXPECT_EQ(fixed_points(x + y, a), fixed_points(x, a) + fixed_points(y, a));
    }
  }
}

TEST(Idempotent, CyclicOfOrderP) {
  for (long p : {2L, 3L, 5L}) {
    auto table = enumerate_subgroups(FinAbPGroup::homocyclic(p, 1, 1));
    auto e = idempotent(table, table->whole());
    auto want = BurnsideElem::unit(table) - BigRat(BigInt(1), BigInt(p)) * BurnsideElem::basis(table, table->trivial());
    EXPECT_EQ(e, want);
    EXPECT_EQ(burnside_mul(e, e), e);
  }
}

TEST(Idempotent, OrthogonalAndSumToOne) {
  for (const auto& g : {FinAbPGroup::homocyclic(2, 1, 2), FinAbPGroup::homocyclic(3, 2, 1)}) {
    auto table = enumerate_subgroups(g);
    auto total = BurnsideElem::zero(table);
    for (size_t a = 0; a < table->size(); ++a) {
      auto ea = idempotent(table, a);
      total = total + ea;
      for (size_t b = 0; b < table->size(); ++b) {
        auto prod = burnside_mul(ea, idempotent(table, b));
        EXPECT_EQ(prod, a == b ? ea : BurnsideElem::zero(table));
      }
      for (size_t c = 0; c < table->size(); ++c) EXPECT_EQ(fixed_points(ea, c), BigRat(a == c ? 1 : 0));
    }
    EXPECT_EQ(total, BurnsideElem::unit(table));
  }
}

TEST(RezkElement, RankOneIsPPointMinusOrbit) {
  for (long p : {2L, 3L, 5L}) {
    auto e = rezk_element(1, p, 1);
    const auto& table = e.table_ptr();
    auto want = BigRat(p) * BurnsideElem::unit(table) - BurnsideElem::basis(table, table->trivial());
    EXPECT_EQ(e, want);
  }
}

TEST(RezkElement, DefiningProperties) {
  for (auto [n, p] : {std::pair{1, 2L}, std::pair{2, 2L}, std::pair{3, 2L}, std::pair{1, 3L}, std::pair{2, 3L}}) {
    auto e = rezk_element(n, p, 1);
    const auto& table = e.table_ptr();
    EXPECT_TRUE(e.is_integral());
    EXPECT_EQ(fixed_points(e, table->whole()), BigRat(p));
    EXPECT_EQ(burnside_mul(e, e), BigRat(p) * e);
    for (size_t s = 0; s < table->size(); ++s) {
      auto y = BurnsideElem::basis(table, s);
      EXPECT_EQ(burnside_mul(y, e), fixed_points(y, table->whole()) * e);
    }
  }
}

TEST(RezkElement, StableUnderInflation) {
  for (auto [n, p] : {std::pair{1, 2L}, std::pair{2, 2L}, std::pair{1, 3L}}) {
    auto e1 = rezk_element(n, p, 1);
    auto e2 = rezk_element(n, p, 2);
    EXPECT_EQ(inflate(e1, e2.table_ptr()), e2);
  }
}

TEST(ExponentCancellation, Examples) {
  EXPECT_TRUE(exponent_cancellation(0, 2).is_zero());
  for (long p : {2L, 3L, 5L, 7L}) EXPECT_TRUE(exponent_cancellation(1, p).is_zero());
  for (long p : {2L, 3L, 5L})
    for (int j = 0; j <= 6; ++j) EXPECT_TRUE(exponent_cancellation(j, p).is_zero());
}

TEST(Restriction, LemmaCasesAndOrbitOracle) {
  for (long p : {2L, 3L}) {
    auto table = enumerate_subgroups(FinAbPGroup::homocyclic(p, 1, 2));
    size_t v = find_generated(*table, {1, 0});
    size_t w = find_generated(*table, {0, 1});
    auto at_v = restrict_lambda_set(*table, v, v, w);
    EXPECT_EQ(at_v.multiplicity, p);
    EXPECT_EQ(at_v.projected, table->trivial());
    EXPECT_EQ(restrict_lambda_set(*table, table->trivial(), v, w).multiplicity, 1);
    for (size_t u = 0; u < table->size(); ++u) {
      auto res = restrict_lambda_set(*table, u, v, w);
      LatticeSetClass scaled;
      for (const auto& [lat, m] : res.restricted) scaled[lat] = m * res.multiplicity;
      EXPECT_EQ(oracle::restrict_by_orbits(*table, u, res.t_lattice), scaled) << table->describe(u);
    }
  }
}

TEST(Restriction, RejectsBadDecomposition) {
  auto table = enumerate_subgroups(FinAbPGroup::homocyclic(2, 1, 2));
  size_t v = find_generated(*table, {1, 0});
  EXPECT_THROW(restrict_lambda_set(*table, table->trivial(), v, v), DomainError);
  EXPECT_THROW(restrict_lambda_set(*table, table->trivial(), table->whole(), table->trivial()), DomainError);
}
