#include <gtest/gtest.h>

#include <random>

#include "morlog/formal_group.hpp"
#include "morlog/quotient_ring.hpp"

using namespace morlog;

namespace {

using Cyc = PolyQuotient<Integers>;

std::vector<Cyc::Elem> cyclotomic_points(const Cyc& ring, long p, long k) {
  auto zeta = ring_pow(ring, ring.add(ring.one(), ring.variable()), static_cast<unsigned long>(k));
  std::vector<Cyc::Elem> pts;
  auto power = ring.one();
  for (long a = 0; a < p; ++a, power = ring.mul(power, zeta)) pts.push_back(ring.sub(power, ring.one()));
  return pts;
}

}  // namespace

TEST(MakeFgl, AdditiveAndMultiplicativeCoefficients) {
  Integers z;
  auto add = make_fgl(FglKind::Additive, 3, 0, z, 5);
  auto mul = make_fgl(FglKind::Multiplicative, 3, 1, z, 5);
  for (size_t i = 0; i <= 5; ++i) {
    for (size_t j = 0; i + j <= 5; ++j) {
      BigInt want_add = (i + j == 1) ? 1 : 0;
      BigInt want_mul = (i + j == 1 || (i == 1 && j == 1)) ? 1 : 0;
      EXPECT_EQ(add.coeff(i, j), want_add);
      EXPECT_EQ(mul.coeff(i, j), want_mul);
    }
  }
  EXPECT_TRUE(add.exact());
  EXPECT_EQ(formal_add(mul, BigInt(3), BigInt(4)), 3 + 4 + 12);
}

TEST(MakeFgl, EveryLawSatisfiesAxioms) {
  Integers z;
  for (long p : {2L, 3L}) {
    for (int n = 1; n <= 2; ++n) {
      size_t d = static_cast<size_t>(pow_int(BigInt(p), static_cast<unsigned long>(n)).get_ui()) + 1;
      auto f = make_fgl(FglKind::Honda, p, n, z, std::max<size_t>(d, 6));
      auto rep = check_fgl_axioms(f);
      EXPECT_TRUE(rep.ok()) << f.tag() << " p=" << p;
    }
    EXPECT_TRUE(check_fgl_axioms(make_fgl(FglKind::Multiplicative, p, 1, z, 6)).ok());
  }
  EXPECT_THROW(make_fgl(FglKind::Honda, 2, 2, z, 4), DomainError);
}

TEST(PSeries, AdditiveAndMultiplicative) {
  Integers z;
  for (long p : {2L, 3L, 5L}) {
    auto add = p_series(make_fgl(FglKind::Additive, p, 0, z, 7));
    auto mul = p_series(make_fgl(FglKind::Multiplicative, p, 1, z, 7));
    for (size_t k = 0; k <= 7; ++k) {
      EXPECT_EQ(add[k], k == 1 ? BigInt(p) : BigInt(0));
      BigInt binom = 0;
      if (k >= 1 && k <= static_cast<size_t>(p)) mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(p), k);
      EXPECT_EQ(mul[k], binom) << "p=" << p << " k=" << k;
    }
  }
}

TEST(PSeries, HondaHeightIsVisibleModP) {
  Integers z;
  for (auto [p, n] : {std::pair{2L, 1}, std::pair{2L, 2}, std::pair{3L, 1}, std::pair{3L, 2}, std::pair{5L, 1}}) {
    size_t pn = static_cast<size_t>(pow_int(BigInt(p), static_cast<unsigned long>(n)).get_ui());
    auto ps = p_series(make_fgl(FglKind::Honda, p, n, z, pn + 2));
    for (size_t k = 0; k < pn; ++k) EXPECT_TRUE(mpz_divisible_ui_p(ps[k].get_mpz_t(), static_cast<unsigned long>(p)));
    EXPECT_FALSE(mpz_divisible_ui_p(ps[pn].get_mpz_t(), static_cast<unsigned long>(p))) << "p=" << p << " n=" << n;
  }
}

TEST(PSeries, HondaMatchesLogarithmConjugation) {
  // [2](T) = f^{-1}(2 f(T)) with f(T) = T + T^4/2 + T^16/4 + ..., over Q.
  Rationals q;
  const size_t d = 8;
  auto log = series_zero(q, d + 1);
  log[1] = BigRat(1);
  log[4] = BigRat(BigInt(1), BigInt(2));
  auto exp = series_reversion(q, log);
  auto oracle = series_compose(q, exp, series_scale(q, BigRat(2), log));
  auto ps = p_series(make_fgl(FglKind::Honda, 2, 2, Integers{}, d));
  for (size_t k = 0; k <= d; ++k) EXPECT_EQ(BigRat(ps[k]), oracle[k]) << "k=" << k;
  for (size_t k = 0; k <= d; ++k) {
    bool odd = mpz_odd_p(ps[k].get_mpz_t()) != 0;
    EXPECT_EQ(odd, k == 4) << "k=" << k;
  }
}

TEST(FormalAdd, UnitAndAssociativityOnNilpotents) {
  std::mt19937_64 rng(31);
  auto ring = PolyQuotient<Integers>::truncated(Integers{}, 4, "e");
  auto f = make_fgl(FglKind::Honda, 2, 1, ring, 8);
  std::uniform_int_distribution<long> d(-6, 6);
  auto nil = [&] {
    auto x = ring.zero();
    for (size_t k = 1; k < 4; ++k) x[k] = d(rng);
    return x;
  };
  for (int i = 0; i < 30; ++i) {
    auto a = nil(), b = nil(), c = nil();
    EXPECT_TRUE(ring.equal(formal_add(f, a, ring.zero()), a));
    EXPECT_TRUE(ring.equal(formal_add(f, formal_add(f, a, b), c), formal_add(f, a, formal_add(f, b, c))));
  }
}

TEST(FormalAdd, NonNilpotentInputBeyondTruncationIsPrecisionError) {
  Integers z;
  auto f = make_fgl(FglKind::Honda, 2, 1, z, 4);
  EXPECT_THROW(formal_add(f, BigInt(1), BigInt(1)), PrecisionError);
}

TEST(LevelStructure, CyclotomicDividesExactly) {
  for (long p : {2L, 3L, 5L}) {
    auto ring = Cyc::cyclotomic_shifted(Integers{}, p);
    auto law = make_fgl(FglKind::Multiplicative, p, 1, ring, static_cast<size_t>(p + 3));
    auto rep = check_level_structure(LevelStructureCandidate<Cyc>{law, FinAbPGroup(p, {1}), cyclotomic_points(ring, p, 1)});
    ASSERT_TRUE(rep.divides);
    // prod_a (zeta^a (1 + T) - 1) = (-1)^{p+1} ((1 + T)^p - 1)
    EXPECT_TRUE(ring.equal((*rep.quotient)[0], ring.from_int(BigInt(p == 2 ? -1 : 1))));
    for (size_t k = 1; k < rep.quotient->order(); ++k) EXPECT_TRUE(ring.is_zero((*rep.quotient)[k]));
  }
}

TEST(LevelStructure, InvariantUnderAutomorphismsOfA) {
  const long p = 5;
  auto ring = Cyc::cyclotomic_shifted(Integers{}, p);
  auto law = make_fgl(FglKind::Multiplicative, p, 1, ring, 9);
  auto base = check_level_structure(LevelStructureCandidate<Cyc>{law, FinAbPGroup(p, {1}), cyclotomic_points(ring, p, 1)});
  for (long k = 2; k < p; ++k) {
    auto rep = check_level_structure(LevelStructureCandidate<Cyc>{law, FinAbPGroup(p, {1}), cyclotomic_points(ring, p, k)});
    EXPECT_EQ(rep.divides, base.divides);
    ASSERT_TRUE(rep.quotient);
    EXPECT_TRUE(series_equal(ring, *rep.quotient, *base.quotient));
  }
}

TEST(LevelStructure, TrivialGroupAlwaysDivides) {
  Integers z;
  auto law = make_fgl(FglKind::Multiplicative, 3, 1, z, 5);
  auto rep = check_level_structure(LevelStructureCandidate<Integers>{law, FinAbPGroup(3, {}), {BigInt(0)}});
  EXPECT_TRUE(rep.divides);
}

TEST(LevelStructure, ZeroPointsOverZmodP2FailAtDegreeOne) {
  for (long p : {2L, 3L}) {
    PadicRing r(p, 2);
    auto law = make_fgl(FglKind::Multiplicative, p, 1, r, 6);
    std::vector<PadicInt> zeros(static_cast<size_t>(p), r.zero());
    auto rep = check_level_structure(LevelStructureCandidate<PadicRing>{law, FinAbPGroup(p, {1}), zeros});
    EXPECT_FALSE(rep.divides);
    EXPECT_EQ(rep.obstruction_degree, 1U);
  }
}

TEST(LevelStructure, NonHomomorphismRejectedBeforeDivision) {
  const long p = 3;
  auto ring = Cyc::cyclotomic_shifted(Integers{}, p);
  auto law = make_fgl(FglKind::Multiplicative, p, 1, ring, 6);
  auto pts = cyclotomic_points(ring, p, 1);
  pts[2] = pts[1];
  EXPECT_THROW(check_level_structure(LevelStructureCandidate<Cyc>{law, FinAbPGroup(p, {1}), pts}), DomainError);
  pts = cyclotomic_points(ring, p, 1);
  pts[0] = ring.one();
  EXPECT_THROW(check_level_structure(LevelStructureCandidate<Cyc>{law, FinAbPGroup(p, {1}), pts}), DomainError);
}

TEST(TrivialLevelStructure, Examples) {
  PadicRing f2(2, 1);
  auto honda = make_fgl(FglKind::Honda, 2, 2, f2, 8);
  EXPECT_TRUE(admits_trivial_level_structure(honda, 1));
  EXPECT_TRUE(admits_trivial_level_structure(honda, 2));
  for (long p : {2L, 3L, 5L}) {
    PadicRing fp(p, 1);
    auto mult = make_fgl(FglKind::Multiplicative, p, 1, fp, static_cast<size_t>(p * p));
    EXPECT_TRUE(admits_trivial_level_structure(mult, 1));
    EXPECT_FALSE(admits_trivial_level_structure(mult, 2));
    EXPECT_TRUE(admits_trivial_level_structure(make_fgl(FglKind::Additive, p, 0, fp, 4), 1));
    EXPECT_THROW(admits_trivial_level_structure(make_fgl(FglKind::Additive, p, 0, PadicRing(p, 2), 4), 1), DomainError);
  }
}
