#include <gtest/gtest.h>

#include <random>

#include "morlog/instances.hpp"
#include "morlog/log_ops.hpp"
#include "morlog/verify/oracles.hpp"

using namespace morlog;

namespace {

using QE = PolyQuotient<Rationals>;

QE::Elem unipotent(const QE& r, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  auto x = r.one();
  for (size_t k = 1; k < r.degree(); ++k) x[k] = BigRat(BigInt(num(rng)), BigInt(den(rng)));
  return x;
}

PowerOpRing<QE> random_power_ops(const QE& r, long p, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-7, 7);
  auto table = enumerate_subgroups(FinAbPGroup::homocyclic(p, 1, n));
  std::vector<BigRat> c;
  for (size_t a = 0; a < table->size(); ++a) c.push_back(BigRat(d(rng)));
  return scaled_power_ops(r, p, n, c);
}

}  // namespace

TEST(Theta, Examples) {
  auto s = instances::padic_identity(2, 20);
  EXPECT_EQ(theta(s, PadicInt(2, 20, 3)), PadicInt(2, 20, -3));
  EXPECT_TRUE(theta(s, s.ring.one()).is_zero());
  auto eps = instances::square_zero(3, 3);
  EXPECT_TRUE(eps.ring.is_zero(theta(eps, eps.ring.one())));
}

TEST(Theta, FrobeniusCongruenceOnTruncatedPolynomials) {
  std::mt19937_64 rng(51);
  for (long p : {2L, 3L}) {
    auto s = instances::frobenius_truncated(Integers{}, p, 8);
    std::uniform_int_distribution<long> d(-50, 50);
    std::vector<instances::IntPolyRing::Elem> samples;
    for (int i = 0; i < 40; ++i) {
      auto x = s.ring.zero();
      for (auto& c : x) c = d(rng);
      samples.push_back(x);
      auto th = theta(s, x);
      EXPECT_TRUE(s.ring.equal(s.psi(x), s.ring.add(ring_pow(s.ring, x, static_cast<unsigned long>(p)),
                                                     s.ring.mul(s.ring.from_int(BigInt(p)), th))));
    }
    EXPECT_FALSE(check_psi_ring(s, samples).has_value());
  }
  // psi(e) = e on Z[e]/(e^2) is not a Frobenius lift at p = 2: e - e^2 = e is odd.
  auto bad = instances::square_zero(2, 1);
  EXPECT_TRUE(check_psi_ring(bad, {bad.ring.variable()}).has_value());
}

TEST(K1Log, Examples) {
  for (long p : {2L, 3L, 5L}) {
    auto s = instances::padic_identity(p, 22);
    EXPECT_TRUE(k1_log(s, s.ring.one(), 20).is_zero());
  }
  auto s0 = instances::square_zero(3, 0);
  auto eps = s0.ring.variable();
  auto l = k1_log(s0, s0.ring.add(s0.ring.one(), eps), 0);
  EXPECT_TRUE(s0.ring.equal(l, eps));
  EXPECT_TRUE(s0.ring.equal(l, s0.ring.sub(eps, theta(s0, eps))));
  EXPECT_THROW(k1_log(instances::padic_identity(3, 10), PadicInt(3, 10, 3), 8), DomainError);
}

TEST(K1Log, ThreeAtTwoMatchesPadicLog) {
  // l(x) = (1/2) log(x^2 / x) = (1/4) log(9) for psi = id, p = 2.
  auto s = instances::padic_identity(2, 30);
  auto l = k1_log(s, PadicInt(2, 30, 3), 28);
  auto oracle = padic_log(PadicInt(2, 30, 9)).divide_int(4);
  long digits = std::min(l.precision(), oracle.precision());
  EXPECT_GE(digits, 20);
  EXPECT_TRUE(l.agrees_with(oracle, digits));
}

TEST(K1Log, AdditiveOnTruncatedPolynomials) {
  std::mt19937_64 rng(52);
  auto s = instances::frobenius_truncated(PadicRing(3, 18), 3, 6);
  const auto& r = s.ring;
  std::uniform_int_distribution<long> d(-40, 40);
  auto unit = [&] {
    auto x = r.zero();
    for (auto& c : x) c = r.base().from_int(BigInt(d(rng)));
    x[0] = r.base().from_int(BigInt(1 + 3 * d(rng)));
    return x;
  };
  for (int i = 0; i < 30; ++i) {
    auto x = unit(), y = unit();
    auto lhs = k1_log(s, r.mul(x, y), 15);
    auto rhs = r.add(k1_log(s, x, 15), k1_log(s, y, 15));
    for (size_t k = 0; k < r.degree(); ++k) EXPECT_TRUE(lhs[k].agrees_with(rhs[k], 15)) << k;
  }
}

TEST(RationalLog, ExamplesAndAdditivity) {
  auto r3 = QE::truncated(Rationals{}, 3, "e");
  EXPECT_TRUE(r3.is_zero(rational_log(r3, r3.one())));
  auto want = r3.zero();
  want[1] = BigRat(1);
  want[2] = BigRat(BigInt(-1), BigInt(2));
  EXPECT_TRUE(r3.equal(rational_log(r3, r3.add(r3.one(), r3.variable())), want));
  std::mt19937_64 rng(53);
  auto r5 = QE::truncated(Rationals{}, 5, "e");
  for (int i = 0; i < 30; ++i) {
    auto x = unipotent(r5, rng), y = unipotent(r5, rng);
    EXPECT_TRUE(r5.equal(rational_log(r5, r5.mul(x, y)), r5.add(rational_log(r5, x), rational_log(r5, y))));
  }
  EXPECT_THROW(rational_log(Integers{}, BigInt(1)), DomainError);
}

TEST(MoravaM, Examples) {
  std::mt19937_64 rng(54);
  auto r2 = QE::truncated(Rationals{}, 2, "e");
  for (long p : {2L, 3L}) {
    auto s = random_power_ops(r2, p, 1, rng);
    EXPECT_TRUE(r2.is_zero(morava_M(s, r2.one())));
  }
  // n = 2, p = 2 on Q[e]/(e^2): M(1 + e) = (sum_A d(|A|) c_A) e / p.
  const long p = 2;
  auto table = enumerate_subgroups(FinAbPGroup::homocyclic(p, 1, 2));
  std::vector<BigRat> c = {BigRat(1), BigRat(3), BigRat(-2), BigRat(5), BigRat(7)};
  ASSERT_EQ(c.size(), table->size());
  auto s = scaled_power_ops(r2, p, 2, c);
  BigRat linear(0);
  for (size_t a = 0; a < table->size(); ++a) linear = linear + BigRat(morava_exponent(table->log_order(a), p)) * c[a];
  auto m = morava_M(s, r2.add(r2.one(), r2.variable()));
  EXPECT_EQ(m[0], BigRat(0));
  EXPECT_EQ(m[1], linear / BigRat(p));
}

TEST(MoravaM, CongruenceFailureIsDomainError) {
  auto r = PolyQuotient<Integers>::truncated(Integers{}, 2, "e");
  auto s = scaled_power_ops(r, 2, 1, {BigInt(1), BigInt(1)});
  // psi = id gives 1 + pM = x^2 / x = x, and x = 1 + e is not 1 mod 2.
  EXPECT_THROW(morava_M(s, r.add(r.one(), r.variable())), DomainError);
}

TEST(MoravaLog, RankOneMatchesK1Log) {
  std::mt19937_64 rng(55);
  auto r = QE::truncated(Rationals{}, 4, "e");
  for (long p : {2L, 3L}) {
    for (int i = 0; i < 20; ++i) {
      auto s = random_power_ops(r, p, 1, rng);
      PsiRing<QE> k1{r, p, s.psi[s.subgroups->whole()], std::nullopt, "Q[e]/(e^4)"};
      auto x = unipotent(r, rng);
      EXPECT_TRUE(r.equal(morava_log(s, x, 0), k1_log(k1, x, 0)));
    }
  }
}

TEST(MoravaLog, Additive) {
  std::mt19937_64 rng(56);
  auto r = QE::truncated(Rationals{}, 4, "e");
  for (int n = 1; n <= 2; ++n) {
    auto s = random_power_ops(r, 2, n, rng);
    for (int i = 0; i < 20; ++i) {
      auto x = unipotent(r, rng), y = unipotent(r, rng);
      EXPECT_TRUE(r.equal(morava_log(s, r.mul(x, y), 0), r.add(morava_log(s, x, 0), morava_log(s, y, 0))));
    }
  }
}

TEST(HeckeForm, Examples) {
  std::mt19937_64 rng(57);
  auto r2 = QE::truncated(Rationals{}, 2, "e");
  for (long p : {2L, 3L}) {
    auto s = random_power_ops(r2, p, 1, rng);
    auto one = hecke_form_check(s, r2.one());
    EXPECT_TRUE(one.equal && r2.is_zero(one.log_side));
    // n = 1: both sides are e - (1/p) psi(e).
    auto eps = r2.variable();
    auto rep = hecke_form_check(s, r2.add(r2.one(), eps));
    auto psi_eps = s.psi[s.subgroups->whole()](eps);
    auto want = r2.sub(eps, scale(r2, BigRat(BigInt(1), BigInt(p)), psi_eps));
    EXPECT_TRUE(rep.equal);
    EXPECT_TRUE(r2.equal(rep.log_side, want));
  }
  auto r4 = QE::truncated(Rationals{}, 4, "e");
  for (long p : {2L, 3L}) {
    for (int i = 0; i < 10; ++i) {
      auto s = random_power_ops(r4, p, 2, rng);
      EXPECT_TRUE(hecke_form_check(s, unipotent(r4, rng)).equal);
    }
  }
}

TEST(Witt, Examples) {
  PadicRing r(2, 20);
  auto x = PadicInt(2, 20, 3);
  auto w = witt_from_ghost(r, 2, {x, x, x});
  EXPECT_EQ(w.components[0], x);
  EXPECT_EQ(w.components[1], PadicInt(2, 20, -3));
  EXPECT_EQ(w.components[1], theta(instances::padic_identity(2, 20), x));
  Integers z;
  auto ghosts = ghost_from_witt(z, WittVector<BigInt>{3, {BigInt(2), 0, 0}});
  EXPECT_EQ(ghosts[1], 8);
  EXPECT_EQ(ghosts[2], 512);
}

TEST(Witt, RoundTrip) {
  std::mt19937_64 rng(58);
  Integers z;
  std::uniform_int_distribution<long> d(-30, 30);
  for (long p : {2L, 3L}) {
    for (int i = 0; i < 50; ++i) {
      WittVector<BigInt> w{p, {}};
      for (int k = 0; k < 4; ++k) w.components.push_back(d(rng));
      EXPECT_EQ(witt_from_ghost(z, p, ghost_from_witt(z, w)).components, w.components);
    }
  }
  try {
    witt_from_ghost(z, 2, {BigInt(1), BigInt(2)});
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("component 1"), std::string::npos);
  }
}

TEST(ThetaTower, CrossChecks) {
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<long> d(-20, 20);
  auto s8 = instances::frobenius_truncated(Integers{}, 3, 8);
  for (int i = 0; i < 100; ++i) {
    auto x = s8.ring.zero();
    for (auto& c : x) c = d(rng);
    auto th = theta_tower(s8, x, 2);
    EXPECT_TRUE(s8.ring.equal(th[0], x));
    EXPECT_TRUE(s8.ring.equal(th[1], theta(s8, x)));
  }
  auto s16 = instances::frobenius_truncated(Integers{}, 2, 16);
  for (int i = 0; i < 20; ++i) {
    auto x = s16.ring.zero();
    for (auto& c : x) c = d(rng);
    EXPECT_NO_THROW(theta_tower(s16, x, 4));
  }
}

TEST(ArtinHasse, Examples) {
  for (long p : {2L, 3L, 5L}) {
    auto f = artin_hasse(p, 50);
    EXPECT_EQ(f[0], BigRat(1));
    EXPECT_EQ(f[1], BigRat(1));
    for (size_t k = 0; k <= 50; ++k) EXPECT_GE(padic_val(f[k], p), Valuation::finite(0)) << p << " " << k;
  }
  auto f2 = artin_hasse(2, 10);
  EXPECT_EQ(f2[2], BigRat(1));
  EXPECT_EQ(f2[3], BigRat(BigInt(2), BigInt(3)));
  auto oracle = oracle::artin_hasse_by_product(2, 10);
  for (size_t k = 0; k <= 10; ++k) EXPECT_EQ(f2[k], oracle[k]);
}

TEST(K1Exp, Examples) {
  auto s0 = instances::square_zero(3, 0);
  const auto& r = s0.ring;
  auto w0 = instances::t_adic_witness(r);
  EXPECT_TRUE(r.equal(k1_exp(s0, r.zero(), w0), r.one()));
  auto eps = r.variable();
  auto e = k1_exp(s0, eps, w0);
  EXPECT_TRUE(r.equal(e, r.add(r.one(), eps)));
  EXPECT_TRUE(r.equal(k1_log(s0, e, 0), eps));
}

TEST(K1Exp, RoundTripOnFrobeniusRing) {
  auto s = instances::frobenius_truncated(PadicRing(2, 24), 2, 8);
  const auto& r = s.ring;
  auto w = instances::t_adic_witness(r);
  for (const auto& c : instances::convergent_family()) {
    auto alpha = instances::from_coeffs(r, c);
    auto back = k1_log(s, k1_exp(s, alpha, w), 16);
    for (size_t k = 0; k < r.degree(); ++k) {
      EXPECT_GE(back[k].precision(), 16);
      EXPECT_TRUE(back[k].agrees_with(alpha[k], 16)) << r.format(alpha) << " -> " << r.format(back);
    }
  }
}

TEST(K1Exp, RejectsFalseWitness) {
  // psi(e) = 3e keeps e in filtration 1, so the nilpotent witness does not apply.
  auto s = instances::square_zero(3, 3);
  auto w = instances::t_adic_witness(s.ring);
  EXPECT_THROW(k1_exp(s, s.ring.variable(), w), DomainError);
  auto f = instances::frobenius_truncated(Integers{}, 2, 4);
  auto wf = instances::t_adic_witness(f.ring);
  EXPECT_THROW(k1_exp(f, f.ring.one(), wf), DomainError);
}

TEST(K1Exp, ValuationWitnessOnSquareZero) {
  // psi(e) = p^2 e: theta_i(p e) = p^{i+1} e, so valuations grow and the
  // product converges p-adically without being finite.
  const long p = 3, n = 20;
  auto s = instances::scaled_truncated(PadicRing(p, n + 6), p, 2, p * p);
  const auto& r = s.ring;
  auto weight = [](const PolyQuotient<PadicRing>::Elem& x) {
    long v = x[0].precision();
    for (const auto& c : x) v = std::min(v, c.valuation_bound());
    return v;
  };
  auto w = ConvergenceWitness<PolyQuotient<PadicRing>::Elem>::valuation(weight, n + 6, r.zero());
  auto alpha = r.monomial(1, PadicInt(p, n + 6, p));
  auto back = k1_log(s, k1_exp(s, alpha, w), n);
  EXPECT_TRUE(back[0].is_zero());
  EXPECT_TRUE(back[1].agrees_with(alpha[1], n)) << r.format(back);
  // theta(e) = p e has weight 1 but theta_1(e) = p e too: not strictly increasing.
  EXPECT_THROW(k1_exp(instances::scaled_truncated(PadicRing(p, 10), p, 2, p), r.variable(), w), DomainError);
}

TEST(AdamsSymmetric, Examples) {
  EXPECT_TRUE(adams_to_symmetric(3, 1).ok());
  EXPECT_TRUE(adams_to_symmetric(3, 3).ok());
  auto rep = adams_to_symmetric(4, 2);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.matches.size(), 3U);
  EXPECT_THROW(adams_to_symmetric(2, 3), DomainError);
}
