#include <gtest/gtest.h>

#include <random>

#include "morlog/bigrat.hpp"
#include "morlog/errors.hpp"
#include "morlog/padic.hpp"

using namespace morlog;

namespace {

BigRat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 97);
  return BigRat(BigInt(num(rng)), BigInt(den(rng)));
}

PadicInt random_padic(std::mt19937_64& rng, long p, long n) {
  std::uniform_int_distribution<long> d(0, 1'000'000'000);
  return PadicInt(p, n, BigInt(d(rng)) * BigInt(d(rng)));
}

}  // namespace

TEST(BigRat, CanonicalForm) {
  BigRat a(BigInt(6), BigInt(-4));
  EXPECT_EQ(a.num(), -3);
  EXPECT_EQ(a.den(), 2);
  EXPECT_EQ(BigRat::parse("10/4"), BigRat(BigInt(5), BigInt(2)));
  EXPECT_THROW(BigRat(BigInt(1), BigInt(0)), DomainError);
}

TEST(BigRat, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto a = random_rat(rng), b = random_rat(rng), c = random_rat(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a - a, BigRat(0));
  }
}

TEST(Valuation, Examples) {
  EXPECT_EQ(padic_val(BigRat(BigInt(8), BigInt(3)), 2), Valuation::finite(3));
  EXPECT_TRUE(padic_val(BigRat(0), 5).is_infinite());
  // 2^{k-1}/k at k = 4
  EXPECT_EQ(padic_val(BigRat(BigInt(8), BigInt(4)), 2), Valuation::finite(1));
  EXPECT_EQ(padic_val(BigRat(BigInt(5), BigInt(9)), 3), Valuation::finite(-2));
  EXPECT_THROW(padic_val(BigRat(8), 4), DomainError);
}

TEST(Valuation, MultiplicativeAndUltrametric) {
  std::mt19937_64 rng(12);
  for (long p : {2L, 3L, 5L}) {
    for (int i = 0; i < 200; ++i) {
      auto x = random_rat(rng), y = random_rat(rng);
      EXPECT_EQ(padic_val(x * y, p), padic_val(x, p) + padic_val(y, p));
      EXPECT_GE(padic_val(x + y, p), min(padic_val(x, p), padic_val(y, p)));
    }
  }
}

TEST(PadicInt, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(13);
  for (long p : {2L, 3L, 7L}) {
    for (int i = 0; i < 100; ++i) {
      auto a = random_padic(rng, p, 12), b = random_padic(rng, p, 12), c = random_padic(rng, p, 12);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
    }
  }
}

TEST(PadicInt, PrecisionBookkeeping) {
  PadicInt a(3, 10, 9);  // valuation 2
  PadicInt b(3, 6, 5);   // unit, precision 6
  auto prod = a * b;
  // min(10 + 0, 6 + 2) = 8
  EXPECT_EQ(prod.precision(), 8);
  auto q = a.divide_int(BigInt(3));
  EXPECT_EQ(q.precision(), 9);
  EXPECT_EQ(q.residue(), 3);
  EXPECT_EQ((a + b).precision(), 6);
  PadicInt u(5, 8, 2);
  EXPECT_EQ(u * u.inverse(), PadicInt(5, 8, 1));
  EXPECT_THROW(PadicInt(5, 8, 10).inverse(), DomainError);
  EXPECT_EQ(PadicInt::from_rational(3, 5, BigRat(BigInt(1), BigInt(2))) * PadicInt(3, 5, 2), PadicInt(3, 5, 1));
  EXPECT_THROW(PadicInt::from_rational(3, 5, BigRat(BigInt(1), BigInt(3))), DomainError);
}

TEST(PadicLog, OneGivesZero) {
  for (long p : {2L, 3L, 5L}) {
    auto l = padic_log(PadicInt(p, 20, 1));
    EXPECT_TRUE(l.is_zero());
  }
}

TEST(PadicLog, CongruencePreconditionNamed) {
  try {
    padic_log(PadicInt(2, 20, 3));
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("mod 4"), std::string::npos);
  }
  EXPECT_THROW(padic_log(PadicInt(3, 20, 2)), DomainError);
}

TEST(PadicLog, HomomorphismOnRandomPairs) {
  std::mt19937_64 rng(14);
  const long n = 20;
  for (long p : {2L, 3L, 5L}) {
    const long m = p == 2 ? 4 : p;
    for (int i = 0; i < 100; ++i) {
      std::uniform_int_distribution<long> d(0, 1'000'000);
      PadicInt u(p, n, BigInt(1) + BigInt(m) * d(rng));
      PadicInt w(p, n, BigInt(1) + BigInt(m) * d(rng));
      auto lhs = padic_log(u * w);
      auto rhs = padic_log(u) + padic_log(w);
      long floor_log = 0;
      for (long q = p; q <= n; q *= p) ++floor_log;
      EXPECT_GE(lhs.precision(), n - floor_log - 1);
      EXPECT_GE(rhs.precision(), n - floor_log - 1);
      EXPECT_EQ(lhs, rhs) << "p=" << p << " u=" << u << " w=" << w;
    }
  }
}

TEST(PadicLog, MatchesBruteForceSeries) {
  // u = 1 + 3, N = 10 against 60 terms summed over Q.
  const long p = 3, n = 10;
  BigRat sum(0);
  for (long k = 1; k <= 60; ++k) {
    BigRat term = BigRat(pow_int(BigInt(p), static_cast<unsigned long>(k))) / BigRat(k);
    sum = (k % 2 == 1) ? sum + term : sum - term;
  }
  auto got = padic_log(PadicInt(p, n, 1 + p));
  auto oracle = PadicInt::from_rational(p, n, sum);
  EXPECT_TRUE(got.agrees_with(oracle, got.precision()));
  EXPECT_GE(got.precision(), n - 2 - 1);
}
