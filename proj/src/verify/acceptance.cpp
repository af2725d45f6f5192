#include "morlog/verify/acceptance.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "morlog/burnside.hpp"
#include "morlog/errors.hpp"
#include "morlog/formal_group.hpp"
#include "morlog/hecke.hpp"
#include "morlog/instances.hpp"
#include "morlog/log_ops.hpp"
#include "morlog/verify/oracles.hpp"

namespace morlog::verify {

namespace {

/// Collects check outcomes; keeps the first few failure messages.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) messages_ << (failures_ > 1 ? "; " : "") << what;
  }
  bool pass() const { return failures_ == 0 && checks_ > 0; }
  std::string summary() const {
    std::ostringstream out;
    if (failures_ == 0)
      out << checks_ << " checks";
    else
      out << failures_ << " of " << checks_ << " checks failed: " << messages_.str();
    return out.str();
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::ostringstream messages_;
};

BigRat signed_power(int j, long p, long exponent) {
  BigRat v(pow_int(BigInt(p), static_cast<unsigned long>(exponent)));
  return j % 2 == 0 ? v : -v;
}

std::string key(std::initializer_list<long> xs) {
  std::ostringstream out;
  out << "(";
  bool first = true;
  for (long x : xs) {
    out << (first ? "" : ",") << x;
    first = false;
  }
  out << ")";
  return out.str();
}

// 1
std::string gaussian_identity(Tally& t, std::mt19937_64&) {
  for (long p : {2L, 3L, 5L}) {
    for (int n = 0; n <= 5; ++n) {
      BigRat s = gaussian_alternating_sum(n, p);
      t.check(s == BigRat(n == 0 ? 1 : 0), "alternating sum at " + key({p, n}) + " is " + s.str());
      // q-Pascal recursion [n;j] = [n-1;j-1] + p^j [n-1;j] as an independent route.
      std::vector<std::vector<BigInt>> tri(static_cast<size_t>(n + 1), std::vector<BigInt>(static_cast<size_t>(n + 1), 0));
      for (int m = 0; m <= n; ++m) {
        tri[m][0] = 1;
        for (int j = 1; j <= m; ++j)
          tri[m][j] = tri[m - 1][j - 1] + pow_int(BigInt(p), static_cast<unsigned long>(j)) * tri[m - 1][j];
      }
      BigRat oracle(0);
      for (int j = 0; j <= n; ++j) {
        t.check(gaussian_binomial(n, j, p) == BigRat(tri[n][j]), "[n;j]_p mismatch at " + key({p, n, j}));
        oracle = oracle + signed_power(j, p, j * (j - 1) / 2) * BigRat(tri[n][j]);
      }
      t.check(oracle == s, "recursion route disagrees at " + key({p, n}));
    }
  }
  // Subgroup counts of (Z/p)^n by order.
  for (auto [p, n] : {std::pair{2L, 3}, std::pair{3L, 2}, std::pair{5L, 2}}) {
    auto table = enumerate_subgroups(FinAbPGroup::homocyclic(p, 1, n));
    std::vector<long> count(static_cast<size_t>(n + 1), 0);
    for (size_t s = 0; s < table->size(); ++s) ++count[static_cast<size_t>(table->log_order(s))];
    for (int j = 0; j <= n; ++j)
      t.check(BigRat(count[j]) == gaussian_binomial(n, j, p), "subgroup count mismatch at " + key({p, n, j}));
  }
  return "p in {2,3,5}, n <= 5";
}

// 2
std::string moebius_values(Tally& t, std::mt19937_64&) {
  for (long p : {2L, 3L}) {
    for (int j = 0; j <= 3; ++j) {
      auto table = enumerate_subgroups(FinAbPGroup::homocyclic(p, 1, j));
      BigRat mu = moebius(*table, table->trivial(), table->whole());
      BigRat want = signed_power(j, p, j * (j - 1) / 2);
      t.check(mu == want, "mu((Z/" + std::to_string(p) + ")^" + std::to_string(j) + ") = " + mu.str());
      t.check(oracle::moebius_by_recursion(*table, table->trivial(), table->whole()) == want,
              "recursion oracle disagrees at " + key({p, j}));
    }
    for (const auto& exps : {std::vector<int>{2}, std::vector<int>{3}, std::vector<int>{2, 1}}) {
      FinAbPGroup g(p, exps);
      auto table = enumerate_subgroups(g);
      BigRat mu = moebius(*table, table->trivial(), table->whole());
      t.check(mu.is_zero(), "mu(" + g.str() + ") = " + mu.str());
      t.check(oracle::moebius_by_recursion(*table, table->trivial(), table->whole()).is_zero(),
              "recursion oracle nonzero on " + g.str());
    }
  }
  return "(Z/p)^j for j <= 3 and three non-elementary groups, p in {2,3}";
}

// 3
std::string idempotent_properties(Tally& t, std::mt19937_64&) {
  std::vector<std::tuple<int, long, int>> cases;
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 2; ++r) cases.emplace_back(n, 2L, r);
  for (int n = 1; n <= 2; ++n)
    for (int r = 1; r <= 2; ++r) cases.emplace_back(n, 3L, r);
  for (auto [n, p, r] : cases) {
    auto e = rezk_element(n, p, r);
    const auto& table = e.table_ptr();
    const size_t whole = table->whole();
    const std::string at = key({n, p, r});
    t.check(e.is_integral(), "e not integral at " + at);
    t.check(fixed_points(e, whole) == BigRat(p), "d(e) != p at " + at);
    t.check(e == BigRat(p) * idempotent(table, whole), "e != p e_G at " + at);
    t.check(burnside_mul(e, e) == BigRat(p) * e, "e^2 != p e at " + at);
    for (size_t s = 0; s < table->size(); ++s) {
      auto y = BurnsideElem::basis(table, s);
      t.check(burnside_mul(y, e) == fixed_points(y, whole) * e, "y e != d(y) e at " + at + " for " + table->describe(s));
    }
  }
  return "n <= 3 at p = 2, n <= 2 at p = 3, stages r in {1,2}";
}

// 4
std::string burnside_oracle(Tally& t, std::mt19937_64&) {
  size_t pairs = 0;
  for (const auto& g : {FinAbPGroup::homocyclic(2, 1, 2), FinAbPGroup::homocyclic(2, 1, 3),
                        FinAbPGroup::homocyclic(2, 2, 2), FinAbPGroup::homocyclic(3, 2, 1)}) {
    auto table = enumerate_subgroups(g);
    for (size_t s = 0; s < table->size(); ++s) {
      for (size_t u = 0; u < table->size(); ++u) {
        auto closed = burnside_mul(BurnsideElem::basis(table, s), BurnsideElem::basis(table, u));
        t.check(closed == oracle::product_by_orbits(table, s, u),
                "product mismatch in " + g.str() + " for " + table->describe(s) + " x " + table->describe(u));
        ++pairs;
      }
    }
  }
  return std::to_string(pairs) + " subgroup pairs";
}

// 5
std::string euler_inverse(Tally& t, std::mt19937_64&) {
  for (auto [n, p, d] : {std::tuple{1, 2L, 5}, std::tuple{1, 3L, 5}, std::tuple{2, 2L, 3}, std::tuple{2, 3L, 2},
                         std::tuple{3, 2L, 2}}) {
    auto rep = verify_euler_inverse(static_cast<size_t>(n), p, d);
    t.check(rep.ok() && rep.residuals.size() == static_cast<size_t>(d),
            "residual at X^" + std::to_string(rep.first_nonzero_degree.value_or(0)) + " for " + key({n, p, d}));
  }
  return "(n,p,d) in {(1,2,5),(1,3,5),(2,2,3),(2,3,2),(3,2,2)}";
}

// 6
std::string k1_log_additivity(Tally& t, std::mt19937_64& rng) {
  const long digits = 20;
  for (long p : {2L, 3L, 5L}) {
    // Two guard digits: theta divides by p.
    auto s = instances::padic_identity(p, digits + 2);
    const auto& r = s.ring;
    t.check(k1_log(s, r.one(), digits).is_zero(), "l(1) != 0 at p = " + std::to_string(p));
    std::uniform_int_distribution<unsigned long> d(0, 1UL << 62);
    auto unit = [&] {
      while (true) {
        auto x = r.from_int(BigInt(d(rng)) * BigInt(d(rng)));
        if (x.is_unit()) return x;
      }
    };
    for (int i = 0; i < 200; ++i) {
      auto x = unit(), y = unit();
      auto lhs = k1_log(s, r.mul(x, y), digits);
      auto rhs = r.add(k1_log(s, x, digits), k1_log(s, y, digits));
      t.check(lhs.precision() >= digits && rhs.precision() >= digits && lhs.agrees_with(rhs, digits),
              "l(xy) != l(x) + l(y) at p = " + std::to_string(p) + ", x = " + x.str() + ", y = " + y.str());
      // With psi = id, l(x) = (1/p) log(x^{p-1}) (p odd) or (1/4) log(x^2) (p = 2).
      if (i < 20) {
        auto lx = k1_log(s, x, digits);
        auto oracle = p == 2 ? padic_log(x.pow(2)).divide_int(4) : padic_log(x.pow(static_cast<unsigned long>(p - 1))).divide_int(BigInt(p));
        long common = std::min(oracle.precision(), lx.precision());
        t.check(common >= digits - 4 && lx.agrees_with(oracle, common),
                "p-adic log route disagrees at p = " + std::to_string(p) + ", x = " + x.str());
      }
    }
  }
  return "200 unit pairs per prime p in {2,3,5}, mod p^20";
}

// 7
std::string square_zero(Tally& t, std::mt19937_64&) {
  size_t count = 0;
  for (long p : {2L, 3L, 5L}) {
    for (long lambda : instances::square_zero_psi_scalars(p)) {
      auto s = instances::square_zero(p, lambda);
      const auto& r = s.ring;
      for (long a : {1L, -1L, 2L, 3L, p, 7L, -12L}) {
        auto eps = r.monomial(1, BigInt(a));
        auto lhs = k1_log(s, r.add(r.one(), eps), 0);
        auto rhs = r.sub(eps, theta(s, eps));
        auto closed = r.monomial(1, BigInt(a) - BigInt(a) * BigInt(lambda / p));
        t.check(r.equal(lhs, rhs), "l(1+e) != e - theta(e) for " + s.description + ", a = " + std::to_string(a));
        t.check(r.equal(lhs, closed), "closed form a - a lambda/p fails for " + s.description);
        ++count;
      }
    }
  }
  return std::to_string(count) + " (p, psi, a) cases in Z[e]/(e^2)";
}

// 8
std::string hecke_form(Tally& t, std::mt19937_64& rng) {
  using QE = PolyQuotient<Rationals>;
  auto ring = QE::truncated(Rationals{}, 4, "e");
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
  auto rat = [&] { return BigRat(BigInt(num(rng)), BigInt(den(rng))); };
  auto random_x = [&] {
    auto x = ring.one();
    for (size_t k = 1; k < 4; ++k) x[k] = rat();
    return x;
  };
  for (int n = 1; n <= 2; ++n) {
    for (long p : {2L, 3L}) {
      auto table = enumerate_subgroups(FinAbPGroup::homocyclic(p, 1, n));
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<BigRat> scalars;
        for (size_t a = 0; a < table->size(); ++a) scalars.push_back(rat());
        auto s = scaled_power_ops(ring, p, n, scalars);
        auto x = random_x();
        auto rep = hecke_form_check(s, x);
        t.check(rep.equal, "Hecke form fails at n = " + std::to_string(n) + ", p = " + std::to_string(p) +
                               ": " + ring.format(rep.log_side) + " vs " + ring.format(rep.hecke_side));
        if (n == 1) {
          // 1 + p M(x) = x^p / psi(x), and M-log agrees with the K(1) logarithm.
          const auto& psi = s.psi[table->whole()];
          auto inv = ring.try_inverse(psi(x));
          t.check(inv && ring.equal(morava_product(s, x),
                                    ring.mul(ring_pow(ring, x, static_cast<unsigned long>(p)), *inv)),
                  "1 + pM(x) != x^p/psi(x) at p = " + std::to_string(p));
          PsiRing<QE> k1{ring, p, psi, std::nullopt, "Q[e]/(e^4)"};
          t.check(ring.equal(morava_log(s, x, 0), k1_log(k1, x, 0)), "n = 1 log differs from K(1) log");
        }
      }
    }
    for (long p : {2L, 3L}) {
      t.check(morava_exponent(0, p) == p && morava_exponent(1, p) == -1, "n = 1 exponents wrong at p = " + std::to_string(p));
    }
  }
  return "50 random psi_A assignments for each n in {1,2}, p in {2,3}";
}

// 9
std::string theta_integrality(Tally& t, std::mt19937_64& rng) {
  auto s = instances::frobenius_truncated(Integers{}, 2, 16);
  const auto& r = s.ring;
  std::uniform_int_distribution<long> d(-20, 20);
  for (int trial = 0; trial < 100; ++trial) {
    auto x = r.zero();
    for (auto& c : x) c = d(rng);
    std::vector<instances::IntPolyRing::Elem> ghosts;
    auto g = x;
    for (int k = 0; k < 4; ++k) {
      ghosts.push_back(g);
      g = s.psi(g);
    }
    try {
      auto th = theta_tower(s, x, 4);
      t.check(r.equal(th[0], x), "theta_0 != x");
      t.check(r.equal(th[1], theta(s, x)), "theta_1 != theta");
      auto back = ghost_from_witt(r, WittVector<instances::IntPolyRing::Elem>{2, th});
      bool same = true;
      for (int k = 0; k < 4; ++k) same = same && r.equal(back[k], ghosts[k]);
      t.check(same, "ghost components do not reproduce psi^k(x)");
    } catch (const DomainError& e) {
      t.check(false, std::string("non-integral theta: ") + e.what());
    }
  }
  return "100 random x in Z[t]/(t^16), psi(t) = t^2, theta_0..theta_3";
}

// 10
std::string artin_hasse_integrality(Tally& t, std::mt19937_64&) {
  for (long p : {2L, 3L, 5L}) {
    auto f = artin_hasse(p, 50);
    auto oracle = oracle::artin_hasse_by_product(p, 50);
    for (size_t k = 0; k <= 50; ++k) {
      t.check(padic_val(f[k], p) >= Valuation::finite(0), "coefficient of T^" + std::to_string(k) + " not p-integral at p = " + std::to_string(p));
      t.check(f[k] == oracle[k], "Dwork product disagrees at T^" + std::to_string(k) + ", p = " + std::to_string(p));
    }
  }
  t.check(artin_hasse(2, 50)[3] == BigRat(BigInt(2), BigInt(3)), "T^3 coefficient at p = 2 is not 2/3");
  return "degree 50, p in {2,3,5}";
}

// 11
std::string exp_log_inverse(Tally& t, std::mt19937_64&) {
  const long digits = 16;
  auto s = instances::frobenius_truncated(PadicRing(2, digits + 8), 2, 8);
  const auto& r = s.ring;
  auto w = instances::t_adic_witness(r);
  // Rational shadow: log e(alpha) = sum_k psi^k(alpha) / p^k exactly.
  auto sq = instances::frobenius_truncated(Rationals{}, 2, 8);
  auto wq = instances::t_adic_witness(sq.ring);
  for (const auto& c : instances::convergent_family()) {
    auto alpha = instances::from_coeffs(r, c);
    auto back = k1_log(s, k1_exp(s, alpha, w), digits);
    bool ok = true;
    for (size_t k = 0; k < r.degree(); ++k)
      ok = ok && back[k].precision() >= digits && back[k].agrees_with(alpha[k], digits);
    t.check(ok, "l(e(alpha)) != alpha mod 2^16 for alpha = " + r.format(alpha) + ", got " + r.format(back));

    auto aq = instances::from_coeffs(sq.ring, c);
    auto eq = k1_exp(sq, aq, wq);
    auto ghost_sum = sq.ring.zero();
    auto g = aq;
    for (BigInt pk = 1; !sq.ring.is_zero(g); pk *= 2, g = sq.psi(g))
      ghost_sum = sq.ring.add(ghost_sum, scale(sq.ring, BigRat(BigInt(1), pk), g));
    t.check(sq.ring.equal(rational_log(sq.ring, eq), ghost_sum), "log e(alpha) != sum psi^k(alpha)/p^k over Q");
  }
  for (long p : {2L, 3L, 5L}) {
    auto s0 = instances::square_zero(p, 0);
    auto w0 = instances::t_adic_witness(s0.ring);
    for (long a : {1L, -2L, 3L, 10L}) {
      auto alpha = s0.ring.monomial(1, BigInt(a));
      auto back = k1_log(s0, k1_exp(s0, alpha, w0), 0);
      t.check(s0.ring.equal(back, alpha), "exact round trip fails in Z[e]/(e^2) at p = " + std::to_string(p));
    }
  }
  return std::to_string(instances::convergent_family().size()) + " inputs in Z_2[t]/(t^8) and Z[e]/(e^2) with psi = 0";
}

// 12
std::string level_structures(Tally& t, std::mt19937_64&) {
  using CycRing = PolyQuotient<Integers>;
  for (long p : {2L, 3L, 5L, 7L}) {
    auto ring = CycRing::cyclotomic_shifted(Integers{}, p);
    auto law = make_fgl(FglKind::Multiplicative, p, 1, ring, static_cast<size_t>(p + 3));
    FinAbPGroup a(p, {1});
    std::vector<CycRing::Elem> points;
    auto zeta = ring.add(ring.one(), ring.variable());
    auto power = ring.one();
    for (long k = 0; k < p; ++k) {
      points.push_back(ring.sub(power, ring.one()));
      power = ring.mul(power, zeta);
    }
    auto rep = check_level_structure(LevelStructureCandidate<CycRing>{law, a, points});
    // The product over a of (zeta^a (1+T) - 1) is (-1)^{p+1} [p](T).
    auto unit = ring.from_int(BigInt(p == 2 ? -1 : 1));
    bool exact_unit = rep.divides && rep.quotient && ring.equal((*rep.quotient)[0], unit);
    if (exact_unit)
      for (size_t k = 1; k < rep.quotient->coeffs.size(); ++k) exact_unit = exact_unit && ring.is_zero((*rep.quotient)[k]);
    t.check(exact_unit, "cyclotomic level structure quotient is not " + ring.format(unit) + " at p = " + std::to_string(p));

    auto zp2 = PadicRing(p, 2);
    auto law2 = make_fgl(FglKind::Multiplicative, p, 1, zp2, static_cast<size_t>(p + 3));
    std::vector<PadicInt> zeros(static_cast<size_t>(p), zp2.zero());
    auto bad = check_level_structure(LevelStructureCandidate<PadicRing>{law2, a, zeros});
    t.check(!bad.divides && bad.obstruction_degree == 1, "all-zero points over Z/p^2 do not fail at degree 1");
  }
  for (long p : {2L, 3L, 5L}) {
    auto fp = PadicRing(p, 1);
    for (int n = 1; n <= (p == 5 ? 1 : 2); ++n) {
      size_t degree = static_cast<size_t>(pow_int(BigInt(p), static_cast<unsigned long>(n)).get_ui()) + 1;
      auto honda = make_fgl(FglKind::Honda, p, n, fp, degree);
      t.check(admits_trivial_level_structure(honda, n), "honda height " + std::to_string(n) + " mod p rejects rank n");
    }
    auto mult = make_fgl(FglKind::Multiplicative, p, 1, fp, static_cast<size_t>(p * p + 1));
    t.check(admits_trivial_level_structure(mult, 1), "multiplicative mod p rejects rank 1");
    t.check(!admits_trivial_level_structure(mult, 2), "multiplicative mod p accepts rank 2");
  }
  return "cyclotomic points for p in {2,3,5,7}; quotient 1 for odd p, -1 at p = 2";
}

// 13
std::string restriction_lemma(Tally& t, std::mt19937_64&) {
  size_t cases = 0;
  for (long p : {2L, 3L}) {
    auto table = enumerate_subgroups(FinAbPGroup::homocyclic(p, 1, 2));
    for (size_t v = 0; v < table->size(); ++v) {
      if (table->log_order(v) != 1) continue;
      for (size_t w = 0; w < table->size(); ++w) {
        if (table->log_order(w) != 1 || table->meet(v, w) != table->trivial()) continue;
        for (size_t u = 0; u < table->size(); ++u) {
          auto res = restrict_lambda_set(*table, u, v, w);
          auto direct = oracle::restrict_by_orbits(*table, u, res.t_lattice);
          LatticeSetClass scaled;
          for (const auto& [lat, m] : res.restricted) scaled[lat] = m * res.multiplicity;
          t.check(direct == scaled, "s(U)|_T mismatch for U = " + table->describe(u));
          t.check(oracle::restrict_by_orbits(*table, res.projected, res.t_lattice) == res.restricted,
                  "s(Ubar)|_T mismatch for U = " + table->describe(u));
          BigInt want = table->contains(u, v) ? BigInt(p) : BigInt(1);
          t.check(res.multiplicity == want, "multiplicity wrong for U = " + table->describe(u));
          ++cases;
        }
      }
    }
  }
  for (long p : {2L, 3L, 5L})
    for (int j = 0; j <= 6; ++j)
      t.check(exponent_cancellation(j, p).is_zero(), "d(j)p^j + d(j+1)p != 0 at " + key({p, j}));
  return std::to_string(cases) + " (U, V, W) cases on (Z/2)^2 and (Z/3)^2";
}

struct Spec {
  const char* name;
  const char* anchor;
  std::function<std::string(Tally&, std::mt19937_64&)> run;
};

const std::vector<Spec>& specs() {
  static const std::vector<Spec> all = {
      {"Gaussian binomial alternating sum", "gaussian-alternating-sum", gaussian_identity},
      {"Moebius values of subgroup lattices", "moebius-elementary-abelian", moebius_values},
      {"Idempotent e: d(e) = p, ye = d(y)e, e^2 = pe", "burnside-element-e", idempotent_properties},
      {"Burnside product vs diagonal orbits", "burnside-product-closed-form", burnside_oracle},
      {"Euler factor inverse", "hecke-euler-factor-inverse", euler_inverse},
      {"K(1) logarithm additivity on Z_p", "k1-log-additive", k1_log_additivity},
      {"Square-zero logarithm", "k1-log-square-zero", square_zero},
      {"Hecke form of the Morava logarithm", "morava-log-hecke-form", hecke_form},
      {"theta tower integrality", "witt-theta-tower", theta_integrality},
      {"Artin-Hasse integrality", "artin-hasse-integral", artin_hasse_integrality},
      {"Exponential inverts the logarithm", "k1-exp-log-inverse", exp_log_inverse},
      {"Level structures", "level-structure-divides-p-series", level_structures},
      {"Restriction lemma and exponent cancellation", "lambda-set-restriction", restriction_lemma},
  };
  return all;
}

}  // namespace

CriterionResult run_criterion(int id, uint64_t seed) {
  if (id < 1 || id > kCriterionCount) throw DomainError("run_criterion: no criterion " + std::to_string(id));
  const auto& s = specs()[static_cast<size_t>(id - 1)];
  CriterionResult out{id, s.name, s.anchor, false, "", 0};
  std::mt19937_64 rng(seed + static_cast<uint64_t>(id));
  auto start = std::chrono::steady_clock::now();
  try {
    Tally t;
    std::string scope = s.run(t, rng);
    out.pass = t.pass();
    out.detail = scope + "; " + t.summary();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::vector<CriterionResult> run_acceptance(uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

}  // namespace morlog::verify
