#include "morlog/verify/oracles.hpp"

#include <algorithm>
#include <set>

#include "morlog/errors.hpp"

namespace morlog::oracle {

namespace {

/// Smallest element of the coset x + H, H given as a list of elements.
uint32_t coset_min(const FinAbPGroup& g, uint32_t x, const std::vector<uint32_t>& h) {
  uint32_t best = UINT32_MAX;
  for (uint32_t e : h) best = std::min(best, g.add(x, e));
  return best;
}

std::vector<uint32_t> elements_of(const FinAbPGroup& g, const std::vector<bool>& member) {
  std::vector<uint32_t> out;
  for (uint32_t x = 0; x < g.order(); ++x)
    if (member[x]) out.push_back(x);
  return out;
}

IntVector lift(const FinAbPGroup& g, uint32_t x) {
  auto c = g.decode(x);
  IntVector v;
  for (long a : c) v.emplace_back(a);
  return v;
}

}  // namespace

BurnsideElem product_by_orbits(const SubgroupTablePtr& table, size_t s, size_t t) {
  const auto& g = table->group();
  const auto& hs = (*table)[s].elements;
  const auto& ht = (*table)[t].elements;
  std::vector<uint32_t> reps_s, reps_t;
  for (uint32_t x = 0; x < g.order(); ++x) {
    if (coset_min(g, x, hs) == x) reps_s.push_back(x);
    if (coset_min(g, x, ht) == x) reps_t.push_back(x);
  }
  std::set<std::pair<uint32_t, uint32_t>> seen;
  std::vector<BigRat> counts(table->size(), BigRat(0));
  for (uint32_t x : reps_s) {
    for (uint32_t y : reps_t) {
      if (seen.count({x, y})) continue;
      std::vector<bool> stab(g.order(), false);
      for (uint32_t a = 0; a < g.order(); ++a) {
        uint32_t gx = coset_min(g, g.add(a, x), hs);
        uint32_t gy = coset_min(g, g.add(a, y), ht);
        seen.insert({gx, gy});
        if (gx == x && gy == y) stab[a] = true;
      }
      std::vector<uint64_t> bits((g.order() + 63) / 64, 0);
      for (uint32_t a = 0; a < g.order(); ++a)
        if (stab[a]) bits[a >> 6] |= uint64_t{1} << (a & 63);
      auto idx = table->find(bits);
      if (!idx) throw InternalError("product_by_orbits: stabilizer is not a listed subgroup");
      counts[*idx] = counts[*idx] + BigRat(1);
    }
  }
  return BurnsideElem(table, std::move(counts));
}

LatticeSetClass restrict_by_orbits(const SubgroupTable& dual, size_t u, const IntMatrix& t) {
  const auto& g = dual.group();
  const long p = g.prime();
  const size_t n = g.rank();
  // Work in Z^n / p Z^n, encoded with the same coordinates as the dual group.
  std::vector<bool> in_s(g.order(), false), in_t(g.order(), false);
  for (uint32_t lam = 0; lam < g.order(); ++lam) {
    auto l = g.decode(lam);
    bool kills = true;
    for (uint32_t x : dual[u].elements) {
      auto c = g.decode(x);
      long dot = 0;
      for (size_t i = 0; i < n; ++i) dot += c[i] * l[i];
      if (dot % p != 0) kills = false;
    }
    in_s[lam] = kills;
    in_t[lam] = lattice_contains_vector(t, lift(g, lam));
  }
  auto s_elems = elements_of(g, in_s);
  auto t_elems = elements_of(g, in_t);

  LatticeSetClass out;
  std::set<uint32_t> seen;
  for (uint32_t x = 0; x < g.order(); ++x) {
    uint32_t point = coset_min(g, x, s_elems);
    if (point != x || seen.count(point)) continue;
    HnfBuilder stab(n);
    for (size_t i = 0; i < n; ++i) {
      IntVector v(n, BigInt(0));
      v[i] = BigInt(p);
      stab.insert(v);
    }
    for (uint32_t tau : t_elems) {
      uint32_t moved = coset_min(g, g.add(tau, point), s_elems);
      seen.insert(moved);
      if (moved == point) stab.insert(lift(g, tau));
    }
    out[stab.finish()] += 1;
  }
  return out;
}

size_t count_subgroups_by_closure(const FinAbPGroup& g) {
  const size_t n = g.rank();
  const uint32_t order = g.order();
  std::set<std::vector<bool>> found;
  std::vector<uint32_t> tuple(n, 0);
  while (true) {
    std::vector<bool> member(order, false);
    member[0] = true;
    bool grew = true;
    while (grew) {
      grew = false;
      for (uint32_t x = 0; x < order; ++x) {
        if (!member[x]) continue;
        for (uint32_t gen : tuple) {
          uint32_t y = g.add(x, gen);
          if (!member[y]) {
            member[y] = true;
            grew = true;
          }
        }
      }
    }
    found.insert(member);
    size_t i = 0;
    while (i < n && ++tuple[i] == order) tuple[i++] = 0;
    if (i == n) break;
  }
  return found.size();
}

BigRat moebius_by_recursion(const SubgroupTable& table, size_t c, size_t b) {
  // Subgroups are listed by increasing order, so x <= y implies index(x) <= index(y).
  std::vector<BigRat> mu(table.size(), BigRat(0));
  for (size_t x = 0; x < table.size(); ++x) {
    if (!table.contains(x, c) || !table.contains(b, x)) continue;
    if (x == c) {
      mu[x] = BigRat(1);
      continue;
    }
    BigRat sum(0);
    for (size_t y = 0; y < x; ++y)
      if (table.contains(y, c) && table.contains(x, y)) sum = sum + mu[y];
    mu[x] = BigRat(0) - sum;
  }
  return mu[b];
}

namespace {

int integer_moebius(long m) {
  int sign = 1;
  for (long q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    m /= q;
    if (m % q == 0) return 0;
    sign = -sign;
  }
  if (m > 1) sign = -sign;
  return sign;
}

}  // namespace

TruncSeries<BigRat> artin_hasse_by_product(long p, size_t degree) {
  Rationals q;
  auto total = series_constant(q, BigRat(1), degree + 1);
  for (size_t m = 1; m <= degree; ++m) {
    if (m % static_cast<size_t>(p) == 0) continue;
    int mu = integer_moebius(static_cast<long>(m));
    if (mu == 0) continue;
    BigRat c = BigRat(BigInt(-mu), BigInt(static_cast<unsigned long>(m)));
    // (1 - T^m)^c = sum_k binom(c, k) (-1)^k T^{mk}
    auto factor = series_zero(q, degree + 1);
    BigRat binom(1);
    for (size_t k = 0; k * m <= degree; ++k) {
      factor[k * m] = (k % 2 == 0) ? binom : BigRat(0) - binom;
      binom = binom * (c - BigRat(static_cast<long>(k))) / BigRat(static_cast<long>(k + 1));
    }
    total = series_mul(q, total, factor);
  }
  return total;
}

}  // namespace morlog::oracle
