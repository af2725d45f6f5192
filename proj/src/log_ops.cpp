#include "morlog/log_ops.hpp"

#include "morlog/formal_group.hpp"

namespace morlog {

long log_series_bound(long p, long precision) {
  require_prime(p);
  if (precision < 0) throw DomainError("log_series_bound: precision must be >= 0");
  for (long k = 1;; ++k) {
    long lg = 0;
    for (long q = p; q <= k; q *= p) ++lg;
    if (k - 1 - lg >= precision) return k;
  }
}

BigInt morava_exponent(int j, long p) {
  if (j < 0) throw DomainError("morava_exponent: j must be >= 0");
  BigInt e = pow_int(BigInt(p), static_cast<unsigned long>((j - 1) * (j - 2) / 2));
  return j % 2 == 0 ? e : BigInt(-e);
}

TruncSeries<BigRat> artin_hasse(long p, size_t degree) {
  require_prime(p);
  if (degree < 1) throw DomainError("artin_hasse: degree must be >= 1");
  Rationals q;
  auto arg = series_zero(q, degree + 1);
  BigInt pj(1);
  for (unsigned long j = 0; pj <= BigInt(static_cast<unsigned long>(degree)); ++j, pj *= p)
    arg[pj.get_ui()] = BigRat(1) / BigRat(pj);
  return series_exp(q, arg);
}

AdamsSymmetricReport adams_to_symmetric(int m, int degree) {
  if (m < 1 || degree < 0) throw DomainError("adams_to_symmetric: need m >= 1 and D >= 0");
  if (degree > m) throw DomainError("adams_to_symmetric: D > m is outside the checked range");
  Rationals q;
  using Poly = MultiSeries<Rationals>;
  const size_t nv = static_cast<size_t>(m);
  const size_t d = static_cast<size_t>(degree);

  std::vector<Poly> h(d + 1, Poly(q, nv, d));
  for (size_t k = 0; k <= d; ++k) {
    Poly hk(q, nv, d);
    hk.for_each([&](const std::vector<size_t>& e, const BigRat&) {
      size_t total = 0;
      for (size_t x : e) total += x;
      if (total == k) hk.at(e) = BigRat(1);
    });
    h[k] = hk;
  }

  // P(t) = sum_k psi^k(x) t^k / k with psi^k(x) = x_1^k + ... + x_m^k.
  std::vector<Poly> big_p(d + 1, Poly(q, nv, d));
  for (size_t k = 1; k <= d; ++k)
    for (size_t i = 0; i < nv; ++i) {
      std::vector<size_t> e(nv, 0);
      e[i] = k;
      big_p[k].at(e) = BigRat(1) / BigRat(static_cast<long>(k));
    }
  auto tmul = [&](const std::vector<Poly>& a, const std::vector<Poly>& b) {
    std::vector<Poly> c(d + 1, Poly(q, nv, d));
    for (size_t i = 0; i <= d; ++i)
      for (size_t j = 0; i + j <= d; ++j) c[i + j] = c[i + j].add(q, a[i].mul(q, b[j]));
    return c;
  };
  std::vector<Poly> power(d + 1, Poly(q, nv, d));
  power[0].at(std::vector<size_t>(nv, 0)) = BigRat(1);
  std::vector<Poly> expo = power;
  BigRat factorial(1);
  for (size_t r = 1; r <= d; ++r) {
    power = tmul(power, big_p);
    factorial = factorial * BigRat(static_cast<long>(r));
    for (size_t k = 0; k <= d; ++k) expo[k] = expo[k].add(q, power[k].scale(q, BigRat(1) / factorial));
  }

  AdamsSymmetricReport rep;
  rep.variables = m;
  rep.degree = degree;
  for (size_t k = 0; k <= d; ++k) {
    rep.matches.push_back(h[k].equal(q, expo[k]));
    std::string s;
    h[k].for_each([&](const std::vector<size_t>& e, const BigRat& c) {
      if (c.is_zero()) return;
      if (!s.empty()) s += " + ";
      s += c.str();
      for (size_t i = 0; i < nv; ++i)
        if (e[i] > 0) s += "*x" + std::to_string(i + 1) + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    });
    rep.coefficients.push_back(s.empty() ? "0" : s);
  }
  return rep;
}

}  // namespace morlog
