#include "morlog/bigrat.hpp"

#include <ostream>

#include "morlog/errors.hpp"

namespace morlog {

BigRat::BigRat(const BigInt& num, const BigInt& den) : q_(num, den) {
  if (den == 0) throw DomainError("BigRat: zero denominator");
  q_.canonicalize();
}

BigRat BigRat::parse(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw DomainError("BigRat: cannot parse '" + text + "'");
  if (q.get_den() == 0) throw DomainError("BigRat: zero denominator");
  return BigRat(std::move(q));
}

BigRat BigRat::operator-() const { return BigRat(mpq_class(-q_)); }

BigRat& BigRat::operator+=(const BigRat& o) {
  q_ += o.q_;
  return *this;
}
BigRat& BigRat::operator-=(const BigRat& o) {
  q_ -= o.q_;
  return *this;
}
BigRat& BigRat::operator*=(const BigRat& o) {
  q_ *= o.q_;
  return *this;
}
BigRat& BigRat::operator/=(const BigRat& o) {
  if (o.is_zero()) throw DomainError("BigRat: division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BigRat& x) { return os << x.str(); }

BigInt pow_int(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

BigRat pow_rat(const BigRat& base, long exp) {
  if (exp < 0) return BigRat(1) / pow_rat(base, -exp);
  auto e = static_cast<unsigned long>(exp);
  return BigRat(pow_int(base.num(), e), pow_int(base.den(), e));
}

long Valuation::value() const {
  if (inf_) throw DomainError("valuation of zero is infinite");
  return v_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.inf_ || b.inf_) return Valuation::infinite();
  return Valuation::finite(a.v_ + b.v_);
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.inf_ && b.inf_) return std::strong_ordering::equal;
  if (a.inf_) return std::strong_ordering::greater;
  if (b.inf_) return std::strong_ordering::less;
  return a.v_ <=> b.v_;
}

std::string Valuation::str() const { return inf_ ? "inf" : std::to_string(v_); }

Valuation min(const Valuation& a, const Valuation& b) { return a <= b ? a : b; }

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_prime(long p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

long padic_val_int(const BigInt& n, long p) {
  if (n == 0) throw DomainError("padic_val_int: zero has infinite valuation");
  BigInt pp(p);
  BigInt m = abs(n);
  return static_cast<long>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), pp.get_mpz_t()));
}

Valuation padic_val(const BigRat& x, long p) {
  require_prime(p);
  if (x.is_zero()) return Valuation::infinite();
  return Valuation::finite(padic_val_int(x.num(), p) - padic_val_int(x.den(), p));
}

}  // namespace morlog
