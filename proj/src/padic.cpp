#include "morlog/padic.hpp"

#include <algorithm>
#include <ostream>

#include "morlog/errors.hpp"

namespace morlog {

namespace {

BigInt modulus(long p, long prec) { return pow_int(BigInt(p), static_cast<unsigned long>(prec)); }

BigInt reduce(const BigInt& v, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

PadicInt::PadicInt(long p, long precision, const BigInt& value) : p_(p), prec_(precision) {
  if (p < 2) throw DomainError("PadicInt: prime must be >= 2");
  if (precision < 0) throw DomainError("PadicInt: negative precision");
  res_ = reduce(value, modulus(p, precision));
}

PadicInt PadicInt::from_rational(long p, long precision, const BigRat& value) {
  if (value.is_zero()) return PadicInt(p, precision, 0);
  if (padic_val_int(value.den(), p) > 0)
    throw DomainError("PadicInt: " + value.str() + " is not " + std::to_string(p) + "-integral");
  PadicInt num(p, precision, value.num());
  PadicInt den(p, precision, value.den());
  return num * den.inverse();
}

BigInt PadicInt::balanced() const {
  BigInt m = modulus(p_, prec_);
  if (2 * res_ > m) return res_ - m;
  return res_;
}

bool PadicInt::is_unit() const { return prec_ > 0 && valuation_bound() == 0; }

long PadicInt::valuation_bound() const {
  if (res_ == 0) return prec_;
  return padic_val_int(res_, p_);
}

Valuation PadicInt::valuation() const {
  if (res_ == 0) return Valuation::infinite();
  return Valuation::finite(padic_val_int(res_, p_));
}

PadicInt PadicInt::with_precision(long precision) const {
  if (precision > prec_)
    throw PrecisionError("PadicInt: cannot raise precision from " + std::to_string(prec_) +
                         " to " + std::to_string(precision));
  return PadicInt(p_, precision, res_);
}

void PadicInt::check_compatible(const PadicInt& o) const {
  if (p_ != o.p_) throw ContextMismatch("PadicInt: primes differ");
}

PadicInt PadicInt::operator-() const { return PadicInt(p_, prec_, -res_); }

PadicInt operator+(const PadicInt& a, const PadicInt& b) {
  a.check_compatible(b);
  return PadicInt(a.p_, std::min(a.prec_, b.prec_), a.res_ + b.res_);
}

PadicInt operator-(const PadicInt& a, const PadicInt& b) {
  a.check_compatible(b);
  return PadicInt(a.p_, std::min(a.prec_, b.prec_), a.res_ - b.res_);
}

PadicInt operator*(const PadicInt& a, const PadicInt& b) {
  a.check_compatible(b);
  long cap = std::max(a.prec_, b.prec_);
  long prec = std::min({cap, a.prec_ + b.valuation_bound(), b.prec_ + a.valuation_bound()});
  return PadicInt(a.p_, prec, a.res_ * b.res_);
}

PadicInt PadicInt::inverse() const {
  if (!is_unit()) throw DomainError("PadicInt: " + str() + " is not a unit");
  BigInt inv;
  BigInt m = modulus(p_, prec_);
  mpz_invert(inv.get_mpz_t(), res_.get_mpz_t(), m.get_mpz_t());
  return PadicInt(p_, prec_, inv);
}

PadicInt PadicInt::divide(const PadicInt& b) const {
  check_compatible(b);
  if (b.is_zero()) throw DomainError("PadicInt: division by zero (to precision)");
  long vb = b.valuation_bound();
  long va = valuation_bound();
  if (va < vb) throw DomainError("PadicInt: " + str() + " is not divisible by " + b.str());
  BigInt pv = modulus(p_, vb);
  PadicInt a_red(p_, prec_ - vb, res_ / pv);
  PadicInt unit(p_, b.prec_ - vb, b.res_ / pv);
  // Product rule gives precision min(Na - vb, (Nb - vb) + (va - vb)).
  return a_red * unit.inverse();
}

PadicInt PadicInt::divide_int(const BigInt& k) const {
  if (k == 0) throw DomainError("PadicInt: division by zero");
  long vk = padic_val_int(k, p_);
  // The divisor is an exact integer, so only its valuation costs precision.
  return divide(PadicInt(p_, prec_ + vk, k));
}

PadicInt PadicInt::pow(unsigned long e) const {
  PadicInt result(p_, prec_, 1);
  PadicInt base = *this;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool operator==(const PadicInt& a, const PadicInt& b) {
  if (a.p_ != b.p_) return false;
  return a.agrees_with(b, std::min(a.prec_, b.prec_));
}

bool PadicInt::agrees_with(const PadicInt& other, long digits) const {
  digits = std::min({digits, prec_, other.prec_});
  BigInt m = modulus(p_, digits);
  return reduce(res_ - other.res_, m) == 0;
}

std::string PadicInt::str() const {
  return balanced().get_str() + " + O(" + std::to_string(p_) + "^" + std::to_string(prec_) + ")";
}

std::ostream& operator<<(std::ostream& os, const PadicInt& x) { return os << x.str(); }

PadicInt padic_log(const PadicInt& u) {
  const long p = u.prime();
  const long n = u.precision();
  const long need = (p == 2) ? 2 : 1;
  if (n < need)
    throw DomainError("padic_log: precision too small to verify the congruence u = 1 mod " +
                      std::to_string(p == 2 ? 4 : p));
  PadicInt x = u - PadicInt(p, n, 1);
  if (x.valuation_bound() < need)
    throw DomainError(std::string("padic_log: requires u = 1 mod ") + (p == 2 ? "4" : std::to_string(p)) +
                      ", got " + u.str());
  if (x.is_zero()) return PadicInt(p, n, 0);

  const long v0 = x.valuation_bound();
  PadicInt sum(p, n, 0);
  PadicInt power = x;
  long log_k = 0;  // floor(log_p k)
  for (long k = 1;; ++k) {
    if (k % p == 0 && pow_int(BigInt(p), static_cast<unsigned long>(log_k + 1)) <= k) ++log_k;
    // k*v0 - floor(log_p k) bounds every term from index k on.
    if (k * v0 - log_k >= n) break;
    long vk = padic_val_int(BigInt(k), p);
    if (k * v0 - vk < n) {
      PadicInt term = power.divide_int(BigInt(k));
      sum = (k % 2 == 1) ? sum + term : sum - term;
    }
    power = power * x;
  }
  return sum;
}

}  // namespace morlog
