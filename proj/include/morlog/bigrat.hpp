#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace morlog {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with positive denominator.
class BigRat {
 public:
  BigRat() = default;
  BigRat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  BigRat(const BigInt& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  BigRat(const BigInt& num, const BigInt& den);

  /// Parses "a" or "a/b" in base 10.
  static BigRat parse(const std::string& text);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  std::string str() const { return q_.get_str(); }
  const mpq_class& raw() const { return q_; }

  BigRat operator-() const;
  BigRat& operator+=(const BigRat& o);
  BigRat& operator-=(const BigRat& o);
  BigRat& operator*=(const BigRat& o);
  BigRat& operator/=(const BigRat& o);

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }
  friend bool operator==(const BigRat& a, const BigRat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit BigRat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const BigRat& x);

BigInt pow_int(const BigInt& base, unsigned long exp);
BigRat pow_rat(const BigRat& base, long exp);

/// p-adic valuation; +infinity represents the valuation of zero.
class Valuation {
 public:
  static Valuation infinite() { return Valuation(true, 0); }
  static Valuation finite(long v) { return Valuation(false, v); }

  bool is_infinite() const { return inf_; }
  /// Precondition: finite.
  long value() const;

  friend Valuation operator+(const Valuation& a, const Valuation& b);
  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);
  bool operator>=(long bound) const { return inf_ || v_ >= bound; }

  std::string str() const;

 private:
  Valuation(bool inf, long v) : inf_(inf), v_(v) {}
  bool inf_;
  long v_;
};

Valuation min(const Valuation& a, const Valuation& b);

bool is_prime(const BigInt& n);
bool is_prime(long n);
/// Throws DomainError unless p is a prime.
void require_prime(long p);

/// Exponent of p in n (n != 0).
long padic_val_int(const BigInt& n, long p);
Valuation padic_val(const BigRat& x, long p);

}  // namespace morlog
