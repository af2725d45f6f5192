#pragma once

#include <iosfwd>
#include <string>

#include "morlog/bigrat.hpp"

namespace morlog {

/// An element of Z_p known modulo p^precision.
///
/// Precision is absolute: the value is determined modulo p^precision.
/// Sums keep the smaller precision; a product of a (known mod p^Na, valuation
/// va) and b (mod p^Nb, valuation vb) is known mod p^min(Na+vb, Nb+va), capped
/// at max(Na, Nb). Exact division by p^v drops precision by v.
class PadicInt {
 public:
  PadicInt(long p, long precision, const BigInt& value);
  /// Rational with non-negative p-adic valuation; throws DomainError otherwise.
  static PadicInt from_rational(long p, long precision, const BigRat& value);

  long prime() const { return p_; }
  long precision() const { return prec_; }
  /// Representative in [0, p^precision).
  const BigInt& residue() const { return res_; }
  /// Residue interpreted in (-p^N/2, p^N/2], handy for display of small negatives.
  BigInt balanced() const;

  bool is_zero() const { return res_ == 0; }
  bool is_unit() const;
  /// Exact valuation when nonzero; the precision when the residue is zero
  /// (the true valuation is then at least that).
  long valuation_bound() const;
  Valuation valuation() const;

  PadicInt with_precision(long precision) const;

  PadicInt operator-() const;
  friend PadicInt operator+(const PadicInt& a, const PadicInt& b);
  friend PadicInt operator-(const PadicInt& a, const PadicInt& b);
  friend PadicInt operator*(const PadicInt& a, const PadicInt& b);

  /// Multiplicative inverse of a unit.
  PadicInt inverse() const;
  /// a / b when v(b) <= v(a); throws DomainError otherwise.
  PadicInt divide(const PadicInt& b) const;
  PadicInt divide_int(const BigInt& k) const;
  PadicInt pow(unsigned long e) const;

  /// Equality modulo p^min(precisions).
  friend bool operator==(const PadicInt& a, const PadicInt& b);
  /// Congruence modulo p^digits (digits is clamped to the known precision).
  bool agrees_with(const PadicInt& other, long digits) const;

  std::string str() const;

 private:
  void check_compatible(const PadicInt& o) const;
  long p_;
  long prec_;
  BigInt res_;
};

std::ostream& operator<<(std::ostream& os, const PadicInt& x);

/// log(u) = sum_{k>=1} (-1)^{k-1} (u-1)^k / k in Z_p.
///
/// Requires u = 1 mod p (p odd) or u = 1 mod 4 (p = 2). Terms are included
/// while their provable valuation k*v(u-1) - v(k) is below the input
/// precision N; the returned precision is N - max v(k) over included terms,
/// which is at least N - floor(log_p N) - 1.
PadicInt padic_log(const PadicInt& u);

}  // namespace morlog
