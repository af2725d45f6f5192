#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace morlog {

/// Z/p^{r_1} x ... x Z/p^{r_n}. Elements are addressed by a mixed-radix index
/// in [0, order()), first coordinate least significant.
class FinAbPGroup {
 public:
  FinAbPGroup(long p, std::vector<int> exponents);
  /// (Z/p^r)^n
  static FinAbPGroup homocyclic(long p, int r, int n) { return FinAbPGroup(p, std::vector<int>(static_cast<size_t>(n), r)); }

  long prime() const { return p_; }
  const std::vector<int>& exponents() const { return exps_; }
  size_t rank() const { return exps_.size(); }
  const std::vector<long>& moduli() const { return mods_; }
  uint32_t order() const { return order_; }
  int max_exponent() const;

  std::vector<long> decode(uint32_t index) const;
  uint32_t encode(const std::vector<long>& coords) const;  // coordinates reduced first
  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t scale(long k, uint32_t a) const;
  /// Additive order of an element.
  uint32_t element_order(uint32_t a) const;

  std::string str() const;
  friend bool operator==(const FinAbPGroup& a, const FinAbPGroup& b) { return a.p_ == b.p_ && a.exps_ == b.exps_; }

 private:
  long p_;
  std::vector<int> exps_;
  std::vector<long> mods_;
  uint32_t order_;
};

}  // namespace morlog
