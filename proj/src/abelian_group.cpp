#include "morlog/abelian_group.hpp"

#include <algorithm>

#include "morlog/bigrat.hpp"
#include "morlog/errors.hpp"

namespace morlog {

FinAbPGroup::FinAbPGroup(long p, std::vector<int> exponents) : p_(p), exps_(std::move(exponents)) {
  require_prime(p);
  double size = 1;
  for (int r : exps_) {
    if (r < 1) throw DomainError("FinAbPGroup: exponents must be >= 1");
    long m = 1;
    for (int i = 0; i < r; ++i) m *= p;
    mods_.push_back(m);
    size *= static_cast<double>(m);
  }
  if (size > 1 << 24) throw ResourceError("FinAbPGroup: group too large to index");
  order_ = static_cast<uint32_t>(size);
}

int FinAbPGroup::max_exponent() const {
  return exps_.empty() ? 0 : *std::max_element(exps_.begin(), exps_.end());
}

std::vector<long> FinAbPGroup::decode(uint32_t index) const {
  std::vector<long> c(rank());
  for (size_t i = 0; i < rank(); ++i) {
    c[i] = static_cast<long>(index % static_cast<uint32_t>(mods_[i]));
    index /= static_cast<uint32_t>(mods_[i]);
  }
  return c;
}

uint32_t FinAbPGroup::encode(const std::vector<long>& coords) const {
  uint32_t idx = 0;
  for (size_t i = rank(); i-- > 0;) {
    long c = coords[i] % mods_[i];
    if (c < 0) c += mods_[i];
    idx = idx * static_cast<uint32_t>(mods_[i]) + static_cast<uint32_t>(c);
  }
  return idx;
}

uint32_t FinAbPGroup::add(uint32_t a, uint32_t b) const {
  uint32_t idx = 0;
  uint32_t place = 1;
  for (size_t i = 0; i < rank(); ++i) {
    auto m = static_cast<uint32_t>(mods_[i]);
    uint32_t s = (a % m + b % m) % m;
    idx += s * place;
    place *= m;
    a /= m;
    b /= m;
  }
  return idx;
}

uint32_t FinAbPGroup::neg(uint32_t a) const { return scale(-1, a); }

uint32_t FinAbPGroup::scale(long k, uint32_t a) const {
  auto c = decode(a);
  for (size_t i = 0; i < rank(); ++i) c[i] = (c[i] * (k % mods_[i])) % mods_[i];
  return encode(c);
}

uint32_t FinAbPGroup::element_order(uint32_t a) const {
  uint32_t ord = 1;
  uint32_t x = a;
  while (x != 0) {
    x = scale(p_, x);
    ord *= static_cast<uint32_t>(p_);
  }
  return ord;
}

std::string FinAbPGroup::str() const {
  std::string s;
  for (size_t i = 0; i < rank(); ++i) {
    if (i) s += " x ";
    s += "Z/" + std::to_string(mods_[i]);
  }
  return s.empty() ? "0" : s;
}

}  // namespace morlog
