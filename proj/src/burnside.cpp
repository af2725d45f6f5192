#include "morlog/burnside.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>

#include "morlog/errors.hpp"
#include "morlog/work_limit.hpp"

namespace morlog {

namespace {

std::vector<uint64_t> empty_bits(uint32_t order) { return std::vector<uint64_t>((order + 63) / 64, 0); }

void set_bit(std::vector<uint64_t>& bits, uint32_t e) { bits[e >> 6] |= uint64_t{1} << (e & 63); }

std::vector<uint32_t> bits_to_elements(const std::vector<uint64_t>& bits) {
  std::vector<uint32_t> out;
  for (size_t w = 0; w < bits.size(); ++w) {
    uint64_t word = bits[w];
    while (word) {
      int b = __builtin_ctzll(word);
      out.push_back(static_cast<uint32_t>(w * 64 + b));
      word &= word - 1;
    }
  }
  return out;
}

bool is_elementary(const FinAbPGroup& g) {
  return std::all_of(g.exponents().begin(), g.exponents().end(), [](int r) { return r == 1; });
}

}  // namespace

std::vector<uint64_t> SubgroupTable::closure(const std::vector<uint32_t>& base, uint32_t g) const {
  auto bits = empty_bits(group_.order());
  std::vector<uint32_t> current = base;
  if (current.empty()) current.push_back(0);
  for (uint32_t e : current) set_bit(bits, e);
  uint32_t shift = g;
  // S + <g> is the union of the cosets S + k g.
  while (true) {
    std::vector<uint32_t> coset;
    coset.reserve(current.size());
    bool fresh = false;
    for (uint32_t e : current) {
      uint32_t x = group_.add(e, shift);
      if (!((bits[x >> 6] >> (x & 63)) & 1U)) fresh = true;
      coset.push_back(x);
    }
    if (!fresh) break;
    for (uint32_t x : coset) set_bit(bits, x);
    shift = group_.add(shift, g);
  }
  return bits;
}

IntMatrix SubgroupTable::lattice_of(const std::vector<uint32_t>& gens) const {
  size_t n = group_.rank();
  HnfBuilder hb(n);
  for (size_t i = 0; i < n; ++i) {
    IntVector v(n, BigInt(0));
    v[i] = BigInt(group_.moduli()[i]);
    hb.insert(v);
  }
  for (uint32_t g : gens) {
    auto c = group_.decode(g);
    IntVector v(n);
    for (size_t i = 0; i < n; ++i) v[i] = BigInt(c[i]);
    hb.insert(v);
  }
  return hb.finish();
}

std::shared_ptr<const SubgroupTable> SubgroupTable::build(const FinAbPGroup& g, uint32_t max_order) {
  if (g.order() > max_order)
    throw ResourceError("enumerate_subgroups: |G| = " + std::to_string(g.order()) + " exceeds bound " +
                        std::to_string(max_order));
  std::shared_ptr<SubgroupTable> t(new SubgroupTable(g));
  const uint32_t order = g.order();

  struct Raw {
    std::vector<uint64_t> bits;
    std::vector<uint32_t> gens;
  };
  std::vector<Raw> found;
  std::map<std::vector<uint64_t>, size_t> seen;
  auto triv = empty_bits(order);
  set_bit(triv, 0);
  seen.emplace(triv, 0);
  found.push_back({triv, {}});

  double work = 0;
  std::deque<size_t> queue{0};
  while (!queue.empty()) {
    size_t idx = queue.front();
    queue.pop_front();
    auto bits = found[idx].bits;
    auto elements = bits_to_elements(bits);
    auto done = bits;
    for (uint32_t x = 0; x < order; ++x) {
      if ((done[x >> 6] >> (x & 63)) & 1U) continue;
      work += static_cast<double>(order);
      require_work(work, "enumerate_subgroups");
      auto nb = t->closure(elements, x);
      // Every element of the coset S + x generates the same extension.
      for (uint32_t e : elements) set_bit(done, g.add(e, x));
      if (seen.count(nb)) continue;
      auto gens = found[idx].gens;
      gens.push_back(x);
      seen.emplace(nb, found.size());
      found.push_back({std::move(nb), std::move(gens)});
      queue.push_back(found.size() - 1);
    }
  }

  for (auto& raw : found) {
    Subgroup s;
    s.elements = bits_to_elements(raw.bits);
    s.order = static_cast<uint32_t>(s.elements.size());
    s.bits = std::move(raw.bits);
    s.generators = std::move(raw.gens);
    s.lattice = t->lattice_of(s.generators);
    t->subs_.push_back(std::move(s));
  }
  std::sort(t->subs_.begin(), t->subs_.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.lattice < b.lattice;
  });
  const size_t n = t->subs_.size();
  for (size_t i = 0; i < n; ++i) {
    t->by_bits_.emplace(t->subs_[i].bits, i);
    t->by_lattice_.emplace(t->subs_[i].lattice, i);
  }

  require_work(static_cast<double>(n) * static_cast<double>(n) * (1.0 + order / 64.0), "subgroup tables");
  t->contains_.assign(n * n, 0);
  t->meet_.assign(n * n, 0);
  t->sum_.assign(n * n, 0);
  const size_t words = t->subs_[0].bits.size();
  std::vector<uint64_t> tmp(words);
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      const auto& ba = t->subs_[a].bits;
      const auto& bb = t->subs_[b].bits;
      bool sub = true;
      for (size_t w = 0; w < words; ++w) {
        if (bb[w] & ~ba[w]) sub = false;
        tmp[w] = ba[w] & bb[w];
      }
      t->contains_[a * n + b] = sub ? 1 : 0;
      auto it = t->by_bits_.find(tmp);
      if (it == t->by_bits_.end()) throw InternalError("subgroup intersection missing from table");
      t->meet_[a * n + b] = static_cast<uint32_t>(it->second);
    }
  }
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a; b < n; ++b) {
      size_t s;
      if (t->contains_[a * n + b]) {
        s = a;
      } else if (t->contains_[b * n + a]) {
        s = b;
      } else {
        s = t->generated_by([&] {
          auto gens = t->subs_[a].generators;
          gens.insert(gens.end(), t->subs_[b].generators.begin(), t->subs_[b].generators.end());
          return gens;
        }());
      }
      t->sum_[a * n + b] = t->sum_[b * n + a] = static_cast<uint32_t>(s);
    }
  }
  return t;
}

std::optional<size_t> SubgroupTable::find(const std::vector<uint64_t>& bits) const {
  auto it = by_bits_.find(bits);
  if (it == by_bits_.end()) return std::nullopt;
  return it->second;
}

std::optional<size_t> SubgroupTable::find_lattice(const IntMatrix& hnf) const {
  auto it = by_lattice_.find(hnf);
  if (it == by_lattice_.end()) return std::nullopt;
  return it->second;
}

size_t SubgroupTable::generated_by(const std::vector<uint32_t>& gens) const {
  std::vector<uint32_t> elems{0};
  for (uint32_t g : gens) elems = bits_to_elements(closure(elems, g));
  auto bits = empty_bits(group_.order());
  for (uint32_t e : elems) set_bit(bits, e);
  auto idx = find(bits);
  if (!idx) throw InternalError("generated subgroup missing from table");
  return *idx;
}

size_t SubgroupTable::multiple(long k) const {
  if (k < 0) throw DomainError("multiple: k must be >= 0");
  long factor = 1;
  for (long i = 0; i < k && factor < (1L << 40); ++i) factor *= group_.prime();
  std::vector<uint32_t> gens;
  for (size_t i = 0; i < group_.rank(); ++i) {
    std::vector<long> c(group_.rank(), 0);
    c[i] = 1;
    gens.push_back(group_.scale(factor, group_.encode(c)));
  }
  return generated_by(gens);
}

std::vector<BigInt> SubgroupTable::quotient_type(size_t big, size_t small) const {
  if (!contains(big, small)) throw DomainError("quotient_type: not a subgroup");
  return quotient_invariants(subs_[big].lattice, subs_[small].lattice);
}

bool SubgroupTable::is_elementary_quotient(size_t big, size_t small) const {
  auto inv = quotient_type(big, small);
  return std::all_of(inv.begin(), inv.end(), [&](const BigInt& d) { return d == group_.prime(); });
}

int SubgroupTable::log_order(size_t s) const {
  int k = 0;
  for (uint32_t o = subs_[s].order; o > 1; o /= static_cast<uint32_t>(group_.prime())) ++k;
  return k;
}

std::string SubgroupTable::describe(size_t s) const {
  std::ostringstream os;
  os << "S" << s << "{order " << subs_[s].order << ", lattice " << matrix_to_string(subs_[s].lattice) << "}";
  return os.str();
}

BigRat gaussian_binomial(int n, int j, long p) {
  require_prime(p);
  if (n < 0 || j < 0 || j > n) throw DomainError("gaussian_binomial: need 0 <= j <= n");
  BigRat num(1), den(1);
  BigInt pn = pow_int(BigInt(p), static_cast<unsigned long>(n));
  BigInt pj = pow_int(BigInt(p), static_cast<unsigned long>(j));
  for (int i = 0; i < j; ++i) {
    BigInt pi = pow_int(BigInt(p), static_cast<unsigned long>(i));
    num = num * BigRat(BigInt(pn - pi));
    den = den * BigRat(BigInt(pj - pi));
  }
  return num / den;
}

BigRat gaussian_alternating_sum(int n, long p) {
  BigRat total(0);
  for (int j = 0; j <= n; ++j) {
    BigRat term = gaussian_binomial(n, j, p) * BigRat(pow_int(BigInt(p), static_cast<unsigned long>(j * (j - 1) / 2)));
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

namespace {

std::mutex moebius_mutex;
std::map<std::pair<long, std::vector<BigInt>>, BigRat> moebius_memo;

}  // namespace

BigRat moebius(const SubgroupTable& table, size_t c, size_t b) {
  if (!table.contains(b, c)) return BigRat(0);
  if (b == c) return BigRat(1);
  auto key = std::make_pair(table.group().prime(), table.quotient_type(b, c));
  {
    std::lock_guard<std::mutex> lock(moebius_mutex);
    auto it = moebius_memo.find(key);
    if (it != moebius_memo.end()) return it->second;
  }
  BigRat total(0);
  for (size_t x = 0; x < table.size(); ++x) {
    if (x == c || !table.contains(x, c) || !table.contains(b, x)) continue;
    total = total - moebius(table, x, b);
  }
  std::lock_guard<std::mutex> lock(moebius_mutex);
  moebius_memo.emplace(std::move(key), total);
  return total;
}

BurnsideElem::BurnsideElem(SubgroupTablePtr table, std::vector<BigRat> coeffs)
    : table_(std::move(table)), coeffs_(std::move(coeffs)) {
  if (!table_) throw DomainError("BurnsideElem: null subgroup table");
  if (coeffs_.size() != table_->size()) throw DomainError("BurnsideElem: coefficient count does not match table");
}

BurnsideElem BurnsideElem::zero(SubgroupTablePtr table) {
  size_t n = table->size();
  return BurnsideElem(std::move(table), std::vector<BigRat>(n, BigRat(0)));
}

BurnsideElem BurnsideElem::basis(SubgroupTablePtr table, size_t s) {
  if (s >= table->size()) throw DomainError("BurnsideElem::basis: subgroup index out of range");
  auto z = zero(std::move(table));
  z.coeffs_[s] = BigRat(1);
  return z;
}

bool BurnsideElem::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRat& c) { return c.is_integer(); });
}

void BurnsideElem::require_same(const BurnsideElem& o) const {
  if (table_ != o.table_ && !(table_->group() == o.table_->group()))
    throw ContextMismatch("BurnsideElem: elements of different Burnside rings");
}

BurnsideElem BurnsideElem::operator+(const BurnsideElem& o) const {
  require_same(o);
  auto r = *this;
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = r.coeffs_[i] + o.coeffs_[i];
  return r;
}

BurnsideElem BurnsideElem::operator-(const BurnsideElem& o) const {
  require_same(o);
  auto r = *this;
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = r.coeffs_[i] - o.coeffs_[i];
  return r;
}

BurnsideElem operator*(const BigRat& k, const BurnsideElem& x) {
  auto r = x;
  for (auto& c : r.coeffs_) c = k * c;
  return r;
}

bool operator==(const BurnsideElem& a, const BurnsideElem& b) {
  a.require_same(b);
  return a.coeffs_ == b.coeffs_;
}

std::string BurnsideElem::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << coeffs_[i].str() << "*[G/S" << i << "]";
    first = false;
  }
  return first ? "0" : os.str();
}

BurnsideElem burnside_mul(const BurnsideElem& x, const BurnsideElem& y) {
  if (x.table_ptr() != y.table_ptr() && !(x.table().group() == y.table().group()))
    throw ContextMismatch("burnside_mul: elements of different Burnside rings");
  const auto& t = x.table();
  std::vector<BigRat> out(t.size(), BigRat(0));
  for (size_t i = 0; i < t.size(); ++i) {
    if (x.coeff(i).is_zero()) continue;
    for (size_t j = 0; j < t.size(); ++j) {
      if (y.coeff(j).is_zero()) continue;
      size_t m = t.meet(i, j);
      out[m] = out[m] + x.coeff(i) * y.coeff(j) * BigRat(static_cast<long>(t.index(t.sum(i, j))));
    }
  }
  return BurnsideElem(x.table_ptr(), std::move(out));
}

BigRat fixed_points(const BurnsideElem& x, size_t a) {
  const auto& t = x.table();
  if (a >= t.size()) throw DomainError("fixed_points: subgroup index out of range");
  BigRat total(0);
  for (size_t b = 0; b < t.size(); ++b) {
    if (x.coeff(b).is_zero() || !t.contains(b, a)) continue;
    total = total + x.coeff(b) * BigRat(static_cast<long>(t.index(b)));
  }
  return total;
}

BurnsideElem idempotent(const SubgroupTablePtr& table, size_t a) {
  if (a >= table->size()) throw DomainError("idempotent: subgroup index out of range");
  std::vector<BigRat> c(table->size(), BigRat(0));
  for (size_t b = 0; b < table->size(); ++b) {
    if (!table->contains(a, b)) continue;
    c[b] = moebius(*table, b, a) / BigRat(static_cast<long>(table->index(b)));
  }
  return BurnsideElem(table, std::move(c));
}

BurnsideElem rezk_element(int n, long p, int r) {
  require_prime(p);
  if (n < 1 || r < 1) throw DomainError("rezk_element: need n >= 1 and r >= 1");
  auto table = SubgroupTable::build(FinAbPGroup::homocyclic(p, r, n));
  size_t pg = table->multiple(1);
  std::vector<BigRat> c(table->size(), BigRat(0));
  for (size_t s = 0; s < table->size(); ++s) {
    if (!table->contains(s, pg)) continue;
    int j = 0;
    for (uint32_t idx = table->index(s); idx > 1; idx /= static_cast<uint32_t>(p)) ++j;
    BigRat coeff = BigRat(p) * BigRat(pow_int(BigInt(p), static_cast<unsigned long>(j * (j - 1) / 2))) /
                   BigRat(pow_int(BigInt(p), static_cast<unsigned long>(j)));
    if (j % 2 == 1) coeff = BigRat(0) - coeff;
    if (!coeff.is_integer()) throw InternalError("rezk_element: non-integral coefficient");
    c[s] = coeff;
  }
  return BurnsideElem(table, std::move(c));
}

BurnsideElem inflate(const BurnsideElem& x, const SubgroupTablePtr& target) {
  const auto& src = x.table();
  if (src.group().rank() != target->group().rank() || src.group().prime() != target->group().prime())
    throw ContextMismatch("inflate: groups of different rank or prime");
  for (size_t i = 0; i < src.group().rank(); ++i)
    if (target->group().exponents()[i] < src.group().exponents()[i])
      throw ContextMismatch("inflate: target group does not surject onto the source");
  std::vector<BigRat> c(target->size(), BigRat(0));
  for (size_t s = 0; s < src.size(); ++s) {
    if (x.coeff(s).is_zero()) continue;
    auto idx = target->find_lattice(src[s].lattice);
    if (!idx) throw InternalError("inflate: preimage lattice missing from target table");
    c[*idx] = c[*idx] + x.coeff(s);
  }
  return BurnsideElem(target, std::move(c));
}

BigRat exponent_cancellation(int j, long p) {
  require_prime(p);
  if (j < 0) throw DomainError("exponent_cancellation: j must be >= 0");
  auto d = [&](int i) {
    BigRat v(pow_int(BigInt(p), static_cast<unsigned long>((i - 1) * (i - 2) / 2)));
    return i % 2 == 0 ? v : BigRat(0) - v;
  };
  return d(j) * BigRat(pow_int(BigInt(p), static_cast<unsigned long>(j))) + d(j + 1) * BigRat(p);
}

IntMatrix annihilator_lattice(const SubgroupTable& dual, size_t u) {
  const auto& g = dual.group();
  if (!is_elementary(g)) throw DomainError("annihilator_lattice: dual group must be (Z/p)^n");
  const long p = g.prime();
  const size_t n = g.rank();
  std::vector<std::vector<long>> gens;
  for (uint32_t e : dual[u].generators) gens.push_back(g.decode(e));
  HnfBuilder hb(n);
  for (size_t i = 0; i < n; ++i) {
    IntVector v(n, BigInt(0));
    v[i] = BigInt(p);
    hb.insert(v);
  }
  for (uint32_t x = 0; x < g.order(); ++x) {
    auto lam = g.decode(x);
    bool ok = true;
    for (const auto& ug : gens) {
      long dot = 0;
      for (size_t i = 0; i < n; ++i) dot += ug[i] * lam[i];
      if (dot % p != 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    IntVector v(n);
    for (size_t i = 0; i < n; ++i) v[i] = BigInt(lam[i]);
    hb.insert(v);
  }
  return hb.finish();
}

LatticeSetClass restrict_to_sublattice(const IntMatrix& lambda_set_stabilizer, const IntMatrix& t) {
  LatticeSetClass out;
  BigInt copies = lattice_index(lattice_sum(t, lambda_set_stabilizer));
  out[lattice_intersection(t, lambda_set_stabilizer)] = copies;
  return out;
}

RestrictionResult restrict_lambda_set(const SubgroupTable& dual, size_t u, size_t v, size_t v_perp) {
  const auto& g = dual.group();
  if (!is_elementary(g)) throw DomainError("restrict_lambda_set: dual group must be (Z/p)^n");
  if (u >= dual.size() || v >= dual.size() || v_perp >= dual.size())
    throw DomainError("restrict_lambda_set: subgroup index out of range");
  if (dual[v].order != static_cast<uint32_t>(g.prime()))
    throw DomainError("restrict_lambda_set: V must have order p");
  if (dual.meet(v, v_perp) != dual.trivial() || dual.sum(v, v_perp) != dual.whole())
    throw DomainError("restrict_lambda_set: V and V_perp do not split the group");
  std::vector<uint32_t> projections;
  for (uint32_t x : dual[u].elements) {
    for (uint32_t y : dual[v].elements) {
      uint32_t w = g.add(x, g.neg(y));
      if (dual[v_perp].has(w)) {
        projections.push_back(w);
        break;
      }
    }
  }
  RestrictionResult r;
  r.projected = dual.generated_by(projections);
  r.t_lattice = annihilator_lattice(dual, v);
  r.restricted = restrict_to_sublattice(annihilator_lattice(dual, r.projected), r.t_lattice);
  r.multiplicity = dual.contains(u, v) ? BigInt(g.prime()) : BigInt(1);
  return r;
}

}  // namespace morlog
