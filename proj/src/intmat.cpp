#include "morlog/intmat.hpp"

#include <sstream>
#include <utility>

#include "morlog/errors.hpp"

namespace morlog {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void axpy(IntVector& y, const BigInt& q, const IntVector& x) {
  if (q == 0) return;
  for (size_t i = 0; i < y.size(); ++i) y[i] -= q * x[i];
}

bool is_zero_vector(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

IntMatrix identity_matrix(size_t n) {
  IntMatrix m(n, IntVector(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix diagonal_matrix(std::span<const BigInt> diag) {
  IntMatrix m(diag.size(), IntVector(diag.size(), 0));
  for (size_t i = 0; i < diag.size(); ++i) m[i][i] = diag[i];
  return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const size_t rows = a.size();
  const size_t inner = b.size();
  const size_t cols = inner ? b[0].size() : 0;
  IntMatrix c(rows, IntVector(cols, 0));
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

BigInt determinant(const IntMatrix& m_in) {
  // Fraction-free Bareiss elimination.
  IntMatrix m = m_in;
  const size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

void HnfBuilder::insert(IntVector v) {
  const size_t n = rows_.size();
  if (v.size() != n) throw ContextMismatch("HnfBuilder: vector has wrong length");
  for (size_t c = 0; c < n; ++c) {
    if (v[c] == 0) continue;
    IntVector& r = rows_[c];
    if (r.empty()) {
      if (v[c] < 0)
        for (auto& x : v) x = -x;
      r = std::move(v);
      return;
    }
    while (v[c] != 0) {
      BigInt q = floor_div(r[c], v[c]);
      axpy(r, q, v);
      std::swap(r, v);
    }
    if (r[c] < 0)
      for (auto& x : r) x = -x;
  }
}

IntMatrix HnfBuilder::finish() const {
  const size_t n = rows_.size();
  IntMatrix h(n);
  for (size_t c = 0; c < n; ++c) {
    if (rows_[c].empty()) throw DomainError("HNF: generators do not span a full-rank lattice");
    h[c] = rows_[c];
  }
  for (size_t c = 0; c < n; ++c)
    for (size_t i = 0; i < c; ++i) axpy(h[i], floor_div(h[i][c], h[c][c]), h[c]);
  return h;
}

IntMatrix hermite_normal_form(const IntMatrix& generators, size_t n) {
  HnfBuilder b(n);
  for (const auto& row : generators) b.insert(row);
  return b.finish();
}

bool lattice_contains_vector(const IntMatrix& h, IntVector v) {
  for (size_t c = 0; c < h.size(); ++c) {
    if (v[c] == 0) continue;
    if (!mpz_divisible_p(v[c].get_mpz_t(), h[c][c].get_mpz_t())) return false;
    axpy(v, BigInt(v[c] / h[c][c]), h[c]);
  }
  return is_zero_vector(v);
}

bool lattice_contains(const IntMatrix& big, const IntMatrix& small) {
  for (const auto& row : small)
    if (!lattice_contains_vector(big, row)) return false;
  return true;
}

IntMatrix lattice_sum(const IntMatrix& a, const IntMatrix& b) {
  HnfBuilder builder(a.size());
  for (const auto& r : a) builder.insert(r);
  for (const auto& r : b) builder.insert(r);
  return builder.finish();
}

BigInt lattice_index(const IntMatrix& h) {
  BigInt d = 1;
  for (size_t i = 0; i < h.size(); ++i) d *= h[i][i];
  return d;
}

IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b) {
  const size_t n = a.size();
  BigInt m;
  BigInt da = lattice_index(a);
  BigInt db = lattice_index(b);
  mpz_lcm(m.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
  if (!m.fits_slong_p()) throw ResourceError("lattice_intersection: modulus too large");
  const long mod = m.get_si();
  double cells = 1;
  for (size_t i = 0; i < n; ++i) cells *= static_cast<double>(mod);
  if (cells > 4e6) throw ResourceError("lattice_intersection: enumeration too large");

  HnfBuilder builder(n);
  for (size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = m;
    builder.insert(e);
  }
  IntVector v(n, 0);
  std::vector<long> digits(n, 0);
  while (true) {
    for (size_t i = 0; i < n; ++i) v[i] = digits[i];
    if (lattice_contains_vector(a, v) && lattice_contains_vector(b, v)) builder.insert(v);
    size_t i = 0;
    while (i < n && ++digits[i] == mod) digits[i++] = 0;
    if (i == n) break;
  }
  return builder.finish();
}

std::vector<BigInt> smith_invariants(IntMatrix a) {
  const size_t n = a.size();
  std::vector<BigInt> inv;
  for (size_t t = 0; t < n; ++t) {
    while (true) {
      size_t pi = n, pj = n;
      for (size_t i = t; i < n; ++i)
        for (size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (pi == n || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == n) throw DomainError("smith_invariants: matrix is singular");
      std::swap(a[t], a[pi]);
      for (size_t i = 0; i < n; ++i) std::swap(a[i][t], a[i][pj]);

      bool clean = true;
      for (size_t i = t + 1; i < n; ++i) {
        BigInt q = a[i][t] / a[t][t];
        axpy(a[i], q, a[t]);
        if (a[i][t] != 0) clean = false;
      }
      for (size_t j = t + 1; j < n; ++j) {
        BigInt q = a[t][j] / a[t][t];
        if (q != 0)
          for (size_t i = 0; i < n; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      bool divides_all = true;
      for (size_t i = t + 1; i < n && divides_all; ++i)
        for (size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            for (size_t k = 0; k < n; ++k) a[t][k] += a[i][k];
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    inv.push_back(abs(a[t][t]));
  }
  return inv;
}

std::vector<BigInt> quotient_invariants(const IntMatrix& big, const IntMatrix& small) {
  const size_t n = big.size();
  // Express each row of small in the basis big (upper triangular): x * big = s.
  IntMatrix x(n, IntVector(n, 0));
  for (size_t r = 0; r < n; ++r) {
    IntVector s = small[r];
    for (size_t c = 0; c < n; ++c) {
      if (!mpz_divisible_p(s[c].get_mpz_t(), big[c][c].get_mpz_t()))
        throw DomainError("quotient_invariants: lattice is not contained in the larger one");
      x[r][c] = s[c] / big[c][c];
      axpy(s, x[r][c], big[c]);
    }
  }
  std::vector<BigInt> out;
  for (auto& d : smith_invariants(std::move(x)))
    if (d != 1) out.push_back(d);
  return out;
}

std::string matrix_to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) os << ",";
    os << "[";
    for (size_t j = 0; j < m[i].size(); ++j) {
      if (j) os << ",";
      os << m[i][j].get_str();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace morlog
