#include "cgt/fplinalg.hpp"

#include <algorithm>

namespace cgt {

bool is_prime(u32 n) {
  if (n < 2) return false;
  for (u32 d = 2; (u64)d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 checked_pow(u32 p, u32 e, u64 cap) {
  u64 r = 1;
  for (u32 i = 0; i < e; ++i) {
    r *= p;
    if (r > cap) throw CapExceeded("power " + std::to_string(p) + "^" + std::to_string(e) + " exceeds cap");
  }
  return r;
}

u32 exact_log(u32 p, u64 n) {
  u32 k = 0;
  u64 m = n;
  while (m > 1) {
    CGT_CHECK(m % p == 0, "value is not a power of " + std::to_string(p));
    m /= p;
    ++k;
  }
  CGT_CHECK(m == 1, "exact_log of zero");
  return k;
}

u64 fnv1a64(const void* data, std::size_t len) {
  const unsigned char* b = static_cast<const unsigned char*>(data);
  u64 h = 14695981039346656037ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= b[i];
    h *= 1099511628211ull;
  }
  return h;
}

static void require_prime(u32 p) {
  if (!is_prime(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
}

static void require_same_field(const FpMatrix& x, const FpMatrix& y) {
  if (x.p != y.p)
    throw InputError("mixed moduli: " + std::to_string(x.p) + " vs " + std::to_string(y.p));
}

FpMatrix::FpMatrix(u32 p_, std::size_t r, std::size_t c) : p(p_), rows(r), cols(c), a(r * c, 0) {
  require_prime(p_);
}

FpMatrix FpMatrix::identity(u32 p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool FpMatrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](u32 x) { return x == 0; });
}

bool FpMatrix::is_identity() const {
  if (rows != cols) return false;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

bool FpMatrix::operator==(const FpMatrix& o) const {
  return p == o.p && rows == o.rows && cols == o.cols && a == o.a;
}

std::vector<u32> FpMatrix::apply(const std::vector<u32>& v) const {
  if (v.size() != cols) throw InputError("matrix-vector size mismatch");
  std::vector<u32> out(rows, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    u64 acc = 0;
    for (std::size_t j = 0; j < cols; ++j) acc += (u64)at(i, j) * v[j];
    out[i] = (u32)(acc % p);
  }
  return out;
}

std::string FpMatrix::key() const {
  std::string k;
  k.reserve(8 + a.size());
  k.push_back('M');
  k.push_back((char)(p & 0xff));
  k.push_back((char)(rows & 0xff));
  k.push_back((char)(cols & 0xff));
  for (u32 x : a) k.push_back((char)(x & 0xff));
  return k;
}

FpMatrix operator*(const FpMatrix& x, const FpMatrix& y) {
  require_same_field(x, y);
  if (x.cols != y.rows) throw InputError("matrix product shape mismatch");
  FpMatrix r(x.p, x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      u64 xv = x.at(i, k);
      if (!xv) continue;
      for (std::size_t j = 0; j < y.cols; ++j) {
        u64 acc = r.at(i, j) + xv * y.at(k, j);
        r.at(i, j) = (u32)(acc % x.p);
      }
    }
  return r;
}

FpMatrix operator+(const FpMatrix& x, const FpMatrix& y) {
  require_same_field(x, y);
  if (x.rows != y.rows || x.cols != y.cols) throw InputError("matrix sum shape mismatch");
  FpMatrix r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = (x.a[i] + y.a[i]) % x.p;
  return r;
}

FpMatrix operator-(const FpMatrix& x, const FpMatrix& y) {
  require_same_field(x, y);
  if (x.rows != y.rows || x.cols != y.cols) throw InputError("matrix difference shape mismatch");
  FpMatrix r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = (x.a[i] + x.p - y.a[i]) % x.p;
  return r;
}

FpMatrix matpow(const FpMatrix& m, u64 e) {
  if (m.rows != m.cols) throw InputError("matpow of non-square matrix");
  FpMatrix acc = FpMatrix::identity(m.p, m.rows);
  FpMatrix base = m;
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

u32 fp_inv(u32 x, u32 p) {
  x %= p;
  if (x == 0) throw InputError("inverse of zero in F_p");
  // Fermat: x^(p-2); p is desk-scale so the loop is fine.
  u32 r = 1;
  u32 b = x;
  u32 e = p - 2;
  while (e) {
    if (e & 1) r = (u32)((u64)r * b % p);
    b = (u32)((u64)b * b % p);
    e >>= 1;
  }
  return r;
}

std::size_t rref_inplace(FpMatrix& m, std::vector<std::size_t>* pivots) {
  const u32 p = m.p;
  std::size_t r = 0;
  if (pivots) pivots->clear();
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t sel = r;
    while (sel < m.rows && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    u32 s = fp_inv(m.at(r, c), p);
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = (u32)((u64)m.at(r, j) * s % p);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      u32 f = m.at(i, c);
      if (!f) continue;
      for (std::size_t j = c; j < m.cols; ++j)
        m.at(i, j) = (u32)((m.at(i, j) + (u64)(p - f) * m.at(r, j)) % p);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

std::size_t rank(const FpMatrix& m) {
  FpMatrix t = m;
  return rref_inplace(t);
}

bool is_invertible(const FpMatrix& m) {
  return m.rows == m.cols && rank(m) == m.rows;
}

FpMatrix inverse(const FpMatrix& m) {
  if (m.rows != m.cols) throw InputError("inverse of non-square matrix");
  const std::size_t n = m.rows;
  FpMatrix aug(m.p, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<std::size_t> piv;
  std::size_t r = rref_inplace(aug, &piv);
  if (r < n || piv[n - 1] != n - 1) throw InputError("matrix is singular mod " + std::to_string(m.p));
  FpMatrix inv(m.p, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::size_t nilpotency_degree(const FpMatrix& m) {
  if (m.rows != m.cols) throw InputError("nilpotency degree of non-square matrix");
  if (m.rows == 0) return 0;  // empty matrix: m^0 is already zero
  FpMatrix acc = m;
  for (std::size_t k = 1; k <= m.rows; ++k) {
    if (acc.is_zero()) return k;
    acc = acc * m;
  }
  throw InputError("matrix is not nilpotent");
}

FpSubspace FpSubspace::zero(u32 p, std::size_t ambient) {
  FpSubspace s;
  s.p = p;
  s.ambient = ambient;
  s.basis = FpMatrix(p, 0, ambient);
  return s;
}

FpSubspace FpSubspace::full(u32 p, std::size_t ambient) {
  FpSubspace s;
  s.p = p;
  s.ambient = ambient;
  s.basis = FpMatrix::identity(p, ambient);
  return s;
}

FpSubspace FpSubspace::span_rows(const FpMatrix& rows) {
  FpMatrix t = rows;
  std::size_t r = rref_inplace(t);
  FpSubspace s;
  s.p = rows.p;
  s.ambient = rows.cols;
  s.basis = FpMatrix(rows.p, r, rows.cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < rows.cols; ++j) s.basis.at(i, j) = t.at(i, j);
  return s;
}

std::vector<u32> FpSubspace::reduce(const std::vector<u32>& v) const {
  if (v.size() != ambient) throw InputError("vector size does not match ambient dimension");
  std::vector<u32> w = v;
  for (std::size_t i = 0; i < basis.rows; ++i) {
    std::size_t c = 0;
    while (c < ambient && basis.at(i, c) == 0) ++c;
    if (c == ambient) continue;
    u32 f = w[c] % p;  // pivot entry is 1 in RREF
    if (!f) continue;
    for (std::size_t j = c; j < ambient; ++j)
      w[j] = (u32)((w[j] + (u64)(p - f) * basis.at(i, j)) % p);
  }
  for (auto& x : w) x %= p;
  return w;
}

bool FpSubspace::contains(const std::vector<u32>& v) const {
  auto w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](u32 x) { return x == 0; });
}

bool FpSubspace::contains(const FpSubspace& other) const {
  if (p != other.p || ambient != other.ambient) throw InputError("subspace ambient mismatch");
  for (std::size_t i = 0; i < other.basis.rows; ++i) {
    std::vector<u32> v(ambient);
    for (std::size_t j = 0; j < ambient; ++j) v[j] = other.basis.at(i, j);
    if (!contains(v)) return false;
  }
  return true;
}

bool FpSubspace::operator==(const FpSubspace& o) const {
  return p == o.p && ambient == o.ambient && basis == o.basis;
}

std::vector<u32> FpSubspace::coordinates(const std::vector<u32>& v) const {
  if (!contains(v)) throw InputError("vector is outside the subspace");
  std::vector<u32> c(basis.rows, 0);
  for (std::size_t i = 0; i < basis.rows; ++i) {
    std::size_t pc = 0;
    while (pc < ambient && basis.at(i, pc) == 0) ++pc;
    c[i] = v[pc] % p;  // RREF: all other basis rows vanish on pivot columns
  }
  return c;
}

std::vector<std::vector<u32>> FpSubspace::enumerate(u64 limit) const {
  u64 count;
  try {
    count = checked_pow(p, (u32)dim(), limit);
  } catch (const CapExceeded&) {
    throw InputError("subspace too large to enumerate");
  }
  std::vector<std::vector<u32>> out;
  out.reserve(count);
  std::vector<u32> coef(dim(), 0);
  for (u64 n = 0; n < count; ++n) {
    std::vector<u32> v(ambient, 0);
    for (std::size_t i = 0; i < dim(); ++i) {
      if (!coef[i]) continue;
      for (std::size_t j = 0; j < ambient; ++j)
        v[j] = (u32)((v[j] + (u64)coef[i] * basis.at(i, j)) % p);
    }
    out.push_back(std::move(v));
    for (std::size_t i = dim(); i-- > 0;) {  // lexicographic counter
      if (++coef[i] < p) break;
      coef[i] = 0;
    }
  }
  return out;
}

FpSubspace kernel(const FpMatrix& m) {
  FpMatrix t = m;
  std::vector<std::size_t> piv;
  rref_inplace(t, &piv);
  std::vector<char> is_piv(m.cols, 0);
  for (std::size_t c : piv) is_piv[c] = 1;
  std::size_t k = m.cols - piv.size();
  FpMatrix rows(m.p, k, m.cols);
  std::size_t r = 0;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    rows.at(r, f) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i)
      rows.at(r, piv[i]) = (m.p - t.at(i, f)) % m.p;
    ++r;
  }
  return FpSubspace::span_rows(rows);
}

FpSubspace annihilator(const FpSubspace& s) {
  return kernel(s.basis);
}

FpSubspace intersect(const FpSubspace& x, const FpSubspace& y) {
  if (x.p != y.p || x.ambient != y.ambient) throw InputError("subspace ambient mismatch");
  FpSubspace ax = annihilator(x);
  FpSubspace ay = annihilator(y);
  FpMatrix stack(x.p, ax.dim() + ay.dim(), x.ambient);
  for (std::size_t i = 0; i < ax.dim(); ++i)
    for (std::size_t j = 0; j < x.ambient; ++j) stack.at(i, j) = ax.basis.at(i, j);
  for (std::size_t i = 0; i < ay.dim(); ++i)
    for (std::size_t j = 0; j < x.ambient; ++j) stack.at(ax.dim() + i, j) = ay.basis.at(i, j);
  return kernel(stack);
}

FpSubspace subspace_sum(const FpSubspace& x, const FpSubspace& y) {
  if (x.p != y.p || x.ambient != y.ambient) throw InputError("subspace ambient mismatch");
  FpMatrix stack(x.p, x.dim() + y.dim(), x.ambient);
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.ambient; ++j) stack.at(i, j) = x.basis.at(i, j);
  for (std::size_t i = 0; i < y.dim(); ++i)
    for (std::size_t j = 0; j < x.ambient; ++j) stack.at(x.dim() + i, j) = y.basis.at(i, j);
  return FpSubspace::span_rows(stack);
}

}  // namespace cgt
