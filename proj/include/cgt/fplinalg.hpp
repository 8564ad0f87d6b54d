#ifndef CGT_FPLINALG_HPP_
#define CGT_FPLINALG_HPP_

// Exact dense linear algebra over the prime field F_p.  Every value carries
// its modulus; mixing moduli is a hard error.  No floating point anywhere.

#include <cstddef>
#include <string>
#include <vector>

#include "cgt/common.hpp"

namespace cgt {

// Dense row-major matrix over F_p with entries stored as reduced residues.
struct FpMatrix {
  u32 p = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<u32> a;  // rows*cols entries, row-major

  FpMatrix() = default;
  FpMatrix(u32 p_, std::size_t r, std::size_t c);

  static FpMatrix identity(u32 p, std::size_t n);

  u32& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  u32 at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const FpMatrix& o) const;
  bool operator!=(const FpMatrix& o) const { return !(*this == o); }

  // M * v  (column-vector convention).
  std::vector<u32> apply(const std::vector<u32>& v) const;

  std::string key() const;  // canonical byte string (shape + entries)
};

FpMatrix operator*(const FpMatrix& x, const FpMatrix& y);
FpMatrix operator+(const FpMatrix& x, const FpMatrix& y);
FpMatrix operator-(const FpMatrix& x, const FpMatrix& y);
FpMatrix matpow(const FpMatrix& m, u64 e);

u32 fp_inv(u32 x, u32 p);  // multiplicative inverse, x != 0

// In-place reduced row echelon form; returns the rank and, when asked,
// the pivot columns.
std::size_t rref_inplace(FpMatrix& m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const FpMatrix& m);
bool is_invertible(const FpMatrix& m);
FpMatrix inverse(const FpMatrix& m);  // InputError when singular

// Least k >= 0 with m^k = 0; InputError when m is not nilpotent
// (m^n != 0 forces that, by Cayley-Hamilton).  Zero matrix -> 1.
std::size_t nilpotency_degree(const FpMatrix& m);

// Subspace of F_p^ambient in canonical form: the basis rows are the unique
// RREF, so equal subspaces compare equal entrywise.
struct FpSubspace {
  u32 p = 0;
  std::size_t ambient = 0;
  FpMatrix basis;  // dim x ambient, RREF, no zero rows

  static FpSubspace zero(u32 p, std::size_t ambient);
  static FpSubspace full(u32 p, std::size_t ambient);
  static FpSubspace span_rows(const FpMatrix& rows);

  std::size_t dim() const { return basis.rows; }
  bool contains(const std::vector<u32>& v) const;
  bool contains(const FpSubspace& other) const;
  bool operator==(const FpSubspace& o) const;
  bool operator!=(const FpSubspace& o) const { return !(*this == o); }

  // Coordinates of v in the RREF basis; InputError when v is outside.
  std::vector<u32> coordinates(const std::vector<u32>& v) const;

  // v reduced modulo the subspace (pivot columns eliminated).
  std::vector<u32> reduce(const std::vector<u32>& v) const;

  // All p^dim vectors, ordered by lexicographic coefficient tuples.
  // InputError when p^dim exceeds `limit`.
  std::vector<std::vector<u32>> enumerate(u64 limit = 1u << 20) const;
};

// {v : m v = 0} in canonical form.
FpSubspace kernel(const FpMatrix& m);

// Annihilator under the standard dot product; rows of the result kill
// exactly the vectors of s.  dim = ambient - dim(s).
FpSubspace annihilator(const FpSubspace& s);

FpSubspace intersect(const FpSubspace& x, const FpSubspace& y);
FpSubspace subspace_sum(const FpSubspace& x, const FpSubspace& y);

}  // namespace cgt

#endif  // CGT_FPLINALG_HPP_
