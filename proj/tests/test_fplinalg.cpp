#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "cgt/fplinalg.hpp"

using namespace cgt;

namespace {

FpMatrix from_rows(u32 p, std::vector<std::vector<u32>> rows) {
  FpMatrix m(p, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c] % p;
  return m;
}

std::vector<u32> unit(u32 dim, u32 i) {
  std::vector<u32> v(dim, 0);
  v[i] = 1;
  return v;
}

}  // namespace

TEST_SUITE("fplinalg") {

TEST_CASE("arithmetic and identity") {
  FpMatrix a = from_rows(3, {{1, 2}, {0, 1}});
  FpMatrix b = from_rows(3, {{2, 0}, {1, 1}});
  CHECK((a * b) == from_rows(3, {{4 % 3, 2}, {1, 1}}));
  CHECK((a + b) == from_rows(3, {{0, 2}, {1, 2}}));
  CHECK((a - b) == from_rows(3, {{2, 2}, {2, 0}}));
  CHECK(FpMatrix::identity(3, 2).is_identity());
  CHECK(matpow(a, 0).is_identity());
  CHECK(matpow(a, 3) == a * a * a);
  std::vector<u32> v{1, 1};
  CHECK(a.apply(v) == std::vector<u32>{0, 1});
}

TEST_CASE("fp_inv over several primes") {
  for (u32 p : {2u, 3u, 5u, 7u, 11u})
    for (u32 x = 1; x < p; ++x) CHECK((u64)x * fp_inv(x, p) % p == 1);
}

TEST_CASE("rref, rank and inverse") {
  FpMatrix m = from_rows(3, {{1, 2, 0}, {2, 1, 1}, {0, 1, 1}});
  CHECK(rank(m) == 3);
  CHECK(is_invertible(m));
  CHECK((inverse(m) * m).is_identity());
  CHECK((m * inverse(m)).is_identity());

  FpMatrix sing = from_rows(3, {{1, 2, 0}, {2, 4, 0}, {0, 0, 1}});
  CHECK(rank(sing) == 2);
  CHECK_FALSE(is_invertible(sing));
  CHECK_THROWS_AS(inverse(sing), InputError);

  std::vector<std::size_t> pivots;
  FpMatrix r = sing;
  CHECK(rref_inplace(r, &pivots) == 2);
  CHECK(pivots == std::vector<std::size_t>{0, 2});
}

TEST_CASE("rank-nullity on a deterministic batch") {
  std::mt19937_64 rng(7);
  for (u32 p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 20; ++trial) {
      FpMatrix m(p, 4, 6);
      for (auto& e : m.a) e = (u32)(rng() % p);
      CHECK(rank(m) + kernel(m).dim() == 6);
    }
  }
}

TEST_CASE("nilpotency degree") {
  FpMatrix shift = from_rows(3, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  CHECK(nilpotency_degree(shift) == 3);
  CHECK(nilpotency_degree(shift * shift) == 2);
  CHECK(nilpotency_degree(FpMatrix(3, 2, 2)) == 1);
  CHECK(nilpotency_degree(FpMatrix(3, 0, 0)) == 0);
  CHECK_THROWS_AS(nilpotency_degree(FpMatrix::identity(3, 2)), InputError);
}

TEST_CASE("subspace span, membership, coordinates") {
  FpMatrix rows = from_rows(3, {{1, 1, 0}, {0, 1, 1}, {1, 2, 1}});  // third = sum
  FpSubspace s = FpSubspace::span_rows(rows);
  CHECK(s.dim() == 2);
  CHECK(s.contains({1, 0, 2}));  // (1,1,0) - (0,1,1)
  CHECK_FALSE(s.contains(unit(3, 0)));
  CHECK(s.reduce({1, 0, 2}) == std::vector<u32>{0, 0, 0});
  CHECK(s.reduce(unit(3, 0)) != std::vector<u32>{0, 0, 0});
  std::vector<u32> coord = s.coordinates({1, 0, 2});
  CHECK(coord.size() == 2);
  // rebuild from coordinates
  std::vector<u32> back(3, 0);
  for (std::size_t r = 0; r < 2; ++r)
    for (u32 c = 0; c < 3; ++c) back[c] = (back[c] + coord[r] * s.basis.at(r, c)) % 3;
  CHECK(back == std::vector<u32>{1, 0, 2});
  CHECK_THROWS_AS(s.coordinates(unit(3, 0)), InputError);

  CHECK(FpSubspace::zero(3, 4).dim() == 0);
  CHECK(FpSubspace::full(3, 4).dim() == 4);
  CHECK(FpSubspace::zero(3, 4).contains(std::vector<u32>(4, 0)));
}

TEST_CASE("kernel and annihilator") {
  FpMatrix m = from_rows(3, {{0, 1}, {0, 0}});
  FpSubspace k = kernel(m);
  CHECK(k.dim() == 1);
  CHECK(k.contains(unit(2, 0)));

  FpMatrix rows = from_rows(5, {{1, 2, 3, 4}, {0, 1, 0, 1}});
  FpSubspace s = FpSubspace::span_rows(rows);
  FpSubspace ann = annihilator(s);
  CHECK(s.dim() + ann.dim() == 4);
  CHECK(annihilator(ann) == s);
  // every annihilator row kills every subspace vector
  for (const auto& v : s.enumerate())
    for (std::size_t r = 0; r < ann.basis.rows; ++r) {
      u32 dot = 0;
      for (u32 c = 0; c < 4; ++c) dot = (dot + ann.basis.at(r, c) * v[c]) % 5;
      CHECK(dot == 0);
    }
}

TEST_CASE("intersection and sum dimension formula") {
  FpSubspace x = FpSubspace::span_rows(from_rows(3, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  FpSubspace y = FpSubspace::span_rows(from_rows(3, {{0, 1, 0, 0}, {0, 0, 1, 0}}));
  FpSubspace both = intersect(x, y);
  FpSubspace sum = subspace_sum(x, y);
  CHECK(both.dim() == 1);
  CHECK(sum.dim() == 3);
  CHECK(both.contains(unit(4, 1)));
  CHECK(x.dim() + y.dim() == sum.dim() + both.dim());
  CHECK(sum.contains(x));
  CHECK(sum.contains(y));
  CHECK(x.contains(both));
}

TEST_CASE("enumerate") {
  FpSubspace full2 = FpSubspace::full(3, 2);
  auto vecs = full2.enumerate();
  CHECK(vecs.size() == 9);
  CHECK(vecs[0] == std::vector<u32>{0, 0});
  CHECK_THROWS_AS(FpSubspace::full(3, 20).enumerate(100), InputError);
}

TEST_CASE("thirteen lines in F_3^3") {
  // distinct 1-dimensional subspaces, counted by canonical basis keys
  std::set<std::string> lines;
  for (const auto& v : FpSubspace::full(3, 3).enumerate()) {
    if (v == std::vector<u32>{0, 0, 0}) continue;
    FpMatrix row(3, 1, 3);
    for (u32 c = 0; c < 3; ++c) row.at(0, c) = v[c];
    lines.insert(FpSubspace::span_rows(row).basis.key());
  }
  CHECK(lines.size() == 13);
}

}  // TEST_SUITE
