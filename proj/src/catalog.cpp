#include "cgt/catalog.hpp"

#include <algorithm>
#include <utility>

#include "cgt/common.hpp"

namespace cgt {

namespace {

FpMatrix jordan_matrix(u32 p, u32 size) {
  FpMatrix j = FpMatrix::identity(p, size);
  for (u32 i = 0; i + 1 < size; ++i) j.at(i, i + 1) = 1;
  return j;
}

u64 upow(u32 p, u32 e) {
  u64 r = 1;
  for (u32 i = 0; i < e; ++i) r *= p;
  return r;
}

u32 clamp_cap(u64 cap) { return (u32)std::min<u64>(cap, 0xFFFFFFFFull); }

}  // namespace

PGroupPtr cyclic_group(u32 p, u32 k, u64 cap) {
  if (!is_prime(p)) throw InputError("p must be prime");
  if (k == 0) throw InputError("cyclic group needs a positive exponent");
  u64 n = checked_pow(p, k, cap);
  std::vector<u32> img(n);
  for (u64 i = 0; i < n; ++i) img[i] = (u32)((i + 1) % n);
  std::vector<std::pair<std::string, GroupElement>> gens;
  gens.emplace_back("g", GroupElement::perm(std::move(img)));
  return close_group(p, std::move(gens), clamp_cap(cap));
}

PGroupPtr elem_abelian_group(u32 p, u32 r, u64 cap) {
  if (!is_prime(p)) throw InputError("p must be prime");
  if (r == 0) throw InputError("elementary abelian group needs a positive rank");
  checked_pow(p, r, cap);
  std::vector<std::pair<std::string, GroupElement>> gens;
  for (u32 i = 0; i < r; ++i) {
    std::vector<u32> img(p * r);
    for (u32 j = 0; j < p * r; ++j) img[j] = j;
    for (u32 j = 0; j < p; ++j) img[i * p + j] = i * p + (j + 1) % p;
    gens.emplace_back("g" + std::to_string(i + 1), GroupElement::perm(std::move(img)));
  }
  return close_group(p, std::move(gens), clamp_cap(cap));
}

PGroupPtr extraspecial_exponent_p(u32 p, u64 cap) {
  if (!is_prime(p)) throw InputError("p must be prime");
  if (p == 2) throw InputError("exponent-p extraspecial groups need p odd");
  FpMatrix x = FpMatrix::identity(p, 3);
  x.at(0, 1) = 1;
  FpMatrix y = FpMatrix::identity(p, 3);
  y.at(1, 2) = 1;
  std::vector<std::pair<std::string, GroupElement>> gens;
  gens.emplace_back("x", GroupElement::mat(std::move(x)));
  gens.emplace_back("y", GroupElement::mat(std::move(y)));
  PGroupPtr g = close_group(p, std::move(gens), clamp_cap(cap));
  CGT_CHECK(g->order() == upow(p, 3), "extraspecial group must close at order p^3");
  return g;
}

PGroupPtr unitriangular_group(u32 n, u32 p, u64 cap) {
  if (!is_prime(p)) throw InputError("p must be prime");
  if (n < 2 || n > kMaxDim) throw InputError("matrix size out of range");
  std::vector<std::pair<std::string, GroupElement>> gens;
  for (u32 i = 0; i + 1 < n; ++i) {
    FpMatrix t = FpMatrix::identity(p, n);
    t.at(i, i + 1) = 1;
    gens.emplace_back("t" + std::to_string(i + 1), GroupElement::mat(std::move(t)));
  }
  PGroupPtr g = close_group(p, std::move(gens), clamp_cap(cap));
  CGT_CHECK(g->order() == upow(p, n * (n - 1) / 2), "unitriangular group order");
  return g;
}

FpGModule jordan_module(u32 p, u32 size) {
  if (size == 0 || size > p) throw InputError("Jordan block size must be between 1 and p");
  return build_module(cyclic_group(p, 1), size, {jordan_matrix(p, size)});
}

FpGModule regular_module(const PGroupPtr& g) {
  if (!g) throw InputError("module requires a group");
  const u32 n = g->order();
  if (n > kMaxDim) throw InputError("group too large for its regular module");
  std::vector<FpMatrix> mats;
  mats.reserve(g->generators.size());
  for (const auto& gen : g->generators) {
    FpMatrix m(g->p, n, n);
    for (u32 x = 0; x < n; ++x) m.at(g->mul(gen.second, x), x) = 1;
    mats.push_back(std::move(m));
  }
  return build_module(g, n, mats);
}

PGroupPtr semidirect_product(const FpGModule& inner, const std::vector<SdGen>& custom, u64 cap) {
  auto ctx = std::make_shared<const SemidirectContext>(
      SemidirectContext{inner.group, inner.act, inner.p, inner.dim});
  std::vector<std::pair<std::string, GroupElement>> gens;
  if (custom.empty()) {
    for (const auto& g : inner.group->generators)
      gens.emplace_back(g.first, GroupElement::pair(std::vector<u32>(inner.dim, 0), g.second, ctx));
    for (u32 i = 0; i < inner.dim; ++i) {
      std::vector<u32> v(inner.dim, 0);
      v[i] = 1;
      gens.emplace_back("v" + std::to_string(i + 1), GroupElement::pair(std::move(v), 0, ctx));
    }
  } else {
    for (const auto& sg : custom) {
      if (sg.vec.size() != inner.dim) throw InputError("base vector size mismatch");
      u32 idx = 0;
      if (!sg.inner_label.empty()) {
        bool found = false;
        for (const auto& g : inner.group->generators) {
          if (g.first == sg.inner_label) {
            idx = g.second;
            found = true;
            break;
          }
        }
        if (!found) throw InputError("unknown inner generator label: " + sg.inner_label);
      }
      std::vector<u32> v = sg.vec;
      for (auto& e : v) e %= inner.p;
      gens.emplace_back(sg.label, GroupElement::pair(std::move(v), idx, ctx));
    }
  }
  return close_group(inner.p, std::move(gens), clamp_cap(cap));
}

PGroupPtr wreath_cpcp(u32 p, u64 cap) {
  PGroupPtr g = semidirect_product(regular_module(cyclic_group(p, 1, cap)), {}, cap);
  CGT_CHECK(g->order() == upow(p, p + 1), "wreath group must close at order p^(p+1)");
  return g;
}

Subgroup base_subgroup(const PGroupPtr& s) {
  std::vector<u32> elems;
  for (u32 i = 0; i < s->order(); ++i) {
    const auto* pr = s->elements[i].as_pair();
    if (!pr) throw InputError("base subgroup needs a semidirect-product group");
    if (pr->inner == 0) elems.push_back(i);
  }
  return subgroup_from_elements(s, std::move(elems), /*verify=*/true);
}

namespace {

// Frozen action data for the order-81 wreath group on F_3^8: nilpotent
// parts of the four generator actions, row-major.
const u32 kAlpha[64] = {
    2, 2, 0, 2, 0, 1, 0, 1,  //
    1, 1, 2, 2, 0, 0, 0, 0,  //
    0, 0, 2, 2, 0, 0, 0, 0,  //
    0, 0, 1, 1, 0, 0, 0, 0,  //
    0, 0, 1, 2, 0, 0, 1, 1,  //
    0, 0, 1, 1, 0, 0, 0, 0,  //
    0, 0, 0, 0, 0, 0, 0, 1,  //
    0, 0, 0, 0, 0, 0, 0, 0,
};
const u32 kBeta[64] = {
    0, 0, 0, 0, 1, 0, 0, 0,  //
    0, 0, 0, 0, 0, 1, 0, 0,  //
    0, 0, 0, 0, 0, 0, 1, 0,  //
    0, 0, 0, 0, 0, 0, 0, 1,  //
    0, 0, 0, 0, 0, 0, 0, 0,  //
    0, 0, 0, 0, 0, 0, 0, 0,  //
    0, 0, 0, 0, 0, 0, 0, 0,  //
    0, 0, 0, 0, 0, 0, 0, 0,
};
const u32 kGamma[64] = {
    0, 0, 1, 1, 2, 2, 2, 1,  //
    0, 0, 1, 0, 1, 1, 0, 0,  //
    0, 0, 0, 0, 0, 0, 2, 2,  //
    0, 0, 0, 0, 0, 0, 1, 0,  //
    0, 0, 0, 0, 0, 0, 1, 1,  //
    0, 0, 0, 0, 0, 0, 1, 0,  //
    0, 0, 0, 0, 0, 0, 0, 0,  //
    0, 0, 0, 0, 0, 0, 0, 0,
};
const u32 kDelta[64] = {
    0, 0, 1, 0, 0, 0, 0, 0,  //
    0, 0, 0, 1, 0, 0, 0, 0,  //
    0, 0, 0, 0, 0, 0, 0, 2,  //
    0, 0, 0, 0, 0, 0, 0, 1,  //
    0, 0, 0, 0, 0, 0, 1, 0,  //
    0, 0, 0, 0, 0, 0, 0, 1,  //
    0, 0, 0, 0, 0, 0, 0, 0,  //
    0, 0, 0, 0, 0, 0, 0, 0,
};

FpMatrix from_table(const u32* d) {
  FpMatrix m(3, 8, 8);
  for (u32 i = 0; i < 64; ++i) m.at(i / 8, i % 8) = d[i];
  return m;
}

Gl8Example build_gl8() {
  unsigned char bytes[256];
  const u32* tables[4] = {kAlpha, kBeta, kGamma, kDelta};
  for (u32 t = 0; t < 4; ++t)
    for (u32 i = 0; i < 64; ++i) bytes[t * 64 + i] = (unsigned char)tables[t][i];
  CGT_CHECK(fnv1a64(bytes, 256) == 0x03c1fef9fec06d5cULL, "frozen action data corrupted");

  Gl8Example out;
  out.group = semidirect_product(jordan_module(3, 3),
                                 {{"A", {0, 0, 0}, "g"},
                                  {"B", {0, 0, 1}, ""},
                                  {"C", {0, 1, 0}, ""},
                                  {"D", {1, 0, 0}, ""}});
  CGT_CHECK(out.group->order() == 81, "example group must close at order 81");

  const FpMatrix id = FpMatrix::identity(3, 8);
  std::vector<FpMatrix> mats = {id + from_table(kAlpha), id + from_table(kBeta),
                                id + from_table(kGamma), id + from_table(kDelta)};
  out.module = build_module(out.group, 8, mats);

  for (const auto& g : out.group->generators) {
    if (g.first == "A") out.a = g.second;
    if (g.first == "B") out.b = g.second;
    if (g.first == "C") out.c = g.second;
    if (g.first == "D") out.d = g.second;
  }
  return out;
}

}  // namespace

Gl8Example gl8_example() {
  static const Gl8Example ex = build_gl8();
  return ex;
}

std::array<FpMatrix, 4> gl8_nilpotent_parts() {
  unsigned char bytes[256];
  const u32* tables[4] = {kAlpha, kBeta, kGamma, kDelta};
  for (u32 t = 0; t < 4; ++t)
    for (u32 i = 0; i < 64; ++i) bytes[t * 64 + i] = (unsigned char)tables[t][i];
  CGT_CHECK(fnv1a64(bytes, 256) == 0x03c1fef9fec06d5cULL, "frozen action data corrupted");
  return {from_table(kAlpha), from_table(kBeta), from_table(kGamma), from_table(kDelta)};
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    auto reg = [](const PGroupPtr& g) { return regular_module(g); };
    std::vector<CatalogEntry> v;

    v.push_back({"c3", 3, "cyclic group of order 3 with its size-3 Jordan action",
                 [] { return cyclic_group(3, 1); },
                 [](const PGroupPtr& g) { return build_module(g, 3, {jordan_matrix(3, 3)}); }, 3,
                 1});
    v.push_back({"c9", 3, "cyclic group of order 9 with its regular module",
                 [] { return cyclic_group(3, 2); }, reg, 9, 1});
    v.push_back({"c27", 3, "cyclic group of order 27 with its regular module",
                 [] { return cyclic_group(3, 3); }, reg, 27, 1});
    v.push_back({"c81", 3, "cyclic group of order 81", [] { return cyclic_group(3, 4); }, nullptr,
                 81, 1});
    v.push_back({"c243", 3, "cyclic group of order 243", [] { return cyclic_group(3, 5); },
                 nullptr, 243, 1});
    v.push_back({"e9", 3, "elementary abelian group of rank 2 over F_3 with its regular module",
                 [] { return elem_abelian_group(3, 2); }, reg, 9, 1});
    v.push_back({"e27", 3, "elementary abelian group of rank 3 over F_3 with its regular module",
                 [] { return elem_abelian_group(3, 3); }, reg, 27, 1});
    v.push_back({"e81", 3, "elementary abelian group of rank 4 over F_3",
                 [] { return elem_abelian_group(3, 4); }, nullptr, 81, 1});
    v.push_back({"e243", 3, "elementary abelian group of rank 5 over F_3",
                 [] { return elem_abelian_group(3, 5); }, nullptr, 243, 1});
    v.push_back({"es27", 3, "extraspecial group of order 27, exponent 3, with its regular module",
                 [] { return extraspecial_exponent_p(3); }, reg, 27, 2});
    v.push_back({"ut4-3", 3, "unitriangular 4x4 matrices over F_3",
                 [] { return unitriangular_group(4, 3); }, nullptr, 729, 3});
    v.push_back({"wr3", 3, "wreath-type group F_3^3 x| C_3 from the shift action",
                 [] { return wreath_cpcp(3); }, nullptr, 81, 3});
    v.push_back({"sd-j3", 3, "semidirect product F_3^3 x| C_3 from the size-3 Jordan action",
                 [] { return semidirect_product(jordan_module(3, 3)); }, nullptr, 81, 3});
    v.push_back({"gl8", 3,
                 "order-81 wreath-type group with its faithful 8-dimensional module over F_3",
                 [] { return gl8_example().group; },
                 [](const PGroupPtr& g) {
                   Gl8Example ex = gl8_example();
                   CGT_CHECK(ex.module.group == g, "module must be bound to the catalog group");
                   return ex.module;
                 },
                 81, 3});

    v.push_back({"c2", 2, "cyclic group of order 2 with its size-2 Jordan action",
                 [] { return cyclic_group(2, 1); },
                 [](const PGroupPtr& g) { return build_module(g, 2, {jordan_matrix(2, 2)}); }, 2,
                 1});
    v.push_back({"c4", 2, "cyclic group of order 4 with its regular module",
                 [] { return cyclic_group(2, 2); }, reg, 4, 1});
    v.push_back({"c8", 2, "cyclic group of order 8 with its regular module",
                 [] { return cyclic_group(2, 3); }, reg, 8, 1});
    v.push_back({"e4", 2, "elementary abelian group of rank 2 over F_2 with its regular module",
                 [] { return elem_abelian_group(2, 2); }, reg, 4, 1});
    v.push_back({"e8", 2, "elementary abelian group of rank 3 over F_2 with its regular module",
                 [] { return elem_abelian_group(2, 3); }, reg, 8, 1});
    v.push_back({"wr2", 2, "dihedral group of order 8 (F_2^2 x| C_2) with its regular module",
                 [] { return wreath_cpcp(2); }, reg, 8, 2});

    v.push_back({"c5", 5, "cyclic group of order 5 with its size-5 Jordan action",
                 [] { return cyclic_group(5, 1); },
                 [](const PGroupPtr& g) { return build_module(g, 5, {jordan_matrix(5, 5)}); }, 5,
                 1});
    v.push_back({"c25", 5, "cyclic group of order 25 with its regular module",
                 [] { return cyclic_group(5, 2); }, reg, 25, 1});
    v.push_back({"c125", 5, "cyclic group of order 125", [] { return cyclic_group(5, 3); },
                 nullptr, 125, 1});
    v.push_back({"e25", 5, "elementary abelian group of rank 2 over F_5 with its regular module",
                 [] { return elem_abelian_group(5, 2); }, reg, 25, 1});
    v.push_back({"e125", 5, "elementary abelian group of rank 3 over F_5",
                 [] { return elem_abelian_group(5, 3); }, nullptr, 125, 1});
    v.push_back({"es125", 5, "extraspecial group of order 125, exponent 5",
                 [] { return extraspecial_exponent_p(5); }, nullptr, 125, 2});
    return v;
  }();
  return entries;
}

std::optional<CatalogEntry> catalog_find(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  return std::nullopt;
}

PGroupPtr build_family(const std::string& family, u32 p, u32 n, u64 cap) {
  if (family == "cyclic") return cyclic_group(p, n, cap);
  if (family == "elem-abelian") return elem_abelian_group(p, n, cap);
  if (family == "extraspecial") return extraspecial_exponent_p(p, cap);
  if (family == "unitriangular") return unitriangular_group(n, p, cap);
  if (family == "wreath") return wreath_cpcp(p, cap);
  throw InputError("unknown family: " + family);
}

}  // namespace cgt
