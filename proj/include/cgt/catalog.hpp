#ifndef CGT_CATALOG_HPP_
#define CGT_CATALOG_HPP_

// Built-in example groups and modules: cyclic, elementary abelian,
// extraspecial of exponent p, unitriangular, wreath-type semidirect
// products, and one fixed 8-dimensional faithful module over F_3 for the
// wreath group of order 81 (with frozen matrices, checksummed).

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cgt/group.hpp"
#include "cgt/modrep.hpp"

namespace cgt {

PGroupPtr cyclic_group(u32 p, u32 k, u64 cap = kDefaultOrderCap);
PGroupPtr elem_abelian_group(u32 p, u32 r, u64 cap = kDefaultOrderCap);
// Order p^3, exponent p, class 2.  Odd p only.
PGroupPtr extraspecial_exponent_p(u32 p, u64 cap = kDefaultOrderCap);
// Upper unitriangular n x n matrices over F_p, generated by I + E_{i,i+1}.
PGroupPtr unitriangular_group(u32 n, u32 p, u64 cap = kDefaultOrderCap);

// C_p acting on F_p^size by one Jordan block (needs size <= p).
FpGModule jordan_module(u32 p, u32 size);
// Left-translation permutation module of G on F_p^{|G|} (|G| <= kMaxDim).
FpGModule regular_module(const PGroupPtr& g);

// V x| G for an F_p G-module V, using the pair element backend.  Default
// generators: the inner generators (zero vector, original labels) plus the
// standard basis vectors of V labeled v1..vd.  Custom generators override
// that: each is (label, base vector, inner generator label or "" for 1).
struct SdGen {
  std::string label;
  std::vector<u32> vec;
  std::string inner_label;
};
PGroupPtr semidirect_product(const FpGModule& inner, const std::vector<SdGen>& custom = {},
                             u64 cap = kDefaultOrderCap);

// C_p wr C_p = F_p^p x| C_p from the regular (shift) action; order p^{p+1}.
PGroupPtr wreath_cpcp(u32 p, u64 cap = kDefaultOrderCap);

// Elements of a semidirect-product group whose inner part is the identity.
Subgroup base_subgroup(const PGroupPtr& s);

// The order-81 wreath group presented on generators A (shift, acting on the
// base by a single size-3 Jordan block), B, C, D (base vectors e3, e2, e1),
// together with its faithful 8-dimensional module over F_3 given by frozen
// matrices for the four generators.  Element indices of the generators are
// returned alongside.  The matrix data is checksummed at build time.
struct Gl8Example {
  PGroupPtr group;
  FpGModule module;
  u32 a = 0, b = 0, c = 0, d = 0;
};
Gl8Example gl8_example();

// The four frozen nilpotent parts (action minus identity) of the gl8
// generator matrices, in generator order A, B, C, D.  Checksummed copies,
// exposed so verification can re-derive every relation from raw data (and
// deliberately corrupt a copy as a negative control).
std::array<FpMatrix, 4> gl8_nilpotent_parts();

struct CatalogEntry {
  std::string name;
  u32 p = 0;
  std::string description;
  std::function<PGroupPtr()> build_group;
  // Present only when the entry ships a module; receives the built group.
  std::function<FpGModule(const PGroupPtr&)> build_module;
  u32 expected_order = 0;
  u32 expected_class = 0;
};

const std::vector<CatalogEntry>& catalog();
std::optional<CatalogEntry> catalog_find(const std::string& name);

// Parametric families for ad-hoc builds: cyclic (n = exponent of p),
// elem-abelian (n = rank), extraspecial (n ignored), unitriangular
// (n = matrix size), wreath (n ignored).
PGroupPtr build_family(const std::string& family, u32 p, u32 n, u64 cap = kDefaultOrderCap);

}  // namespace cgt

#endif  // CGT_CATALOG_HPP_
