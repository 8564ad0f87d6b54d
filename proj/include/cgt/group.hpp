#ifndef CGT_GROUP_HPP_
#define CGT_GROUP_HPP_

// Finite p-groups by exhaustive enumeration.  Elements live in one of three
// backends (permutation, invertible matrix over F_p, or semidirect pair
// (vector, inner element)); a group is closed once by breadth-first search
// from its labeled generators and afterwards everything runs on element
// indices against cached multiplication / inverse / order tables plus a
// commuting bitmap.

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "cgt/common.hpp"
#include "cgt/fplinalg.hpp"

namespace cgt {

struct PGroup;
using PGroupPtr = std::shared_ptr<const PGroup>;

// Shared data for semidirect-pair elements: the inner group and one action
// matrix per inner element.  Pairs multiply as
//   (v1, g1)(v2, g2) = (v1 + act[g1] v2, g1 g2).
struct SemidirectContext {
  PGroupPtr inner;
  std::vector<FpMatrix> act;  // indexed by inner element
  u32 p = 0;
  u32 dim = 0;
};
using SemidirectCtxPtr = std::shared_ptr<const SemidirectContext>;

class GroupElement {
 public:
  struct Perm {
    std::vector<u32> img;  // i -> img[i]
  };
  struct Mat {
    FpMatrix m;
  };
  struct Pair {
    std::vector<u32> v;  // reduced residues, length ctx->dim
    u32 inner = 0;       // index into ctx->inner
    SemidirectCtxPtr ctx;
  };

  static GroupElement perm(std::vector<u32> images);
  static GroupElement mat(FpMatrix m);
  static GroupElement pair(std::vector<u32> v, u32 inner, SemidirectCtxPtr ctx);

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  bool is_identity() const;
  bool operator==(const GroupElement& o) const { return key() == o.key(); }

  // Identity of the same backend and shape.
  GroupElement identity_like() const;

  // Canonical byte key: backend tag plus serialized payload.  Keys are the
  // deterministic element order used for coset representatives and bases.
  const std::string& key() const;

  char backend() const;  // 'P', 'M' or 'S'

  const Perm* as_perm() const { return std::get_if<Perm>(&rep_); }
  const Mat* as_mat() const { return std::get_if<Mat>(&rep_); }
  const Pair* as_pair() const { return std::get_if<Pair>(&rep_); }

 private:
  std::variant<Perm, Mat, Pair> rep_;
  mutable std::string key_;  // lazily built, element is immutable

  explicit GroupElement(std::variant<Perm, Mat, Pair> rep) : rep_(std::move(rep)) {}
};

// Fully enumerated finite p-group.  Immutable after close_group builds it.
struct PGroup {
  u32 p = 0;
  std::vector<std::pair<std::string, u32>> generators;  // label -> element index
  std::vector<GroupElement> elements;                   // index 0 is the identity
  std::vector<u32> parent;  // BFS tree: elements[i] = elements[parent[i]] * gen(via[i])
  std::vector<u32> via;     // generator slot used on the BFS step
  std::vector<std::string> keys;

  std::vector<u32> mult;       // order*order, row-major
  std::vector<u32> inv_table;
  std::vector<u32> order_table;
  std::vector<u64> comm_bits;  // commuting bitmap, comm_words() words per row

  u32 order() const { return (u32)elements.size(); }
  std::size_t comm_words() const { return (order() + 63) / 64; }

  u32 mul(u32 a, u32 b) const { return mult[(std::size_t)a * order() + b]; }
  u32 inv(u32 a) const { return inv_table[a]; }
  u32 conj(u32 g, u32 x) const { return mul(mul(g, x), inv(g)); }
  // [a,b] = a b a^-1 b^-1
  u32 comm(u32 a, u32 b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
  bool commute(u32 a, u32 b) const {
    return (comm_bits[(std::size_t)a * comm_words() + b / 64] >> (b % 64)) & 1;
  }
  u32 element_order(u32 i) const { return order_table[i]; }
  u32 power(u32 g, u64 e) const;

  std::optional<u32> find(const GroupElement& g) const;
  bool key_less(u32 a, u32 b) const { return keys[a] < keys[b]; }

  // Human-readable word in generator labels along the BFS tree, e.g. "A*B^2".
  std::string word(u32 i) const;

  std::unordered_map<std::string, u32> index;
};

// Enumerate the group generated by labeled elements.  Errors: empty or
// mixed-backend generator list, non-prime p, modulus mismatch, order not a
// power of p.  CapExceeded when the closure passes `cap` elements.
PGroupPtr close_group(u32 p, std::vector<std::pair<std::string, GroupElement>> gens,
                      u32 cap = kDefaultOrderCap);

// order of g inside S; InputError when g is not an element of S.
u32 element_order(const PGroupPtr& s, const GroupElement& g);

// Subgroup as a sorted element-index set plus a witness generating set.
struct Subgroup {
  PGroupPtr ambient;
  std::vector<u32> elems;  // sorted ascending
  std::vector<u32> gens;   // subgroup_generated(gens) == elems

  u32 order() const { return (u32)elems.size(); }
  bool contains(u32 idx) const;
  bool contains(const Subgroup& other) const;
  bool same_set(const Subgroup& other) const;        // ambient + element set
  bool proper_subset_of(const Subgroup& other) const;
};

Subgroup trivial_subgroup(const PGroupPtr& s);
Subgroup full_subgroup(const PGroupPtr& s);

// Closure of the given element indices; empty list gives the trivial
// subgroup.  Lagrange (|H| divides |S|) is asserted on every construction.
Subgroup subgroup_generated(const PGroupPtr& s, std::vector<u32> gen_idx);

// Wrap an element set that is already closed under the group operations;
// a small witness generating set is computed.  `verify` re-checks closure.
Subgroup subgroup_from_elements(const PGroupPtr& s, std::vector<u32> elems, bool verify = false);

// Greedy small generating set for a closed element set (deterministic:
// scans in index order).
std::vector<u32> reduce_generators(const PGroupPtr& s, const std::vector<u32>& elems);

Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup meet(const Subgroup& a, const Subgroup& b);

// gHg^-1 = H for every generator g of S.
bool is_normal(const PGroupPtr& s, const Subgroup& h);

// Classes sorted internally and by least member; singleton {0} comes first.
std::vector<std::vector<u32>> conjugacy_classes(const PGroupPtr& s);

// S/N as a permutation group on the cosets (left translation), with the
// projection map and the canonical coset representatives (least element key).
struct Quotient {
  PGroupPtr group;
  std::vector<u32> proj;  // element index in S -> element index in group
  std::vector<u32> rep;   // quotient element index -> representative index in S
};
Quotient quotient(const PGroupPtr& s, const Subgroup& n);

// Deterministic structural fingerprint: FNV-1a over p, the order, and the
// multiplication table with elements relabeled in canonical key order.
// Stable across runs for the same construction; not isomorphism-invariant.
u64 group_fingerprint(const PGroupPtr& s);

}  // namespace cgt

#endif  // CGT_GROUP_HPP_
