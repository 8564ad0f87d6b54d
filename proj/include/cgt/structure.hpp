#ifndef CGT_STRUCTURE_HPP_
#define CGT_STRUCTURE_HPP_

// Structural subgroup computations on an enumerated p-group: centers and
// centralizers, omega-1, iterated commutators, the lower central series,
// the normal subgroup lattice, elementary abelian subgroups and the
// Thompson subgroup.

#include <vector>

#include "cgt/group.hpp"

namespace cgt {

Subgroup center(const PGroupPtr& s);

// Elements of S commuting with every element of H.
Subgroup centralizer(const PGroupPtr& s, const Subgroup& h);

// Center of H as a subgroup of the ambient group.
Subgroup center_of(const PGroupPtr& s, const Subgroup& h);

// Subgroup generated by the elements of H of order dividing p.
Subgroup omega1(const PGroupPtr& s, const Subgroup& h);

// [A,B]: the subgroup generated by all commutators [a,b].  Computed as the
// normal closure, inside <A,B>, of the commutators of the witness
// generators; identical to the all-pairs definition (see the *_literal
// oracle below, used by the tests to pin that down).
Subgroup commutator_subgroup(const PGroupPtr& s, const Subgroup& a, const Subgroup& b);

// Left-normed iterated commutator [W,Q;k] = [...[[W,Q],Q]...,Q] (k >= 1).
Subgroup iterated_commutator(const PGroupPtr& s, const Subgroup& w, const Subgroup& q, u32 k);

// Brute-force mirrors of the two functions above: close the set of all
// elementwise commutators at every stage.  Test oracles; desk scale only.
Subgroup commutator_subgroup_literal(const PGroupPtr& s, const Subgroup& a, const Subgroup& b);
Subgroup iterated_commutator_literal(const PGroupPtr& s, const Subgroup& w, const Subgroup& q, u32 k);

// gamma_1 = S, gamma_{i+1} = [gamma_i, S]; the returned chain stops at the
// first trivial term (inclusive).  nilpotency_class(S) = #nontrivial terms.
std::vector<Subgroup> lower_central_series(const PGroupPtr& s);
u32 nilpotency_class(const PGroupPtr& s);

struct LatticeMember {
  Subgroup sub;
  bool normal = false;
  bool elem_abelian = false;
  u32 rank = 0;  // log_p order when elem_abelian
};

struct SubgroupLattice {
  PGroupPtr ambient;
  std::vector<LatticeMember> members;  // sorted by (order, element set)
};

// All normal subgroups: normal closures of conjugacy classes, closed under
// pairwise join.  Verified against the brute-force all-subgroup scan (test
// oracle) for orders <= 81.
SubgroupLattice normal_subgroups(const PGroupPtr& s);

// All elementary abelian subgroups of rank >= min_rank, by rank-by-rank
// extension of commuting order-p element sets with dedupe on element sets.
SubgroupLattice elementary_abelian_subgroups(const PGroupPtr& s, u32 min_rank = 1);

bool is_elementary_abelian(const PGroupPtr& s, const Subgroup& h);

u32 p_rank(const PGroupPtr& s);

// J(S): join of all elementary abelian subgroups of maximal rank.
Subgroup thompson_subgroup(const PGroupPtr& s);

}  // namespace cgt

#endif  // CGT_STRUCTURE_HPP_
