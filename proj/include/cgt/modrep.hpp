#ifndef CGT_MODREP_HPP_
#define CGT_MODREP_HPP_

// F_p G-modules for finite p-groups G: representations G -> GL_n(F_p) given
// by matrices for the generators, plus the module-theoretic predicates used
// throughout (fixed spaces, offenders, quadratic elements, the power
// structure condition on central involutions/elements of order p, and the
// replacement step that trades an offender for a smaller one).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgt/fplinalg.hpp"
#include "cgt/group.hpp"
#include "cgt/structure.hpp"

namespace cgt {

struct FpGModule {
  PGroupPtr group;
  u32 p = 0;
  u32 dim = 0;
  std::vector<FpMatrix> gen_action;  // aligned with group->generators
  std::vector<FpMatrix> act;         // per element index

  const FpMatrix& action(u32 g) const { return act.at(g); }
};

// Validates: one invertible dim x dim matrix per generator, and
// compatibility act[x] * A_j == act[x * g_j] for all elements x and
// generator slots j (which pins the whole homomorphism).
FpGModule build_module(const PGroupPtr& group, u32 dim, const std::vector<FpMatrix>& gen_action);

bool is_faithful(const FpGModule& m);

// Elements acting as the identity, as a subgroup.
Subgroup action_kernel(const FpGModule& m);

// Fixed space V^E of a set of element indices; the full space when the set
// is empty.
FpSubspace fixed_space(const FpGModule& m, const std::vector<u32>& elems);

// Elements g != 1 with (a(g) - 1)^2 = 0.  Includes non-identity elements of
// every order for which that holds.
std::vector<u32> quadratic_elements(const FpGModule& m);

// For every non-identity z in Omega_1(Z(G)): nilpotency degree of a(z) - 1
// must be exactly p.
struct PSResult {
  bool satisfies = false;
  std::vector<std::pair<u32, u32>> witnesses;  // (element, degree)
};
PSResult satisfies_ps(const FpGModule& m);

struct OffenderReport {
  Subgroup e;
  u32 rank = 0;
  u32 fixed_dim = 0;
  u32 codim = 0;
  bool is_offender = false;  // codim <= rank
};

// One report per nontrivial elementary abelian subgroup.  Requires a
// faithful module (InputError otherwise): rank vs codimension bookkeeping
// is meaningless with a kernel in the way.
std::vector<OffenderReport> offender_reports(const FpGModule& m);

// True when some nontrivial elementary abelian subgroup is an offender.
bool is_f_module(const FpGModule& m);

// --- replacement step ------------------------------------------------------

// State: a subgroup H acting on V with a subspace W <= V fixed pointwise
// under no constraint except the measure log_p|H| + dim W.  One step picks
// v0 in J \ I where
//   I = { v : (h-1)v in W for all h in H },
//   J = { v : (h-1)v in I for all h in H },
// (v0 = first echelon-basis row of J not lying in I), then
//   U = span(W u { (h-1)v0 : h in H }),  K = { h in H : (h-1)v0 in W }.
// Postconditions asserted on every call: K < H proper, W < U <= V with both
// containments strict for U facets that matter, the measure is preserved
// (log_p|H| + dim W == log_p|K| + dim U), U <= V^K, and W < I < J strictly.
struct ReplacementPair {
  Subgroup h;
  FpSubspace w;
};

// Preconditions (InputError): H nontrivial, H quadratic-free on V (no
// non-identity h in H with (a(h)-1)^2 = 0), W proper and H-invariant with
// H acting trivially on W... precisely: W <= V^H.
ReplacementPair replacement_step(const FpGModule& m, const ReplacementPair& st);

struct ReplacementTrace {
  std::vector<ReplacementPair> steps;  // states after each step; excludes start
};

// Iterate until K = 1; asserts termination within log_p|H| steps and the
// final strict inequality |H| * |W_start| < |V| ... equivalently
// log_p|H_0| + dim W_0 < dim V.
ReplacementTrace replacement_descend(const FpGModule& m, const ReplacementPair& start);

// Smallest G-invariant subspace containing the given one.
FpSubspace invariant_span(const FpGModule& m, const FpSubspace& seed);

// Module structure on an invariant subspace (InputError when not invariant).
FpGModule submodule(const FpGModule& m, const FpSubspace& u);

// Module structure on V/U for an invariant U.
FpGModule quotient_module(const FpGModule& m, const FpSubspace& u);

// The induced faithful module for group/(action kernel).
struct FaithfulQuotient {
  Quotient quot;
  FpGModule module;
};
FaithfulQuotient faithful_quotient(const FpGModule& m);

// Restriction to a subgroup: fresh group closure on the subgroup's witness
// generators, matrices carried over.
FpGModule restrict_module(const FpGModule& m, const Subgroup& h);

}  // namespace cgt

#endif  // CGT_MODREP_HPP_
