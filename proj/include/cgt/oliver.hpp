#ifndef CGT_OLIVER_HPP_
#define CGT_OLIVER_HPP_

// The Oliver subgroup X(S) of a finite p-group: the largest normal subgroup
// reached by a chain 1 = Q_0 <= Q_1 <= ... <= Q_n, all normal in S, where
// every step satisfies the vanishing condition
//     [ Omega_1(C_S(Q_{i-1})), Q_i ; p-1 ] = 1.
// Ground truth is a breadth-first fixpoint over the normal subgroup
// lattice; a greedy variant (extend by the join of all admissible next
// steps) is exposed for cross-checking.

#include <optional>
#include <vector>

#include "cgt/group.hpp"
#include "cgt/modrep.hpp"
#include "cgt/structure.hpp"

namespace cgt {

// Chain of normal subgroups from the trivial group up to K, together with
// the witness W_i = Omega_1(C_S(chain[i])) used on the step to chain[i+1].
struct QSeriesCertificate {
  std::vector<Subgroup> chain;
  std::vector<Subgroup> witnesses;  // size chain.size()-1
};

// Re-derive every step of the certificate; false when anything fails.
bool verify_q_series(const PGroupPtr& s, const QSeriesCertificate& cert, const Subgroup& k);

// Certificate for K if a chain exists; nullopt otherwise.  K must be normal.
std::optional<QSeriesCertificate> admits_q_series(const PGroupPtr& s, const Subgroup& k);

struct OliverResult {
  Subgroup x;
  QSeriesCertificate cert;
  std::vector<Subgroup> achievable;  // all reachable normal subgroups, sorted
};

// X(S) plus its certificate.  Asserts the achievable set has a unique
// maximal member (anything else indicates a bug and throws).
OliverResult oliver_subgroup(const PGroupPtr& s);

// Greedy chain: repeatedly extend by the join of all admissible next steps.
// Equal to oliver_subgroup(s).x on every catalog group (tested property).
Subgroup oliver_subgroup_greedy(const PGroupPtr& s);

struct ConjectureVerdict {
  u32 p = 0;
  u32 order = 0;
  u32 nil_class = 0;
  Subgroup thompson;
  Subgroup oliver;
  QSeriesCertificate cert;
  bool holds = false;       // J(S) <= X(S)
  u32 quotient_class = 0;   // class of S / X(S); 0 when X(S) = S
  bool in_scope = false;    // p odd
  bool anomaly = false;     // holds failed for odd p (class <= 2 would break
                            // a proved statement; any odd-p failure is news)
};

ConjectureVerdict check_oliver_conjecture(const PGroupPtr& s);

// The conjugation action of G = S/X(S) on V = Omega_1(Z(X(S))) as an
// F_p G-module.  The basis of V is chosen greedily in canonical element-key
// order.  InputError when X(S) = S (no proper quotient to act).
struct InducedCenterModule {
  Subgroup x;
  Subgroup v;               // Omega_1(Z(X(S))) as a subgroup of S
  std::vector<u32> basis;   // element indices in S forming an F_p-basis of v
  Quotient quot;
  FpGModule module;
};

InducedCenterModule induced_center_module(const PGroupPtr& s);

}  // namespace cgt

#endif  // CGT_OLIVER_HPP_
