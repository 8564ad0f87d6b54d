#include "cgt/oliver.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cgt/common.hpp"

namespace cgt {

namespace {

// Fixpoint engine over the normal-subgroup lattice.  The step condition
//   C(R, Q):  [ Omega_1(C_S(R)), Q ; p-1 ] = 1
// is antitone in R: enlarging R shrinks the centralizer, hence shrinks the
// witness W = Omega_1(C_S(R)), and the iterated commutator is monotone in W.
// So a verdict "true at R0" transfers to every R containing R0, and a
// verdict "false at R1" transfers to every R contained in R1.  Verdicts are
// cached per target Q and reused through those transfers.
class AchievabilityEngine {
 public:
  explicit AchievabilityEngine(const PGroupPtr& s) : s_(s), p_(s->p) {
    SubgroupLattice lat = normal_subgroups(s);
    normals_.reserve(lat.members.size());
    for (auto& m : lat.members) normals_.push_back(std::move(m.sub));
    for (u32 i = 0; i < (u32)normals_.size(); ++i) index_[normals_[i].elems] = i;
    omega_c_.resize(normals_.size());
    verdict_.assign(normals_.size(), {});
    known_true_.assign(normals_.size(), {});
    known_false_.assign(normals_.size(), {});
    CGT_CHECK(!normals_.empty() && normals_[0].order() == 1,
              "normal lattice must start at the trivial subgroup");
  }

  u32 size() const { return (u32)normals_.size(); }
  const Subgroup& at(u32 i) const { return normals_[i]; }

  std::optional<u32> find(const Subgroup& h) const {
    auto it = index_.find(h.elems);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const Subgroup& witness(u32 r) {
    if (!omega_c_[r]) omega_c_[r] = omega1(s_, centralizer(s_, normals_[r]));
    return *omega_c_[r];
  }

  bool step_ok(u32 r, u32 q) {
    auto& vq = verdict_[q];
    if (auto it = vq.find(r); it != vq.end()) return it->second;
    bool v = false;
    bool settled = false;
    for (u32 r0 : known_true_[q]) {
      if (normals_[r].contains(normals_[r0])) {
        v = true;
        settled = true;
        break;
      }
    }
    if (!settled) {
      for (u32 r1 : known_false_[q]) {
        if (normals_[r1].contains(normals_[r])) {
          settled = true;
          break;
        }
      }
    }
    if (!settled) {
      Subgroup tail = iterated_commutator(s_, witness(r), normals_[q], p_ - 1);
      v = (tail.order() == 1);
    }
    vq.emplace(r, v);
    (v ? known_true_[q] : known_false_[q]).push_back(r);
    return v;
  }

  struct Reach {
    std::vector<char> reached;
    std::vector<u32> pred;
  };

  // Breadth-first closure from the trivial subgroup.  With a limit, only
  // subgroups of *limit are eligible (harmless for chains ending at limit:
  // every member of an ascending chain to K lies inside K anyway).
  Reach bfs(const Subgroup* limit) {
    const u32 n = size();
    Reach rc;
    rc.reached.assign(n, 0);
    rc.pred.assign(n, 0);
    rc.reached[0] = 1;
    std::vector<u32> frontier{0};
    while (!frontier.empty()) {
      std::vector<u32> next;
      for (u32 r : frontier) {
        for (u32 q = 0; q < n; ++q) {
          if (rc.reached[q]) continue;
          if (limit && !limit->contains(normals_[q])) continue;
          if (!normals_[q].contains(normals_[r])) continue;
          if (!step_ok(r, q)) continue;
          rc.reached[q] = 1;
          rc.pred[q] = r;
          next.push_back(q);
        }
      }
      frontier = std::move(next);
    }
    return rc;
  }

  QSeriesCertificate certificate(const Reach& rc, u32 target) {
    CGT_CHECK(rc.reached[target], "certificate requested for an unreached subgroup");
    std::vector<u32> path;
    for (u32 t = target;; t = rc.pred[t]) {
      path.push_back(t);
      if (t == 0) break;
      CGT_CHECK(rc.pred[t] != t, "predecessor chain must terminate at the bottom");
    }
    std::reverse(path.begin(), path.end());
    QSeriesCertificate cert;
    for (u32 i : path) cert.chain.push_back(normals_[i]);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) cert.witnesses.push_back(witness(path[i]));
    return cert;
  }

 private:
  PGroupPtr s_;
  u32 p_ = 0;
  std::vector<Subgroup> normals_;  // sorted by (order, element set)
  std::map<std::vector<u32>, u32> index_;
  std::vector<std::optional<Subgroup>> omega_c_;
  std::vector<std::unordered_map<u32, bool>> verdict_;  // per target q: r -> C(r,q)
  std::vector<std::vector<u32>> known_true_;
  std::vector<std::vector<u32>> known_false_;
};

}  // namespace

bool verify_q_series(const PGroupPtr& s, const QSeriesCertificate& cert, const Subgroup& k) {
  if (cert.chain.empty()) return false;
  if (cert.witnesses.size() + 1 != cert.chain.size()) return false;
  if (cert.chain.front().order() != 1) return false;
  if (!cert.chain.back().same_set(k)) return false;
  for (const auto& q : cert.chain) {
    if (q.ambient != s) return false;
    if (!is_normal(s, q)) return false;
  }
  for (std::size_t i = 0; i + 1 < cert.chain.size(); ++i) {
    if (!cert.chain[i + 1].contains(cert.chain[i])) return false;
    Subgroup w = omega1(s, centralizer(s, cert.chain[i]));
    if (!w.same_set(cert.witnesses[i])) return false;
    if (iterated_commutator(s, w, cert.chain[i + 1], s->p - 1).order() != 1) return false;
  }
  return true;
}

std::optional<QSeriesCertificate> admits_q_series(const PGroupPtr& s, const Subgroup& k) {
  if (k.ambient != s) throw InputError("subgroup belongs to a different group");
  AchievabilityEngine eng(s);
  auto idx = eng.find(k);
  if (!idx) throw InputError("series queries require a normal subgroup");
  auto rc = eng.bfs(&k);
  if (!rc.reached[*idx]) return std::nullopt;
  return eng.certificate(rc, *idx);
}

OliverResult oliver_subgroup(const PGroupPtr& s) {
  AchievabilityEngine eng(s);
  auto rc = eng.bfs(nullptr);
  OliverResult out;
  u32 best = 0;
  for (u32 q = 0; q < eng.size(); ++q) {
    if (!rc.reached[q]) continue;
    out.achievable.push_back(eng.at(q));
    if (eng.at(q).order() > eng.at(best).order()) best = q;
  }
  for (u32 q = 0; q < eng.size(); ++q) {
    if (rc.reached[q])
      CGT_CHECK(eng.at(best).contains(eng.at(q)),
                "reachable set must have a unique maximal member");
  }
  out.x = eng.at(best);
  out.cert = eng.certificate(rc, best);
  return out;
}

Subgroup oliver_subgroup_greedy(const PGroupPtr& s) {
  AchievabilityEngine eng(s);
  u32 cur = 0;
  for (;;) {
    Subgroup nxt = eng.at(cur);
    for (u32 q = 0; q < eng.size(); ++q) {
      if (q == cur) continue;
      if (eng.at(q).order() <= eng.at(cur).order()) continue;
      if (!eng.at(q).contains(eng.at(cur))) continue;
      if (!eng.step_ok(cur, q)) continue;
      nxt = join(nxt, eng.at(q));
    }
    if (nxt.order() == eng.at(cur).order()) return eng.at(cur);
    auto idx = eng.find(nxt);
    CGT_CHECK(idx.has_value(), "join of normal subgroups must stay in the lattice");
    CGT_CHECK(eng.at(*idx).order() > eng.at(cur).order(), "greedy chain must ascend strictly");
    cur = *idx;
  }
}

ConjectureVerdict check_oliver_conjecture(const PGroupPtr& s) {
  ConjectureVerdict v;
  v.p = s->p;
  v.order = s->order();
  v.nil_class = nilpotency_class(s);
  v.thompson = thompson_subgroup(s);
  OliverResult res = oliver_subgroup(s);
  v.oliver = res.x;
  v.cert = std::move(res.cert);
  v.holds = v.oliver.contains(v.thompson);
  if (v.oliver.order() == v.order) {
    v.quotient_class = 0;
  } else {
    v.quotient_class = nilpotency_class(quotient(s, v.oliver).group);
  }
  v.in_scope = (v.p % 2 == 1);
  v.anomaly = v.in_scope && !v.holds;
  return v;
}

InducedCenterModule induced_center_module(const PGroupPtr& s) {
  OliverResult res = oliver_subgroup(s);
  if (res.x.order() == s->order())
    throw InputError("whole group admits a series; no proper quotient acts");

  InducedCenterModule out;
  out.x = std::move(res.x);
  out.v = omega1(s, center_of(s, out.x));
  CGT_CHECK(out.v.order() > 1, "induced space must be nontrivial");

  // Greedy basis in canonical element-key order.
  std::vector<u32> ordered = out.v.elems;
  std::sort(ordered.begin(), ordered.end(), [&](u32 a, u32 b) { return s->key_less(a, b); });
  Subgroup span = trivial_subgroup(s);
  for (u32 e : ordered) {
    if (e == 0 || span.contains(e)) continue;
    out.basis.push_back(e);
    std::vector<u32> g = span.gens;
    g.push_back(e);
    span = subgroup_generated(s, g);
  }
  CGT_CHECK(span.same_set(out.v), "basis must span the induced space");
  const u32 p = s->p;
  const u32 d = (u32)out.basis.size();
  CGT_CHECK(exact_log(p, out.v.order()) == d, "basis size must match the rank");

  // Coordinates of every element of V with respect to the basis.
  std::unordered_map<u32, std::vector<u32>> coord;
  std::vector<u32> tuple(d, 0);
  for (;;) {
    u32 g = 0;
    for (u32 i = 0; i < d; ++i)
      for (u32 c = 0; c < tuple[i]; ++c) g = s->mul(g, out.basis[i]);
    CGT_CHECK(coord.emplace(g, tuple).second, "basis elements must be independent");
    u32 i = 0;
    while (i < d && ++tuple[i] == p) tuple[i++] = 0;
    if (i == d) break;
  }
  CGT_CHECK(coord.size() == out.v.order(), "coordinates must cover the space");

  out.quot = quotient(s, out.x);
  const PGroupPtr& g = out.quot.group;

  std::vector<FpMatrix> mats;
  mats.reserve(g->generators.size());
  for (const auto& gen : g->generators) {
    u32 orig = 0;
    bool found = false;
    for (const auto& sg : s->generators) {
      if (sg.first == gen.first) {
        orig = sg.second;
        found = true;
        break;
      }
    }
    CGT_CHECK(found, "quotient generators must carry the original labels");
    FpMatrix m(p, d, d);
    for (u32 c = 0; c < d; ++c) {
      u32 img = s->conj(orig, out.basis[c]);
      auto it = coord.find(img);
      CGT_CHECK(it != coord.end(), "conjugation must preserve the induced space");
      for (u32 r = 0; r < d; ++r) m.at(r, c) = it->second[r];
    }
    mats.push_back(std::move(m));
  }
  out.module = build_module(g, d, mats);
  return out;
}

}  // namespace cgt
