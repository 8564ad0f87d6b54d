#include "cgt/structure.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace cgt {

namespace {

// Indicator bitset over element indices, word layout matching PGroup::comm_bits rows.
std::vector<u64> indicator(const PGroup& g, const std::vector<u32>& elems) {
  std::vector<u64> bits(g.comm_words(), 0);
  for (u32 e : elems) bits[e / 64] |= 1ull << (e % 64);
  return bits;
}

// Does x commute with every element flagged in `bits`?
bool commutes_with_all(const PGroup& g, u32 x, const std::vector<u64>& bits) {
  const u64* row = &g.comm_bits[(std::size_t)x * g.comm_words()];
  for (std::size_t w = 0; w < bits.size(); ++w)
    if ((row[w] & bits[w]) != bits[w]) return false;
  return true;
}

struct VecHash {
  std::size_t operator()(const std::vector<u32>& v) const {
    return (std::size_t)fnv1a64(v.data(), v.size() * sizeof(u32));
  }
};

}  // namespace

Subgroup center(const PGroupPtr& s) {
  return centralizer(s, full_subgroup(s));
}

Subgroup centralizer(const PGroupPtr& s, const Subgroup& h) {
  CGT_CHECK(s == h.ambient, "centralizer across different groups");
  std::vector<u64> bits = indicator(*s, h.elems);
  std::vector<u32> out;
  for (u32 x = 0; x < s->order(); ++x)
    if (commutes_with_all(*s, x, bits)) out.push_back(x);
  return subgroup_from_elements(s, std::move(out));
}

Subgroup center_of(const PGroupPtr& s, const Subgroup& h) {
  std::vector<u64> bits = indicator(*s, h.elems);
  std::vector<u32> out;
  for (u32 x : h.elems)
    if (commutes_with_all(*s, x, bits)) out.push_back(x);
  return subgroup_from_elements(s, std::move(out));
}

Subgroup omega1(const PGroupPtr& s, const Subgroup& h) {
  std::vector<u32> gens;
  for (u32 x : h.elems)
    if (x != 0 && s->element_order(x) == s->p) gens.push_back(x);
  Subgroup r = subgroup_generated(s, std::move(gens));
  CGT_CHECK(h.contains(r), "omega1 escaped the input subgroup");
  if (r.gens.size() > 8) r.gens = reduce_generators(s, r.elems);
  return r;
}

Subgroup commutator_subgroup(const PGroupPtr& s, const Subgroup& a, const Subgroup& b) {
  CGT_CHECK(s == a.ambient && s == b.ambient, "commutator across different groups");
  std::vector<u32> seeds;
  for (u32 x : a.gens)
    for (u32 y : b.gens) {
      u32 c = s->comm(x, y);
      if (c != 0) seeds.push_back(c);
    }
  std::vector<u32> conjugators = a.gens;
  conjugators.insert(conjugators.end(), b.gens.begin(), b.gens.end());

  Subgroup x = subgroup_generated(s, seeds);
  bool changed = true;
  while (changed) {
    changed = false;
    for (u32 t : conjugators) {
      for (u32 e : x.elems) {
        u32 y = s->conj(t, e);
        if (!x.contains(y)) {
          seeds.push_back(y);
          x = subgroup_generated(s, seeds);
          changed = true;
        }
      }
    }
  }
  if (x.gens.size() > 8) x.gens = reduce_generators(s, x.elems);
  return x;
}

Subgroup iterated_commutator(const PGroupPtr& s, const Subgroup& w, const Subgroup& q, u32 k) {
  if (k == 0) throw InputError("iterated commutator needs k >= 1");
  Subgroup x = commutator_subgroup(s, w, q);
  for (u32 i = 1; i < k; ++i) {
    if (x.order() == 1) break;  // stays trivial from here on
    x = commutator_subgroup(s, x, q);
  }
  return x;
}

Subgroup commutator_subgroup_literal(const PGroupPtr& s, const Subgroup& a, const Subgroup& b) {
  std::vector<u32> gens;
  for (u32 x : a.elems)
    for (u32 y : b.elems) {
      u32 c = s->comm(x, y);
      if (c != 0) gens.push_back(c);
    }
  return subgroup_generated(s, std::move(gens));
}

Subgroup iterated_commutator_literal(const PGroupPtr& s, const Subgroup& w, const Subgroup& q,
                                     u32 k) {
  if (k == 0) throw InputError("iterated commutator needs k >= 1");
  Subgroup x = commutator_subgroup_literal(s, w, q);
  for (u32 i = 1; i < k; ++i) x = commutator_subgroup_literal(s, x, q);
  return x;
}

std::vector<Subgroup> lower_central_series(const PGroupPtr& s) {
  std::vector<Subgroup> series{full_subgroup(s)};
  while (series.back().order() > 1) {
    Subgroup next = commutator_subgroup(s, series.back(), series.front());
    CGT_CHECK(series.back().contains(next) && next.order() < series.back().order(),
              "lower central series failed to descend strictly");
    series.push_back(std::move(next));
  }
  return series;
}

u32 nilpotency_class(const PGroupPtr& s) {
  if (s->order() == 1) return 0;
  return (u32)lower_central_series(s).size() - 1;
}

static LatticeMember make_member(const PGroupPtr& s, Subgroup sub, bool normal_known,
                                 bool normal_val) {
  LatticeMember m;
  m.normal = normal_known ? normal_val : is_normal(s, sub);
  m.elem_abelian = is_elementary_abelian(s, sub);
  m.rank = m.elem_abelian ? exact_log(s->p, sub.order()) : 0;
  m.sub = std::move(sub);
  return m;
}

static void sort_members(std::vector<LatticeMember>& ms) {
  std::sort(ms.begin(), ms.end(), [](const LatticeMember& a, const LatticeMember& b) {
    if (a.sub.order() != b.sub.order()) return a.sub.order() < b.sub.order();
    return a.sub.elems < b.sub.elems;
  });
}

SubgroupLattice normal_subgroups(const PGroupPtr& s) {
  std::unordered_map<std::vector<u32>, Subgroup, VecHash> known;
  std::vector<const Subgroup*> work;

  auto add = [&](Subgroup g) -> bool {
    auto [it, fresh] = known.emplace(g.elems, std::move(g));
    if (fresh) work.push_back(&it->second);
    return fresh;
  };

  // Atoms: subgroups generated by single conjugacy classes.  A class is a
  // conjugation-invariant set, so its closure is normal; every normal
  // subgroup is the join of the atoms of the classes it contains.
  std::unordered_map<std::vector<u32>, Subgroup, VecHash> atom_map;
  for (auto& cls : conjugacy_classes(s)) {
    if (cls.size() == 1 && cls[0] == 0) continue;
    Subgroup a = subgroup_generated(s, cls);
    if (a.gens.size() > 8) a.gens = reduce_generators(s, a.elems);
    atom_map.emplace(a.elems, std::move(a));
  }
  std::vector<Subgroup> atoms;
  for (auto& [k, a] : atom_map) atoms.push_back(a);
  std::sort(atoms.begin(), atoms.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.elems < b.elems;
  });

  add(trivial_subgroup(s));
  for (const Subgroup& a : atoms) add(a);

  for (std::size_t i = 0; i < work.size(); ++i) {
    const Subgroup cur = *work[i];  // copy: `known` may rehash as we insert
    for (const Subgroup& a : atoms) {
      if (cur.contains(a)) continue;
      add(join(cur, a));
    }
  }

  SubgroupLattice lat;
  lat.ambient = s;
  for (auto& [k, sub] : known) {
    CGT_CHECK(is_normal(s, sub), "conjugacy-class join closure produced a non-normal subgroup");
    lat.members.push_back(make_member(s, sub, true, true));
  }
  sort_members(lat.members);
  return lat;
}

bool is_elementary_abelian(const PGroupPtr& s, const Subgroup& h) {
  for (u32 x : h.elems) {
    if (x != 0 && s->element_order(x) != s->p) return false;
    for (u32 y : h.elems)
      if (!s->commute(x, y)) return false;
  }
  return true;
}

SubgroupLattice elementary_abelian_subgroups(const PGroupPtr& s, u32 min_rank) {
  const u32 p = s->p;
  std::vector<u32> order_p;  // all elements of order exactly p
  for (u32 x = 1; x < s->order(); ++x)
    if (s->element_order(x) == p) order_p.push_back(x);

  struct Node {
    std::vector<u32> elems;  // sorted
    std::vector<u32> gens;
  };
  std::unordered_set<std::vector<u32>, VecHash> seen;
  std::vector<std::vector<Node>> levels(1);  // levels[k] = rank k+1 nodes

  for (u32 x : order_p) {
    std::vector<u32> cyc{0};
    for (u32 c = x; c != 0; c = s->mul(c, x)) cyc.push_back(c);
    std::sort(cyc.begin(), cyc.end());
    if (seen.insert(cyc).second) levels[0].push_back(Node{std::move(cyc), {x}});
  }

  while (!levels.back().empty()) {
    const auto& prev = levels.back();
    std::vector<Node> next;
    for (const Node& e : prev) {
      std::vector<u64> bits = indicator(*s, e.elems);
      for (u32 x : order_p) {
        if (std::binary_search(e.elems.begin(), e.elems.end(), x)) continue;
        if (!commutes_with_all(*s, x, bits)) continue;
        // x has order p, commutes with E elementwise and x is outside E, so
        // <E,x> = E + xE + ... + x^(p-1)E is elementary abelian of rank+1.
        std::vector<u32> bigger = e.elems;
        bigger.reserve(e.elems.size() * p);
        u32 xp = x;
        for (u32 j = 1; j < p; ++j) {
          for (u32 y : e.elems) bigger.push_back(s->mul(xp, y));
          xp = s->mul(xp, x);
        }
        std::sort(bigger.begin(), bigger.end());
        CGT_CHECK(bigger.size() == e.elems.size() * p, "elementary abelian extension collapsed");
        if (seen.insert(bigger).second) {
          std::vector<u32> gens = e.gens;
          gens.push_back(x);
          next.push_back(Node{std::move(bigger), std::move(gens)});
        }
      }
    }
    levels.push_back(std::move(next));
  }

  SubgroupLattice lat;
  lat.ambient = s;
  if (min_rank == 0) lat.members.push_back(make_member(s, trivial_subgroup(s), false, false));
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (k + 1 < min_rank) continue;
    for (const Node& n : levels[k]) {
      Subgroup sub{s, n.elems, n.gens};
      LatticeMember m = make_member(s, std::move(sub), false, false);
      CGT_CHECK(m.elem_abelian && m.rank == k + 1, "elementary abelian enumeration inconsistent");
      lat.members.push_back(std::move(m));
    }
  }
  sort_members(lat.members);
  return lat;
}

u32 p_rank(const PGroupPtr& s) {
  u32 best = 0;
  for (auto& m : elementary_abelian_subgroups(s, 1).members) best = std::max(best, m.rank);
  return best;
}

Subgroup thompson_subgroup(const PGroupPtr& s) {
  SubgroupLattice lat = elementary_abelian_subgroups(s, 1);
  u32 best = 0;
  for (auto& m : lat.members) best = std::max(best, m.rank);
  if (best == 0) return trivial_subgroup(s);  // trivial group
  std::vector<u32> gens;
  for (auto& m : lat.members)
    if (m.rank == best) gens.insert(gens.end(), m.sub.gens.begin(), m.sub.gens.end());
  Subgroup j = subgroup_generated(s, std::move(gens));
  if (j.gens.size() > 8) j.gens = reduce_generators(s, j.elems);
  return j;
}

}  // namespace cgt
