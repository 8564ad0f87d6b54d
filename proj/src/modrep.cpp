#include "cgt/modrep.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "cgt/common.hpp"

namespace cgt {

namespace {

// { v : (a(h)-1) v in target for all listed h }.
FpSubspace preimage_space(const FpGModule& m, const std::vector<u32>& elems,
                          const FpSubspace& target) {
  const FpMatrix ann = annihilator(target).basis;
  if (ann.rows == 0 || elems.empty()) return FpSubspace::full(m.p, m.dim);
  FpMatrix stack(m.p, ann.rows * elems.size(), m.dim);
  const FpMatrix id = FpMatrix::identity(m.p, m.dim);
  std::size_t r0 = 0;
  for (u32 e : elems) {
    FpMatrix g = ann * (m.act.at(e) - id);
    for (std::size_t r = 0; r < g.rows; ++r)
      for (std::size_t c = 0; c < g.cols; ++c) stack.at(r0 + r, c) = g.at(r, c);
    r0 += g.rows;
  }
  return kernel(stack);
}

bool commutes_on_gens(const PGroupPtr& g, const Subgroup& h) {
  for (u32 a : h.gens)
    for (u32 b : h.gens)
      if (!g->commute(a, b)) return false;
  return true;
}

}  // namespace

FpGModule build_module(const PGroupPtr& group, u32 dim, const std::vector<FpMatrix>& gen_action) {
  if (!group) throw InputError("module requires a group");
  if (dim > kMaxDim) throw InputError("module dimension exceeds the supported maximum");
  if (gen_action.size() != group->generators.size())
    throw InputError("need exactly one action matrix per generator");
  const u32 p = group->p;
  for (const auto& m : gen_action) {
    if (m.p != p || m.rows != dim || m.cols != dim)
      throw InputError("action matrices must be square over the group's field");
    if (!is_invertible(m)) throw InputError("action matrices must be invertible");
  }

  FpGModule mod;
  mod.group = group;
  mod.p = p;
  mod.dim = dim;
  mod.gen_action = gen_action;
  mod.act.resize(group->order());
  mod.act[0] = FpMatrix::identity(p, dim);
  for (u32 i = 1; i < group->order(); ++i)
    mod.act[i] = mod.act[group->parent[i]] * gen_action[group->via[i]];

  // One-generator extension agreeing everywhere pins the homomorphism: every
  // element is a BFS word in the generators, so act[x]*A_j == act[x*g_j] for
  // all x and all slots j forces multiplicativity on all pairs.
  for (u32 x = 0; x < group->order(); ++x)
    for (std::size_t j = 0; j < gen_action.size(); ++j)
      if (mod.act[x] * gen_action[j] != mod.act[group->mul(x, group->generators[j].second)])
        throw InputError("generator matrices do not respect the group relations");
  return mod;
}

Subgroup action_kernel(const FpGModule& m) {
  std::vector<u32> elems;
  for (u32 i = 0; i < m.group->order(); ++i)
    if (m.act[i].is_identity()) elems.push_back(i);
  return subgroup_from_elements(m.group, std::move(elems), /*verify=*/true);
}

bool is_faithful(const FpGModule& m) { return action_kernel(m).order() == 1; }

FpSubspace fixed_space(const FpGModule& m, const std::vector<u32>& elems) {
  if (elems.empty()) return FpSubspace::full(m.p, m.dim);
  FpMatrix stack(m.p, (std::size_t)m.dim * elems.size(), m.dim);
  const FpMatrix id = FpMatrix::identity(m.p, m.dim);
  std::size_t r0 = 0;
  for (u32 e : elems) {
    FpMatrix d = m.act.at(e) - id;
    for (std::size_t r = 0; r < d.rows; ++r)
      for (std::size_t c = 0; c < d.cols; ++c) stack.at(r0 + r, c) = d.at(r, c);
    r0 += m.dim;
  }
  return kernel(stack);
}

std::vector<u32> quadratic_elements(const FpGModule& m) {
  std::vector<u32> out;
  const FpMatrix id = FpMatrix::identity(m.p, m.dim);
  for (u32 i = 1; i < m.group->order(); ++i) {
    FpMatrix d = m.act[i] - id;
    if ((d * d).is_zero()) out.push_back(i);
  }
  return out;
}

PSResult satisfies_ps(const FpGModule& m) {
  PSResult r;
  r.satisfies = true;
  Subgroup z = omega1(m.group, center(m.group));
  const FpMatrix id = FpMatrix::identity(m.p, m.dim);
  for (u32 e : z.elems) {
    if (e == 0) continue;
    // a(z)^p = 1 forces (a(z)-1)^p = 0 over F_p, so the degree is defined.
    u32 deg = (u32)nilpotency_degree(m.act[e] - id);
    r.witnesses.emplace_back(e, deg);
    if (deg != m.p) r.satisfies = false;
  }
  return r;
}

std::vector<OffenderReport> offender_reports(const FpGModule& m) {
  if (!is_faithful(m)) throw InputError("offender analysis requires a faithful action");
  SubgroupLattice lat = elementary_abelian_subgroups(m.group, 1);
  std::vector<OffenderReport> out;
  out.reserve(lat.members.size());
  for (auto& mem : lat.members) {
    OffenderReport r;
    r.rank = mem.rank;
    r.fixed_dim = (u32)fixed_space(m, mem.sub.gens).dim();
    r.codim = m.dim - r.fixed_dim;
    r.is_offender = (r.codim <= r.rank);
    r.e = std::move(mem.sub);
    out.push_back(std::move(r));
  }
  return out;
}

bool is_f_module(const FpGModule& m) {
  for (const auto& r : offender_reports(m))
    if (r.is_offender) return true;
  return false;
}

ReplacementPair replacement_step(const FpGModule& m, const ReplacementPair& st) {
  const Subgroup& h = st.h;
  const FpSubspace& w = st.w;
  if (h.ambient != m.group) throw InputError("subgroup belongs to a different group");
  if (h.order() <= 1) throw InputError("replacement needs a nontrivial subgroup");
  if (w.p != m.p || w.ambient != m.dim) throw InputError("subspace does not match the module");
  if (w.dim() >= m.dim) throw InputError("subspace must be proper");
  if (!commutes_on_gens(m.group, h)) throw InputError("replacement needs an abelian subgroup");

  const FpMatrix id = FpMatrix::identity(m.p, m.dim);
  for (u32 e : h.elems) {
    if (e == 0) continue;
    FpMatrix d = m.act.at(e) - id;
    if ((d * d).is_zero()) throw InputError("subgroup must act with no quadratic elements");
  }
  if (!fixed_space(m, h.gens).contains(w))
    throw InputError("subspace must be fixed pointwise by the subgroup");

  FpSubspace spI = preimage_space(m, h.elems, w);
  FpSubspace spJ = preimage_space(m, h.elems, spI);

  CGT_CHECK(spI.contains(w) && spI.dim() > w.dim(), "first layer must grow strictly");
  CGT_CHECK(spJ.contains(spI) && spJ.dim() > spI.dim(), "second layer must grow strictly");

  // First echelon-basis row of J that falls outside I.
  std::vector<u32> v0;
  for (std::size_t r = 0; r < spJ.basis.rows; ++r) {
    std::vector<u32> row(spJ.basis.cols);
    for (std::size_t c = 0; c < spJ.basis.cols; ++c) row[c] = spJ.basis.at(r, c);
    if (!spI.contains(row)) {
      v0 = std::move(row);
      break;
    }
  }
  CGT_CHECK(!v0.empty(), "second layer must offer a vector outside the first");

  // U = W + span{ (a(h)-1) v0 : h in H },  K = { h in H : (a(h)-1) v0 in W }.
  FpMatrix rows(m.p, h.order() + w.basis.rows, m.dim);
  std::size_t rr = 0;
  for (std::size_t r = 0; r < w.basis.rows; ++r, ++rr)
    for (std::size_t c = 0; c < w.basis.cols; ++c) rows.at(rr, c) = w.basis.at(r, c);
  std::vector<u32> kelems;
  for (u32 e : h.elems) {
    std::vector<u32> img = (m.act.at(e) - id).apply(v0);
    if (w.contains(img)) kelems.push_back(e);
    for (std::size_t c = 0; c < img.size(); ++c) rows.at(rr, c) = img[c];
    ++rr;
  }
  FpSubspace u = FpSubspace::span_rows(rows);
  Subgroup k = subgroup_from_elements(m.group, std::move(kelems), /*verify=*/true);

  const u32 p = m.p;
  CGT_CHECK(h.contains(k) && k.order() < h.order(), "stabilizer must drop strictly");
  CGT_CHECK(u.contains(w) && u.dim() > w.dim(), "replaced subspace must grow strictly");
  CGT_CHECK(spI.contains(u) && u.dim() < m.dim, "replaced subspace must stay proper");
  CGT_CHECK(exact_log(p, h.order()) + (u32)w.dim() == exact_log(p, k.order()) + (u32)u.dim(),
            "replacement must preserve the size measure");
  CGT_CHECK(fixed_space(m, k.gens).contains(u), "stabilizer must fix the replaced subspace");

  return ReplacementPair{std::move(k), std::move(u)};
}

ReplacementTrace replacement_descend(const FpGModule& m, const ReplacementPair& start) {
  if (start.h.order() <= 1) throw InputError("descent needs a nontrivial subgroup");
  ReplacementTrace tr;
  ReplacementPair cur = start;
  const u32 guard = exact_log(m.p, start.h.order());
  const u32 start_measure = guard + (u32)start.w.dim();
  u32 steps = 0;
  while (cur.h.order() > 1) {
    CGT_CHECK(steps < guard, "descent must terminate within log_p of the subgroup order");
    cur = replacement_step(m, cur);
    tr.steps.push_back(cur);
    ++steps;
  }
  CGT_CHECK(start_measure == (u32)cur.w.dim(), "measure must be preserved down the chain");
  CGT_CHECK(cur.w.dim() < m.dim, "final subspace must be proper");
  return tr;
}

FpSubspace invariant_span(const FpGModule& m, const FpSubspace& seed) {
  if (seed.p != m.p || seed.ambient != m.dim) throw InputError("subspace does not match the module");
  FpSubspace cur = seed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& a : m.gen_action) {
      for (std::size_t r = 0; r < cur.basis.rows; ++r) {
        std::vector<u32> row(cur.basis.cols);
        for (std::size_t c = 0; c < cur.basis.cols; ++c) row[c] = cur.basis.at(r, c);
        std::vector<u32> img = a.apply(row);
        if (!cur.contains(img)) {
          FpMatrix one(m.p, 1, m.dim);
          for (std::size_t c = 0; c < img.size(); ++c) one.at(0, c) = img[c];
          cur = subspace_sum(cur, FpSubspace::span_rows(one));
          changed = true;
        }
      }
    }
  }
  return cur;
}

namespace {

bool is_invariant(const FpGModule& m, const FpSubspace& u) {
  for (const auto& a : m.gen_action) {
    for (std::size_t r = 0; r < u.basis.rows; ++r) {
      std::vector<u32> row(u.basis.cols);
      for (std::size_t c = 0; c < u.basis.cols; ++c) row[c] = u.basis.at(r, c);
      if (!u.contains(a.apply(row))) return false;
    }
  }
  return true;
}

}  // namespace

FpGModule submodule(const FpGModule& m, const FpSubspace& u) {
  if (u.p != m.p || u.ambient != m.dim) throw InputError("subspace does not match the module");
  if (!is_invariant(m, u)) throw InputError("subspace is not invariant under the action");
  const u32 d = (u32)u.dim();
  std::vector<FpMatrix> mats;
  mats.reserve(m.gen_action.size());
  for (const auto& a : m.gen_action) {
    FpMatrix b(m.p, d, d);
    for (u32 i = 0; i < d; ++i) {
      std::vector<u32> row(u.basis.cols);
      for (std::size_t c = 0; c < u.basis.cols; ++c) row[c] = u.basis.at(i, c);
      std::vector<u32> coords = u.coordinates(a.apply(row));
      for (u32 r = 0; r < d; ++r) b.at(r, i) = coords[r];
    }
    mats.push_back(std::move(b));
  }
  return build_module(m.group, d, mats);
}

FpGModule quotient_module(const FpGModule& m, const FpSubspace& u) {
  if (u.p != m.p || u.ambient != m.dim) throw InputError("subspace does not match the module");
  if (!is_invariant(m, u)) throw InputError("subspace is not invariant under the action");

  FpMatrix probe = u.basis;
  std::vector<std::size_t> pivots;
  rref_inplace(probe, &pivots);
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.dim; ++c)
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_cols.push_back(c);
  const u32 d = (u32)free_cols.size();

  std::vector<FpMatrix> mats;
  mats.reserve(m.gen_action.size());
  for (const auto& a : m.gen_action) {
    FpMatrix b(m.p, d, d);
    for (u32 i = 0; i < d; ++i) {
      std::vector<u32> e(m.dim, 0);
      e[free_cols[i]] = 1;
      std::vector<u32> img = u.reduce(a.apply(e));
      for (std::size_t c : pivots)
        CGT_CHECK(img[c] == 0, "reduced representative must vanish on pivot columns");
      for (u32 r = 0; r < d; ++r) b.at(r, i) = img[free_cols[r]];
    }
    mats.push_back(std::move(b));
  }
  return build_module(m.group, d, mats);
}

FaithfulQuotient faithful_quotient(const FpGModule& m) {
  Subgroup ker = action_kernel(m);
  FaithfulQuotient out;
  out.quot = quotient(m.group, ker);
  std::vector<FpMatrix> mats;
  mats.reserve(out.quot.group->generators.size());
  for (const auto& gen : out.quot.group->generators) {
    bool found = false;
    for (std::size_t j = 0; j < m.group->generators.size(); ++j) {
      if (m.group->generators[j].first == gen.first) {
        mats.push_back(m.gen_action[j]);
        found = true;
        break;
      }
    }
    CGT_CHECK(found, "quotient generators must carry the original labels");
  }
  out.module = build_module(out.quot.group, m.dim, mats);
  CGT_CHECK(is_faithful(out.module), "kernel quotient must act faithfully");
  return out;
}

FpGModule restrict_module(const FpGModule& m, const Subgroup& h) {
  if (h.ambient != m.group) throw InputError("subgroup belongs to a different group");
  std::vector<std::pair<std::string, GroupElement>> gens;
  std::vector<u32> gen_idx = h.gens;
  if (gen_idx.empty()) gen_idx.push_back(0);
  for (std::size_t i = 0; i < gen_idx.size(); ++i)
    gens.emplace_back("g" + std::to_string(i + 1), m.group->elements[gen_idx[i]]);
  PGroupPtr sub = close_group(m.p, std::move(gens), m.group->order());
  CGT_CHECK(sub->order() == h.order(), "restriction must close onto the subgroup");
  std::vector<FpMatrix> mats;
  mats.reserve(gen_idx.size());
  for (u32 g : gen_idx) mats.push_back(m.act.at(g));
  return build_module(sub, m.dim, mats);
}

}  // namespace cgt
