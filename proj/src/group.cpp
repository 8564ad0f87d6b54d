#include "cgt/group.hpp"

#include <algorithm>
#include <deque>

namespace cgt {

// ---------------------------------------------------------------------------
// GroupElement

GroupElement GroupElement::perm(std::vector<u32> images) {
  std::vector<char> seen(images.size(), 0);
  for (u32 x : images) {
    if (x >= images.size() || seen[x]) throw InputError("permutation images are not a bijection");
    seen[x] = 1;
  }
  return GroupElement(Perm{std::move(images)});
}

GroupElement GroupElement::mat(FpMatrix m) {
  if (m.rows != m.cols) throw InputError("group element matrix must be square");
  return GroupElement(Mat{std::move(m)});
}

GroupElement GroupElement::pair(std::vector<u32> v, u32 inner, SemidirectCtxPtr ctx) {
  if (!ctx) throw InputError("pair element needs a semidirect context");
  if (v.size() != ctx->dim) throw InputError("pair vector has wrong dimension");
  for (auto& x : v) x %= ctx->p;
  if (inner >= ctx->inner->order()) throw InputError("pair inner index out of range");
  return GroupElement(Pair{std::move(v), inner, std::move(ctx)});
}

char GroupElement::backend() const {
  if (as_perm()) return 'P';
  if (as_mat()) return 'M';
  return 'S';
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  if (const Perm* a = as_perm()) {
    const Perm* b = o.as_perm();
    if (!b || a->img.size() != b->img.size()) throw InputError("permutation product shape mismatch");
    std::vector<u32> img(a->img.size());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = a->img[b->img[i]];
    return GroupElement(Perm{std::move(img)});
  }
  if (const Mat* a = as_mat()) {
    const Mat* b = o.as_mat();
    if (!b) throw InputError("mixed element backends in product");
    return GroupElement(Mat{a->m * b->m});
  }
  const Pair* a = as_pair();
  const Pair* b = o.as_pair();
  if (!b || a->ctx != b->ctx) throw InputError("pair elements from different semidirect contexts");
  const SemidirectContext& c = *a->ctx;
  std::vector<u32> v = c.act[a->inner].apply(b->v);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (v[i] + a->v[i]) % c.p;
  return GroupElement(Pair{std::move(v), c.inner->mul(a->inner, b->inner), a->ctx});
}

GroupElement GroupElement::inverse() const {
  if (const Perm* a = as_perm()) {
    std::vector<u32> img(a->img.size());
    for (std::size_t i = 0; i < img.size(); ++i) img[a->img[i]] = (u32)i;
    return GroupElement(Perm{std::move(img)});
  }
  if (const Mat* a = as_mat()) return GroupElement(Mat{cgt::inverse(a->m)});
  const Pair* a = as_pair();
  const SemidirectContext& c = *a->ctx;
  u32 j = c.inner->inv(a->inner);
  std::vector<u32> v = c.act[j].apply(a->v);
  for (auto& x : v) x = (c.p - x) % c.p;
  return GroupElement(Pair{std::move(v), j, a->ctx});
}

bool GroupElement::is_identity() const {
  if (const Perm* a = as_perm()) {
    for (std::size_t i = 0; i < a->img.size(); ++i)
      if (a->img[i] != i) return false;
    return true;
  }
  if (const Mat* a = as_mat()) return a->m.is_identity();
  const Pair* a = as_pair();
  if (a->inner != 0) return false;
  return std::all_of(a->v.begin(), a->v.end(), [](u32 x) { return x == 0; });
}

GroupElement GroupElement::identity_like() const {
  if (const Perm* a = as_perm()) {
    std::vector<u32> img(a->img.size());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = (u32)i;
    return GroupElement(Perm{std::move(img)});
  }
  if (const Mat* a = as_mat()) return GroupElement(Mat{FpMatrix::identity(a->m.p, a->m.rows)});
  const Pair* a = as_pair();
  return GroupElement(Pair{std::vector<u32>(a->ctx->dim, 0), 0, a->ctx});
}

static void push_u32(std::string& k, u32 x) {
  k.push_back((char)(x & 0xff));
  k.push_back((char)((x >> 8) & 0xff));
  k.push_back((char)((x >> 16) & 0xff));
  k.push_back((char)((x >> 24) & 0xff));
}

const std::string& GroupElement::key() const {
  if (!key_.empty()) return key_;
  std::string k;
  if (const Perm* a = as_perm()) {
    k.push_back('P');
    push_u32(k, (u32)a->img.size());
    for (u32 x : a->img) {
      k.push_back((char)(x & 0xff));
      k.push_back((char)((x >> 8) & 0xff));
    }
  } else if (const Mat* a = as_mat()) {
    k = a->m.key();
  } else {
    const Pair* pr = as_pair();
    k.push_back('S');
    k.push_back((char)(pr->ctx->dim & 0xff));
    for (u32 x : pr->v) k.push_back((char)(x & 0xff));
    k += pr->ctx->inner->keys[pr->inner];
  }
  key_ = std::move(k);
  return key_;
}

// ---------------------------------------------------------------------------
// close_group

static void validate_generator(u32 p, const GroupElement& g, const GroupElement& first) {
  if (g.backend() != first.backend()) throw InputError("mixed element backends in generator list");
  if (const auto* a = g.as_perm()) {
    if (a->img.size() != first.as_perm()->img.size())
      throw InputError("permutation generators act on different point counts");
  } else if (const auto* m = g.as_mat()) {
    if (m->m.p != p) throw InputError("matrix generator has wrong modulus");
    if (m->m.rows != first.as_mat()->m.rows)
      throw InputError("matrix generators have different dimensions");
    if (!is_invertible(m->m)) throw InputError("matrix generator is singular");
  } else if (const auto* s = g.as_pair()) {
    if (s->ctx->p != p) throw InputError("pair generator has wrong modulus");
    if (s->ctx != first.as_pair()->ctx)
      throw InputError("pair generators from different semidirect contexts");
  }
}

PGroupPtr close_group(u32 p, std::vector<std::pair<std::string, GroupElement>> gens, u32 cap) {
  if (!is_prime(p)) throw InputError("group modulus must be prime");
  if (gens.empty()) throw InputError("close_group needs at least one generator");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    validate_generator(p, gens[i].second, gens[0].second);
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i].first == gens[j].first) throw InputError("duplicate generator label " + gens[i].first);
  }

  auto g = std::make_shared<PGroup>();
  g->p = p;

  GroupElement id = gens[0].second.identity_like();
  g->elements.push_back(id);
  g->parent.push_back(0);
  g->via.push_back(0);
  g->keys.push_back(id.key());
  g->index.emplace(id.key(), 0);

  const std::size_t ng = gens.size();
  std::vector<std::vector<u32>> gencol;  // gencol[x][j] = x * gen_j
  for (std::size_t i = 0; i < g->elements.size(); ++i) {
    gencol.emplace_back(ng);
    for (std::size_t j = 0; j < ng; ++j) {
      GroupElement y = g->elements[i] * gens[j].second;
      const std::string& k = y.key();
      auto it = g->index.find(k);
      u32 yi;
      if (it == g->index.end()) {
        if (g->elements.size() >= cap)
          throw CapExceeded("group order exceeds cap " + std::to_string(cap));
        yi = (u32)g->elements.size();
        g->index.emplace(k, yi);
        g->keys.push_back(k);
        g->elements.push_back(std::move(y));
        g->parent.push_back((u32)i);
        g->via.push_back((u32)j);
      } else {
        yi = it->second;
      }
      gencol[i][j] = yi;
    }
  }

  const u32 n = g->order();
  {
    u32 m = n;
    while (m % p == 0) m /= p;
    if (m != 1) throw InputError("generated group order " + std::to_string(n) +
                                 " is not a power of " + std::to_string(p));
  }

  for (std::size_t j = 0; j < ng; ++j) g->generators.emplace_back(gens[j].first, gencol[0][j]);

  // Products by index: walk the BFS tree, so the whole table costs one array
  // lookup per cell instead of a backend multiplication.
  g->mult.assign((std::size_t)n * n, 0);
  for (u32 x = 0; x < n; ++x) {
    u32* row = &g->mult[(std::size_t)x * n];
    row[0] = x;
    for (u32 y = 1; y < n; ++y) row[y] = gencol[row[g->parent[y]]][g->via[y]];
  }

  g->inv_table.assign(n, 0);
  for (u32 x = 0; x < n; ++x) {
    const u32* row = &g->mult[(std::size_t)x * n];
    for (u32 y = 0; y < n; ++y)
      if (row[y] == 0) {
        g->inv_table[x] = y;
        break;
      }
  }

  g->order_table.assign(n, 1);
  for (u32 x = 1; x < n; ++x) {
    u32 cur = x, k = 1;
    while (cur != 0) {
      cur = g->mul(cur, x);
      ++k;
    }
    g->order_table[x] = k;
  }

  const std::size_t w = g->comm_words();
  g->comm_bits.assign((std::size_t)n * w, 0);
  for (u32 a = 0; a < n; ++a)
    for (u32 b = 0; b < n; ++b)
      if (g->mul(a, b) == g->mul(b, a))
        g->comm_bits[(std::size_t)a * w + b / 64] |= 1ull << (b % 64);

  return g;
}

u32 PGroup::power(u32 g, u64 e) const {
  u32 acc = 0, base = g;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return acc;
}

std::optional<u32> PGroup::find(const GroupElement& g) const {
  auto it = index.find(g.key());
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::string PGroup::word(u32 i) const {
  if (i == 0) return "1";
  std::vector<u32> slots;
  for (u32 cur = i; cur != 0; cur = parent[cur]) slots.push_back(via[cur]);
  std::reverse(slots.begin(), slots.end());
  std::string out;
  for (std::size_t k = 0; k < slots.size();) {
    std::size_t run = k;
    while (run < slots.size() && slots[run] == slots[k]) ++run;
    if (!out.empty()) out += "*";
    out += generators[slots[k]].first;
    if (run - k > 1) out += "^" + std::to_string(run - k);
    k = run;
  }
  return out;
}

u32 element_order(const PGroupPtr& s, const GroupElement& g) {
  auto idx = s->find(g);
  if (!idx) throw InputError("element does not belong to the group");
  return s->element_order(*idx);
}

// ---------------------------------------------------------------------------
// Subgroups

bool Subgroup::contains(u32 idx) const {
  return std::binary_search(elems.begin(), elems.end(), idx);
}

bool Subgroup::contains(const Subgroup& other) const {
  CGT_CHECK(ambient == other.ambient, "subgroup comparison across groups");
  return std::includes(elems.begin(), elems.end(), other.elems.begin(), other.elems.end());
}

bool Subgroup::same_set(const Subgroup& other) const {
  return ambient == other.ambient && elems == other.elems;
}

bool Subgroup::proper_subset_of(const Subgroup& other) const {
  return other.contains(*this) && elems.size() < other.elems.size();
}

Subgroup trivial_subgroup(const PGroupPtr& s) {
  return Subgroup{s, {0}, {}};
}

Subgroup full_subgroup(const PGroupPtr& s) {
  std::vector<u32> all(s->order());
  for (u32 i = 0; i < s->order(); ++i) all[i] = i;
  std::vector<u32> gens;
  for (auto& [label, idx] : s->generators)
    if (idx != 0) gens.push_back(idx);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return Subgroup{s, std::move(all), std::move(gens)};
}

static std::vector<u32> index_closure(const PGroup& g, const std::vector<u32>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<u32> work;
  work.reserve(64);
  in[0] = 1;
  work.push_back(0);
  for (std::size_t i = 0; i < work.size(); ++i)
    for (u32 s : gens) {
      u32 y = g.mul(work[i], s);
      if (!in[y]) {
        in[y] = 1;
        work.push_back(y);
      }
    }
  std::sort(work.begin(), work.end());
  return work;
}

Subgroup subgroup_generated(const PGroupPtr& s, std::vector<u32> gen_idx) {
  for (u32 i : gen_idx)
    if (i >= s->order()) throw InputError("generator index out of range");
  std::sort(gen_idx.begin(), gen_idx.end());
  gen_idx.erase(std::unique(gen_idx.begin(), gen_idx.end()), gen_idx.end());
  if (!gen_idx.empty() && gen_idx[0] == 0) gen_idx.erase(gen_idx.begin());
  std::vector<u32> elems = index_closure(*s, gen_idx);
  CGT_CHECK(s->order() % elems.size() == 0, "Lagrange violated by subgroup closure");
  return Subgroup{s, std::move(elems), std::move(gen_idx)};
}

std::vector<u32> reduce_generators(const PGroupPtr& s, const std::vector<u32>& elems) {
  std::vector<u32> gens;
  std::vector<u32> closed{0};
  for (u32 e : elems) {
    if (std::binary_search(closed.begin(), closed.end(), e)) continue;
    gens.push_back(e);
    closed = index_closure(*s, gens);
    if (closed.size() == elems.size()) break;
  }
  return gens;
}

Subgroup subgroup_from_elements(const PGroupPtr& s, std::vector<u32> elems, bool verify) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty() || elems[0] != 0) throw InputError("subgroup element set must contain the identity");
  if (verify) {
    for (u32 a : elems)
      for (u32 b : elems)
        if (!std::binary_search(elems.begin(), elems.end(), s->mul(a, b)))
          throw InputError("element set is not closed under multiplication");
  }
  std::vector<u32> gens = reduce_generators(s, elems);
  CGT_CHECK(index_closure(*s, gens).size() == elems.size(),
            "element set is not closed (closure of witnesses differs)");
  CGT_CHECK(s->order() % elems.size() == 0, "Lagrange violated by subgroup element set");
  return Subgroup{s, std::move(elems), std::move(gens)};
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  CGT_CHECK(a.ambient == b.ambient, "join across different groups");
  std::vector<u32> gens = a.gens;
  gens.insert(gens.end(), b.gens.begin(), b.gens.end());
  return subgroup_generated(a.ambient, std::move(gens));
}

Subgroup meet(const Subgroup& a, const Subgroup& b) {
  CGT_CHECK(a.ambient == b.ambient, "meet across different groups");
  std::vector<u32> common;
  std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(),
                        std::back_inserter(common));
  return subgroup_from_elements(a.ambient, std::move(common));
}

bool is_normal(const PGroupPtr& s, const Subgroup& h) {
  CGT_CHECK(s == h.ambient, "is_normal across different groups");
  for (auto& [label, g] : s->generators)
    for (u32 x : h.elems)
      if (!h.contains(s->conj(g, x))) return false;
  return true;
}

std::vector<std::vector<u32>> conjugacy_classes(const PGroupPtr& s) {
  const u32 n = s->order();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<u32>> classes;
  for (u32 i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<u32> orbit{i};
    seen[i] = 1;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (auto& [label, g] : s->generators) {
        u32 y = s->conj(g, orbit[k]);
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

Quotient quotient(const PGroupPtr& s, const Subgroup& n) {
  CGT_CHECK(s == n.ambient, "quotient across different groups");
  if (!is_normal(s, n)) throw InputError("quotient by a non-normal subgroup");

  const u32 order = s->order();
  std::vector<u32> coset_of(order, UINT32_MAX);
  std::vector<u32> least;  // least-key member per coset, in discovery order
  for (u32 x = 0; x < order; ++x) {
    if (coset_of[x] != UINT32_MAX) continue;
    u32 id = (u32)least.size();
    u32 best = x;
    for (u32 h : n.elems) {
      u32 y = s->mul(x, h);
      coset_of[y] = id;
      if (s->key_less(y, best)) best = y;
    }
    least.push_back(best);
  }

  // Canonical coset numbering: sort by representative key.
  const u32 m = (u32)least.size();
  std::vector<u32> perm(m);
  for (u32 i = 0; i < m; ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(),
            [&](u32 a, u32 b) { return s->key_less(least[a], least[b]); });
  std::vector<u32> renum(m);
  for (u32 i = 0; i < m; ++i) renum[perm[i]] = i;
  std::vector<u32> rep(m);
  for (u32 i = 0; i < m; ++i) rep[renum[i]] = least[i];
  for (u32 x = 0; x < order; ++x) coset_of[x] = renum[coset_of[x]];

  auto act_on_cosets = [&](u32 g) {
    std::vector<u32> img(m);
    for (u32 c = 0; c < m; ++c) img[c] = coset_of[s->mul(g, rep[c])];
    return GroupElement::perm(std::move(img));
  };

  std::vector<std::pair<std::string, GroupElement>> qgens;
  for (auto& [label, g] : s->generators) qgens.emplace_back(label, act_on_cosets(g));
  PGroupPtr q = close_group(s->p, std::move(qgens), order);
  CGT_CHECK(q->order() == m, "quotient order mismatch (left translation not faithful?)");

  std::vector<u32> proj(order);
  for (u32 x = 0; x < order; ++x) {
    auto idx = q->find(act_on_cosets(x));
    CGT_CHECK(idx.has_value(), "projection image missing from quotient enumeration");
    proj[x] = *idx;
  }

  // Representatives keyed by quotient element index (least-key member wins).
  std::vector<u32> qrep(m, UINT32_MAX);
  for (u32 x = 0; x < order; ++x)
    if (qrep[proj[x]] == UINT32_MAX || s->key_less(x, qrep[proj[x]])) qrep[proj[x]] = x;
  return Quotient{q, std::move(proj), std::move(qrep)};
}

u64 group_fingerprint(const PGroupPtr& s) {
  const u32 n = s->order();
  std::vector<u32> by_key(n);
  for (u32 i = 0; i < n; ++i) by_key[i] = i;
  std::sort(by_key.begin(), by_key.end(), [&](u32 a, u32 b) { return s->key_less(a, b); });
  std::vector<u32> rank(n);
  for (u32 i = 0; i < n; ++i) rank[by_key[i]] = i;
  std::vector<u32> data;
  data.reserve((std::size_t)n * n + 2);
  data.push_back(s->p);
  data.push_back(n);
  for (u32 i = 0; i < n; ++i)
    for (u32 j = 0; j < n; ++j) data.push_back(rank[s->mul(by_key[i], by_key[j])]);
  return fnv1a64(data.data(), data.size() * sizeof(u32));
}

}  // namespace cgt
