#include <doctest.h>

#include <algorithm>
#include <set>

#include "cgt/catalog.hpp"
#include "cgt/group.hpp"
#include "cgt/structure.hpp"

using namespace cgt;

namespace {

GroupElement cycle(u32 n, u32 start, u32 len) {
  std::vector<u32> img(n);
  for (u32 i = 0; i < n; ++i) img[i] = i;
  for (u32 i = 0; i < len; ++i) img[start + i] = start + (i + 1) % len;
  return GroupElement::perm(img);
}

}  // namespace

TEST_SUITE("group") {

TEST_CASE("cyclic closure and element orders") {
  PGroupPtr g = close_group(3, {{"g", cycle(9, 0, 9)}});
  CHECK(g->order() == 9);
  u32 gen = g->generators[0].second;
  CHECK(g->element_order(gen) == 9);
  CHECK(g->mul(gen, g->inv(gen)) == 0);
  u32 orders_3 = 0, orders_9 = 0;
  for (u32 i = 1; i < g->order(); ++i) {
    if (g->element_order(i) == 3) ++orders_3;
    if (g->element_order(i) == 9) ++orders_9;
  }
  CHECK(orders_3 == 2);
  CHECK(orders_9 == 6);
}

TEST_CASE("bad generator sets are rejected") {
  CHECK_THROWS_AS(close_group(3, {}), InputError);
  CHECK_THROWS_AS(close_group(4, {{"g", cycle(4, 0, 2)}}), InputError);  // p not prime
  CHECK_THROWS_AS(close_group(3, {{"a", cycle(3, 0, 3)}, {"a", cycle(3, 0, 3)}}),
                  InputError);  // duplicate label
  CHECK_THROWS_AS(close_group(3, {{"g", cycle(6, 0, 6)}}), InputError);  // order 6, not 3-power
  CHECK_THROWS_AS(
      close_group(3, {{"a", cycle(3, 0, 3)}, {"m", GroupElement::mat(FpMatrix::identity(3, 2))}}),
      InputError);  // mixed backends
  CHECK_THROWS_AS(close_group(3, {{"m", GroupElement::mat(FpMatrix(3, 2, 2))}}),
                  InputError);  // singular matrix
  CHECK_THROWS_AS(GroupElement::perm({0, 0, 1}), InputError);  // not a permutation
}

TEST_CASE("cap is enforced") {
  CHECK_THROWS_AS(close_group(3, {{"g", cycle(27, 0, 27)}}, 9), CapExceeded);
}

TEST_CASE("group axioms hold on the stored tables") {
  PGroupPtr s = extraspecial_exponent_p(3);
  const u32 n = s->order();
  REQUIRE(n == 27);
  for (u32 a = 0; a < n; ++a) {
    CHECK(s->mul(a, 0) == a);
    CHECK(s->mul(0, a) == a);
    CHECK(s->mul(a, s->inv(a)) == 0);
    for (u32 b = 0; b < n; ++b) {
      CHECK(s->commute(a, b) == (s->comm(a, b) == 0));
      for (u32 c = 0; c < n; ++c)
        CHECK(s->mul(s->mul(a, b), c) == s->mul(a, s->mul(b, c)));
    }
  }
}

TEST_CASE("words name elements") {
  PGroupPtr s = extraspecial_exponent_p(3);
  CHECK(s->word(0) == "1");
  for (const auto& [label, idx] : s->generators) CHECK(s->word(idx) == label);
}

TEST_CASE("find locates elements by value") {
  PGroupPtr g = close_group(3, {{"a", cycle(6, 0, 3)}, {"b", cycle(6, 3, 3)}});
  CHECK(g->order() == 9);
  CHECK(g->find(cycle(6, 0, 3)) == g->generators[0].second);
  CHECK(g->find(GroupElement::perm({1, 0, 2, 3, 4, 5})) == std::nullopt);
}

TEST_CASE("subgroups: generation, join, meet, normality") {
  PGroupPtr s = extraspecial_exponent_p(3);
  u32 x = s->generators[0].second, y = s->generators[1].second;
  Subgroup hx = subgroup_generated(s, {x});
  Subgroup hy = subgroup_generated(s, {y});
  CHECK(hx.order() == 3);
  CHECK(join(hx, hy).order() == 27);  // <x,y> = S
  CHECK(meet(hx, hy).order() == 1);
  CHECK_FALSE(is_normal(s, hx));  // [x,y] = z lies outside <x>
  CHECK(is_normal(s, center(s)));
  CHECK(is_normal(s, full_subgroup(s)));
  CHECK(trivial_subgroup(s).order() == 1);

  Subgroup from = subgroup_from_elements(s, hx.elems, true);
  CHECK(from.same_set(hx));
  std::vector<u32> not_closed{0, x, y};
  CHECK_THROWS_AS(subgroup_from_elements(s, not_closed, true), InputError);
}

TEST_CASE("Lagrange and quotient homomorphism") {
  PGroupPtr s = extraspecial_exponent_p(3);
  Subgroup z = center(s);
  REQUIRE(z.order() == 3);
  Quotient q = quotient(s, z);
  CHECK(q.group->order() == 9);
  CHECK(q.group->generators.size() == s->generators.size());
  for (std::size_t i = 0; i < s->generators.size(); ++i)
    CHECK(q.group->generators[i].first == s->generators[i].first);
  for (u32 c = 0; c < q.group->order(); ++c) CHECK(q.proj[q.rep[c]] == c);
  for (u32 a = 0; a < s->order(); ++a)
    for (u32 b = 0; b < s->order(); ++b)
      CHECK(q.proj[s->mul(a, b)] == q.group->mul(q.proj[a], q.proj[b]));
}

TEST_CASE("conjugacy classes refine cosets of the derived subgroup") {
  for (PGroupPtr s : {extraspecial_exponent_p(3), wreath_cpcp(3), unitriangular_group(4, 3)}) {
    auto classes = conjugacy_classes(s);
    std::size_t total = 0;
    for (const auto& c : classes) total += c.size();
    CHECK(total == s->order());
    CHECK(classes[0] == std::vector<u32>{0});

    Subgroup derived = commutator_subgroup(s, full_subgroup(s), full_subgroup(s));
    Quotient q = quotient(s, derived);
    for (const auto& c : classes)
      for (u32 e : c) CHECK(q.proj[e] == q.proj[c[0]]);
  }
}

TEST_CASE("extraspecial group has 11 conjugacy classes") {
  CHECK(conjugacy_classes(extraspecial_exponent_p(3)).size() == 11);
}

TEST_CASE("reduce_generators finds a small generating set") {
  PGroupPtr s = elem_abelian_group(3, 3);
  std::vector<u32> all(s->order());
  for (u32 i = 0; i < s->order(); ++i) all[i] = i;
  std::vector<u32> gens = reduce_generators(s, all);
  CHECK(gens.size() == 3);
  CHECK(subgroup_generated(s, gens).order() == 27);
}

TEST_CASE("fingerprint is stable under generator reordering") {
  GroupElement c1 = cycle(6, 0, 3), c2 = cycle(6, 3, 3);
  PGroupPtr g1 = close_group(3, {{"a", c1}, {"b", c2}});
  PGroupPtr g2 = close_group(3, {{"b", c2}, {"a", c1}});
  CHECK(group_fingerprint(g1) == group_fingerprint(g2));
  CHECK(group_fingerprint(g1) != group_fingerprint(close_group(3, {{"g", cycle(9, 0, 9)}})));
}

TEST_CASE("pair-backend groups multiply like their defining action") {
  PGroupPtr s = wreath_cpcp(3);
  CHECK(s->order() == 81);
  Subgroup base = base_subgroup(s);
  CHECK(base.order() == 27);
  CHECK(is_normal(s, base));
  // the quotient by the base is cyclic of order 3
  CHECK(quotient(s, base).group->order() == 3);
}

}  // TEST_SUITE
