#include <doctest.h>

#include <algorithm>
#include <set>

#include "cgt/catalog.hpp"
#include "cgt/structure.hpp"
#include "oracles.hpp"

using namespace cgt;

TEST_SUITE("structure") {

TEST_CASE("center and centralizer") {
  PGroupPtr es = extraspecial_exponent_p(3);
  Subgroup z = center(es);
  CHECK(z.order() == 3);
  CHECK(centralizer(es, z).order() == 27);
  CHECK(z.same_set(commutator_subgroup(es, full_subgroup(es), full_subgroup(es))));

  Gl8Example ex = gl8_example();
  Subgroup zg = center(ex.group);
  CHECK(zg.order() == 3);
  CHECK(zg.contains(ex.d));

  // center of an abelian subgroup is the subgroup itself
  u32 x = es->generators[0].second;
  Subgroup a = join(subgroup_generated(es, {x}), z);
  CHECK(center_of(es, a).same_set(a));
}

TEST_CASE("omega1") {
  PGroupPtr c9 = cyclic_group(3, 2);
  CHECK(omega1(c9, full_subgroup(c9)).order() == 3);
  PGroupPtr c27 = cyclic_group(3, 3);
  CHECK(omega1(c27, full_subgroup(c27)).order() == 3);
  PGroupPtr es = extraspecial_exponent_p(3);
  CHECK(omega1(es, full_subgroup(es)).order() == 27);  // exponent 3
  PGroupPtr wr = wreath_cpcp(3);
  CHECK(omega1(wr, full_subgroup(wr)).order() == 81);  // generated by order-3 elements
  PGroupPtr c4 = cyclic_group(2, 2);
  CHECK(omega1(c4, full_subgroup(c4)).order() == 2);
}

TEST_CASE("commutator subgroups match the literal definition") {
  for (PGroupPtr s : {extraspecial_exponent_p(3), wreath_cpcp(3), gl8_example().group}) {
    Subgroup f = full_subgroup(s);
    CHECK(commutator_subgroup(s, f, f).same_set(commutator_subgroup_literal(s, f, f)));
    Subgroup z = center(s);
    CHECK(commutator_subgroup(s, z, f).order() == 1);
    for (u32 k : {1u, 2u, 3u})
      CHECK(iterated_commutator(s, f, f, k).same_set(iterated_commutator_literal(s, f, f, k)));
  }
}

TEST_CASE("iterated commutator of the base against the whole group") {
  Gl8Example ex = gl8_example();
  Subgroup base = base_subgroup(ex.group);
  REQUIRE(base.order() == 27);
  Subgroup two = iterated_commutator(ex.group, base, full_subgroup(ex.group), 2);
  CHECK(two.order() == 3);
  CHECK(two.contains(ex.d));
  CHECK(two.same_set(iterated_commutator_literal(ex.group, base, full_subgroup(ex.group), 2)));
}

TEST_CASE("lower central series and nilpotency class") {
  auto orders = [](const std::vector<Subgroup>& ser) {
    std::vector<u32> o;
    for (const auto& s : ser) o.push_back(s.order());
    return o;
  };
  CHECK(orders(lower_central_series(cyclic_group(3, 2))) == std::vector<u32>{9, 1});
  CHECK(orders(lower_central_series(extraspecial_exponent_p(3))) ==
        std::vector<u32>{27, 3, 1});
  CHECK(orders(lower_central_series(wreath_cpcp(3))) == std::vector<u32>{81, 9, 3, 1});
  CHECK(orders(lower_central_series(unitriangular_group(4, 3))) ==
        std::vector<u32>{729, 27, 3, 1});

  CHECK(nilpotency_class(cyclic_group(3, 1)) == 1);
  CHECK(nilpotency_class(extraspecial_exponent_p(5)) == 2);
  CHECK(nilpotency_class(wreath_cpcp(2)) == 2);
  CHECK(nilpotency_class(unitriangular_group(4, 3)) == 3);
}

TEST_CASE("normal subgroup lattice matches the brute-force oracle") {
  for (PGroupPtr s :
       {cyclic_group(3, 3), elem_abelian_group(3, 3), extraspecial_exponent_p(3), wreath_cpcp(3)}) {
    SubgroupLattice lat = normal_subgroups(s);
    std::set<std::vector<u32>> fast;
    for (const auto& m : lat.members) {
      CHECK(m.normal);
      CHECK(is_normal(s, m.sub));
      fast.insert(m.sub.elems);
    }
    CHECK(fast.size() == lat.members.size());

    std::set<std::vector<u32>> slow;
    for (const auto& elems : cgt::testing::all_subgroups_bruteforce(s))
      if (cgt::testing::is_normal_set(*s, elems)) slow.insert(elems);
    CHECK(fast == slow);
  }
}

TEST_CASE("the order-81 example group has 8 normal subgroups") {
  CHECK(normal_subgroups(gl8_example().group).members.size() == 8);
}

TEST_CASE("elementary abelian subgroups of the order-81 example") {
  Gl8Example ex = gl8_example();
  SubgroupLattice lat = elementary_abelian_subgroups(ex.group);
  u32 r1 = 0, r2 = 0, r3 = 0;
  for (const auto& m : lat.members) {
    CHECK(m.elem_abelian);
    CHECK(is_elementary_abelian(ex.group, m.sub));
    if (m.rank == 1) ++r1;
    if (m.rank == 2) ++r2;
    if (m.rank == 3) ++r3;
  }
  CHECK(lat.members.size() == 39);
  CHECK(r1 == 22);
  CHECK(r2 == 16);
  CHECK(r3 == 1);
  CHECK(elementary_abelian_subgroups(ex.group, 2).members.size() == 17);
  CHECK(elementary_abelian_subgroups(ex.group, 3).members.size() == 1);
}

TEST_CASE("subspace counts of elementary abelian groups") {
  // subgroups of F_3^r are exactly its subspaces; Gaussian binomial totals
  CHECK(elementary_abelian_subgroups(elem_abelian_group(3, 4)).members.size() == 211);
  CHECK(elementary_abelian_subgroups(elem_abelian_group(3, 5)).members.size() == 2663);
}

TEST_CASE("p-rank") {
  CHECK(p_rank(cyclic_group(3, 2)) == 1);
  CHECK(p_rank(extraspecial_exponent_p(3)) == 2);
  CHECK(p_rank(gl8_example().group) == 3);
  CHECK(p_rank(elem_abelian_group(3, 5)) == 5);
}

TEST_CASE("Thompson subgroup") {
  PGroupPtr e9 = elem_abelian_group(3, 2);
  CHECK(thompson_subgroup(e9).order() == 9);

  PGroupPtr es = extraspecial_exponent_p(3);
  CHECK(thompson_subgroup(es).order() == 27);  // the rank-2 subgroups generate S

  PGroupPtr wr = wreath_cpcp(3);
  CHECK(thompson_subgroup(wr).same_set(base_subgroup(wr)));

  Gl8Example ex = gl8_example();
  CHECK(thompson_subgroup(ex.group).same_set(base_subgroup(ex.group)));
}

}  // TEST_SUITE
