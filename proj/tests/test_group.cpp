#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "gtqd/group.hpp"
#include "gtqd/polyhedral.hpp"

using namespace gtqd;

namespace {

FiniteGroup cyclic_table(int m) {
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[a][b] = (a + b) % m;
  return FiniteGroup::from_table(std::move(t));
}

}  // namespace

TEST_CASE("table constructor validates identity, inverses, associativity") {
  FiniteGroup Z6 = cyclic_table(6);
  CHECK(Z6.order() == 6);
  CHECK(Z6.is_abelian());
  CHECK(Z6.exponent() == 6);
  CHECK(Z6.inv(2) == 4);
  CHECK(Z6.element_order(2) == 3);
  CHECK(Z6.power(5, -1) == 1);

  std::vector<std::vector<int>> bad{{0, 1}, {1, 1}};
  CHECK_THROWS_AS(FiniteGroup::from_table(bad), std::invalid_argument);
}

TEST_CASE("class decomposition partitions the group with verified witnesses") {
  FiniteGroup G = build_su2_group({SU2Family::BinaryDihedral, 3});
  int total = 0;
  std::set<int> seen;
  for (const ConjugacyClass& c : G.classes()) {
    total += (int)c.members.size();
    CHECK(c.representative == c.members.front());
    for (size_t i = 0; i < c.members.size(); ++i) {
      CHECK(!seen.count(c.members[i]));
      seen.insert(c.members[i]);
      CHECK(G.conjugate(c.representative, c.conjugators[i]) == c.members[i]);
      CHECK(G.class_of(c.members[i]) == G.class_of(c.representative));
    }
  }
  CHECK(total == G.order());
  /* dicyclic group of order 12 has 6 classes */
  CHECK(G.classes().size() == 6);
}

TEST_CASE("subgroup closure, center, normality on the dicyclic group of order 12") {
  FiniteGroup G = build_su2_group({SU2Family::BinaryDihedral, 3});
  int x = *G.element_by_label("x");
  int y = *G.element_by_label("y");
  CHECK(G.element_order(x) == 6);
  CHECK(G.element_order(y) == 4);

  Subgroup rot3 = subgroup_from(G, {G.mul(x, x)});
  CHECK(rot3.order() == 3);
  CHECK(is_normal(G, rot3));

  Subgroup s4 = subgroup_from(G, {y});
  CHECK(s4.order() == 4);
  CHECK(!is_normal(G, s4));

  Subgroup Z = center(G);
  CHECK(Z.order() == 2);
  CHECK(central_involutions(G).order() == 2);
  CHECK(Z.elements == central_involutions(G).elements);

  CHECK(trivial_subgroup(G).order() == 1);
  CHECK(full_subgroup(G).order() == 12);
}

TEST_CASE("central involution subgroup of a cyclic group") {
  FiniteGroup Z6 = build_su2_group({SU2Family::Cyclic, 6});
  CHECK(center(Z6).order() == 6);
  Subgroup invs = central_involutions(Z6);
  CHECK(invs.order() == 2);
  CHECK(Z6.element_order(invs.elements[1]) == 2);

  FiniteGroup Z5 = build_su2_group({SU2Family::Cyclic, 5});
  CHECK(central_involutions(Z5).order() == 1);
}

TEST_CASE("quotient by the center projects the dicyclic group onto S3") {
  FiniteGroup G = build_su2_group({SU2Family::BinaryDihedral, 3});
  QuotientMap q = quotient(G, center(G));
  CHECK(q.target.order() == 6);
  CHECK(!q.target.is_abelian());
  CHECK(q.target.classes().size() == 3);
  CHECK(q.section[0] == 0);
  CHECK(q.projection[0] == 0);
  /* section then projection is the identity on the target */
  for (int t = 0; t < q.target.order(); ++t) CHECK(q.projection[q.section[t]] == t);
  /* every fiber has |N| elements */
  std::vector<int> fiber(q.target.order(), 0);
  for (int g = 0; g < G.order(); ++g) ++fiber[q.projection[g]];
  for (int c : fiber) CHECK(c == 2);

  CHECK_THROWS_AS(quotient(G, subgroup_from(G, {*G.element_by_label("y")})),
                  std::invalid_argument);
}

TEST_CASE("stabilizers in the source contain the normal subgroup") {
  FiniteGroup G = build_su2_group({SU2Family::BinaryOctahedral, 0});
  QuotientMap q = quotient(G, center(G));
  for (const ConjugacyClass& c : q.target.classes()) {
    Subgroup st = stabilizer_in_source(q, c.representative);
    for (int n : q.normal.elements) CHECK(st.contains(n));
    /* orbit-stabilizer: |orbit| * |stab| = |G| */
    CHECK((int)c.members.size() * st.order() == G.order());
  }
}

TEST_CASE("materialized subgroups keep labels and matrices") {
  FiniteGroup G = build_su2_group({SU2Family::BinaryDihedral, 3});
  Subgroup rot = subgroup_from(G, {*G.element_by_label("x")});
  std::vector<int> to_parent, to_local;
  FiniteGroup H = materialize(rot, &to_parent, &to_local);
  CHECK(H.order() == 6);
  CHECK(H.is_abelian());
  CHECK(H.has_matrix_rep());
  for (int i = 0; i < H.order(); ++i) {
    CHECK(to_local[to_parent[i]] == i);
    CHECK(H.label(i) == G.label(to_parent[i]));
    CHECK(H.matrix(i) == G.matrix(to_parent[i]));
  }
  /* multiplication commutes with the inclusion */
  for (int a = 0; a < H.order(); ++a)
    for (int b = 0; b < H.order(); ++b)
      CHECK(to_parent[H.mul(a, b)] == G.mul(to_parent[a], to_parent[b]));
}

TEST_CASE("generator word labels compress runs") {
  FiniteGroup G = build_su2_group({SU2Family::BinaryDihedral, 3});
  CHECK(G.label(0) == "e");
  int x = *G.element_by_label("x");
  CHECK(*G.element_by_label("x2") == G.mul(x, x));
  CHECK(G.element_by_label("g3").has_value());
  CHECK(!G.element_by_label("nope").has_value());
}

TEST_CASE("closure cap aborts runaway generation") {
  FiniteGroup G = build_su2_group({SU2Family::Cyclic, 12});
  CHECK_THROWS_WITH_AS(
      (void)FiniteGroup::generate({G.matrix(1)}, {"x"}, 5),
      doctest::Contains("not closed within bound"), std::runtime_error);
}
