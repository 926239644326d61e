#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "gtqd/chartab.hpp"
#include "gtqd/cocycle.hpp"
#include "gtqd/polyhedral.hpp"

using namespace gtqd;

namespace {

FiniteGroup cyclic_group(int n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return FiniteGroup::from_table(table);
}

std::vector<long> sorted_degrees(const CharacterTable& T) {
  std::vector<long> d = T.degrees;
  std::sort(d.begin(), d.end());
  return d;
}

bool table_has_row(const CharacterTable& T, const std::vector<Cyclotomic>& row) {
  for (const auto& r : T.rows) {
    bool same = true;
    for (size_t c = 0; c < row.size() && same; ++c) same = r[c] == row[c];
    if (same) return true;
  }
  return false;
}

/* the trace character of the defining 2x2 matrices, as a class function */
std::vector<Cyclotomic> trace_character(const FiniteGroup& G) {
  std::vector<Cyclotomic> out;
  for (const ConjugacyClass& c : G.classes()) out.push_back(G.matrix(c.representative).trace());
  return out;
}

} // namespace

TEST_CASE("two-element group has the sign table") {
  CharacterTable T = character_table(cyclic_group(2));
  REQUIRE(T.rows.size() == 2);
  CHECK(T.rows[0][0] == Cyclotomic::one());
  CHECK(T.rows[0][1] == Cyclotomic::one());
  CHECK(T.rows[1][0] == Cyclotomic::one());
  CHECK(T.rows[1][1] == -Cyclotomic::one());
}

TEST_CASE("cyclic group of order three lists both primitive root rows") {
  CharacterTable T = character_table(cyclic_group(3));
  REQUIRE(T.rows.size() == 3);
  Cyclotomic z = Cyclotomic::root(3, 1);
  Cyclotomic z2 = Cyclotomic::root(3, 2);
  CHECK(table_has_row(T, {Cyclotomic::one(), z, z2}));
  CHECK(table_has_row(T, {Cyclotomic::one(), z2, z}));
  CHECK(T.degrees == std::vector<long>({1, 1, 1}));
}

TEST_CASE("trivial group") {
  CharacterTable T = character_table(cyclic_group(1));
  REQUIRE(T.rows.size() == 1);
  CHECK(T.rows[0][0] == Cyclotomic::one());
}

TEST_CASE("quaternion group has five irreps with one of degree two") {
  FiniteGroup Q8 = build_su2_group({SU2Family::BinaryDihedral, 2});
  CharacterTable T = character_table(Q8);
  CHECK(sorted_degrees(T) == std::vector<long>({1, 1, 1, 1, 2}));
  /* the degree-2 row is the defining representation: 2 at 1, -2 at -1, 0 else */
  const auto& row = T.rows[4];
  REQUIRE(T.degrees[4] == 2);
  Cyclotomic two = Cyclotomic::from_rational(Rational(2));
  int minus_ones = 0, zeros = 0;
  for (size_t c = 0; c < row.size(); ++c) {
    if (row[c] == two) CHECK(c == 0);
    if (row[c] == -two) ++minus_ones;
    if (row[c] == Cyclotomic::zero()) ++zeros;
  }
  CHECK(minus_ones == 1);
  CHECK(zeros == 3);
}

TEST_CASE("exceptional group degree patterns") {
  CharacterTable bt = character_table(build_su2_group({SU2Family::BinaryTetrahedral, 0}));
  CHECK(sorted_degrees(bt) == std::vector<long>({1, 1, 1, 2, 2, 2, 3}));
  CharacterTable bo = character_table(build_su2_group({SU2Family::BinaryOctahedral, 0}));
  CHECK(sorted_degrees(bo) == std::vector<long>({1, 1, 2, 2, 2, 3, 3, 4}));
  CharacterTable bi = character_table(build_su2_group({SU2Family::BinaryIcosahedral, 0}));
  CHECK(sorted_degrees(bi) == std::vector<long>({1, 2, 2, 3, 3, 4, 4, 5, 6}));
}

TEST_CASE("symmetric group on three letters") {
  FiniteGroup BD3 = build_su2_group({SU2Family::BinaryDihedral, 3});
  QuotientMap q = quotient(BD3, center(BD3));
  CharacterTable T = character_table(q.target);
  CHECK(sorted_degrees(T) == std::vector<long>({1, 1, 2}));
  /* the degree-2 row takes values 2, -1, 0 on classes of sizes 1, 2, 3 */
  const auto& classes = T.group.classes();
  for (size_t c = 0; c < classes.size(); ++c) {
    size_t sz = classes[c].members.size();
    const Cyclotomic& v = T.rows[2][c];
    if (sz == 1) CHECK(v == Cyclotomic::from_rational(Rational(2)));
    if (sz == 2) CHECK(v == -Cyclotomic::one());
    if (sz == 3) CHECK(v == Cyclotomic::zero());
  }
}

TEST_CASE("defining matrix trace appears as a table row") {
  /* irreducible for the nonabelian subgroups */
  for (SU2GroupId id : {SU2GroupId{SU2Family::BinaryDihedral, 3},
                        SU2GroupId{SU2Family::BinaryTetrahedral, 0},
                        SU2GroupId{SU2Family::BinaryOctahedral, 0},
                        SU2GroupId{SU2Family::BinaryIcosahedral, 0}}) {
    FiniteGroup G = build_su2_group(id);
    CharacterTable T = character_table(G);
    CHECK(table_has_row(T, trace_character(G)));
  }
  /* for a cyclic group it splits as the sum of two degree-1 rows */
  FiniteGroup Z6 = build_su2_group({SU2Family::Cyclic, 6});
  CharacterTable T = character_table(Z6);
  std::vector<Cyclotomic> tr = trace_character(Z6);
  bool split = false;
  for (int i = 0; i < T.irrep_count() && !split; ++i)
    for (int j = 0; j < T.irrep_count() && !split; ++j) {
      bool same = true;
      for (size_t c = 0; c < tr.size() && same; ++c)
        same = T.rows[i][c] + T.rows[j][c] == tr[c];
      split = same;
    }
  CHECK(split);
}

TEST_CASE("table construction is deterministic") {
  FiniteGroup BO = build_su2_group({SU2Family::BinaryOctahedral, 0});
  CharacterTable A = character_table(BO);
  CharacterTable B = character_table(BO);
  REQUIRE(A.rows.size() == B.rows.size());
  for (size_t i = 0; i < A.rows.size(); ++i)
    for (size_t c = 0; c < A.rows[i].size(); ++c) CHECK(A.rows[i][c] == B.rows[i][c]);
}

TEST_CASE("ordinary inner products") {
  FiniteGroup Z3 = cyclic_group(3);
  CharacterTable T = character_table(Z3);
  CHECK(inner_product_ordinary(Z3, T.rows[0], T.rows[0]) == Rational(1));
  CHECK(inner_product_ordinary(Z3, T.rows[0], T.rows[1]) == Rational(0));
  CHECK(inner_product_ordinary(Z3, T.rows[1], T.rows[2]) == Rational(0));
  /* regular character (3,0,0) contains the trivial character once */
  std::vector<Cyclotomic> reg = {Cyclotomic::from_rational(Rational(3)), Cyclotomic::zero(),
                                 Cyclotomic::zero()};
  CHECK(inner_product_ordinary(Z3, reg, T.rows[0]) == Rational(1));
}

TEST_CASE("restriction of the defining character") {
  FiniteGroup BO = build_su2_group({SU2Family::BinaryOctahedral, 0});
  std::vector<Cyclotomic> W = canonical_w_values(BO);

  int g8 = -1;
  for (int g = 0; g < BO.order(); ++g)
    if (BO.element_order(g) == 8) {
      g8 = g;
      break;
    }
  REQUIRE(g8 >= 0);
  Subgroup S = subgroup_from(BO, {g8});
  REQUIRE(S.order() == 8);
  std::vector<int> to_parent, to_local;
  FiniteGroup H = materialize(S, &to_parent, &to_local);
  std::vector<Cyclotomic> res = restrict_class_function(BO, W, H, to_parent);

  Cyclotomic want = Cyclotomic::root(8, 1) + Cyclotomic::root(8, 7);
  bool found = false;
  for (int h = 0; h < H.order(); ++h)
    if (H.element_order(h) == 8 && res[H.class_of(h)] == want) found = true;
  CHECK(found);

  /* restriction to the trivial subgroup is the constant 2 */
  Subgroup one = trivial_subgroup(BO);
  std::vector<int> tp, tl;
  FiniteGroup T1 = materialize(one, &tp, &tl);
  std::vector<Cyclotomic> r1 = restrict_class_function(BO, W, T1, tp);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0] == Cyclotomic::from_rational(Rational(2)));

  /* the trivial character restricts to the trivial character */
  CharacterTable T = character_table(BO);
  std::vector<Cyclotomic> rt = restrict_class_function(BO, T.rows[0], H, to_parent);
  for (const Cyclotomic& v : rt) CHECK(v == Cyclotomic::one());
}

TEST_CASE("twisted table with the trivial cochain is the plain table") {
  FiniteGroup Q8 = build_su2_group({SU2Family::BinaryDihedral, 2});
  TwistedCharacterTable T = twisted_table(Q8, [](int, int) { return 0; }, 1);
  CHECK(T.mu_order == 1);
  REQUIRE(T.rows.size() == 5);
  for (size_t i = 0; i < T.rows.size(); ++i)
    for (int h = 0; h < Q8.order(); ++h) {
      CHECK(T.rows[i][h] == T.base.value((int)i, h));
    }
}

TEST_CASE("twisting by a known coboundary is recovered up to reordering") {
  FiniteGroup Q8 = build_su2_group({SU2Family::BinaryDihedral, 2});
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> pick(0, 11);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<long> nu(Q8.order());
    nu[0] = 0; /* normalized */
    for (int h = 1; h < Q8.order(); ++h) nu[h] = pick(rng);
    auto theta = [&](int x, int y) {
      return ((nu[x] + nu[y] - nu[Q8.mul(x, y)]) % 12 + 12) % 12;
    };
    TwistedCharacterTable T = twisted_table(Q8, theta, 12);

    CharacterTable base = character_table(Q8);
    std::vector<std::vector<Cyclotomic>> expect;
    for (int i = 0; i < base.irrep_count(); ++i) {
      std::vector<Cyclotomic> row(Q8.order());
      for (int h = 0; h < Q8.order(); ++h)
        row[h] = Cyclotomic::root(12, nu[h]) * base.value(i, h);
      expect.push_back(row);
    }
    /* multiset comparison via canonical sort */
    auto cmp = [](const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
      for (size_t i = 0; i < a.size(); ++i) {
        int c = Cyclotomic::compare(a[i], b[i]);
        if (c != 0) return c < 0;
      }
      return false;
    };
    std::vector<std::vector<Cyclotomic>> got = T.rows;
    std::sort(got.begin(), got.end(), cmp);
    std::sort(expect.begin(), expect.end(), cmp);
    REQUIRE(got.size() == expect.size());
    for (size_t i = 0; i < got.size(); ++i)
      for (size_t h = 0; h < got[i].size(); ++h) CHECK(got[i][h] == expect[i][h]);
  }
}

TEST_CASE("quotient cochain of the four-element extension is trivialized") {
  FiniteGroup Z4 = build_su2_group({SU2Family::Cyclic, 4});
  QuotientMap q = quotient(Z4, central_involutions(Z4));
  Cocycle3 w = cyclic_cocycle_on(q.target, 1);
  InflatedCocycle infl(w, q);

  int gbar = 1; /* the nontrivial quotient element */
  int g = q.section[gbar];
  auto theta = [&](int x, int y) { return infl.theta_exp(g, q.section[x], q.section[y]); };
  TwistedCharacterTable T = twisted_table(q.target, theta, 2);
  CHECK(T.rows.size() == 2);
  CHECK(T.mu_order == 4);

  /* brute-force all 1-cochains with values in the 4th roots of unity */
  std::vector<std::vector<long>> solutions;
  for (long u0 = 0; u0 < 4; ++u0)
    for (long u1 = 0; u1 < 4; ++u1) {
      std::vector<long> u = {u0, u1};
      bool ok = true;
      for (int x = 0; x < 2 && ok; ++x)
        for (int y = 0; y < 2 && ok; ++y)
          ok = ((u[x] + u[y] - u[q.target.mul(x, y)] - 2 * theta(x, y)) % 4 + 4) % 4 == 0;
      if (ok) solutions.push_back(u);
    }
  CHECK(!solutions.empty());
  CHECK(std::find(solutions.begin(), solutions.end(), T.mu_exp) != solutions.end());
  (void)g;
}

TEST_CASE("a cohomologically nontrivial cochain is rejected") {
  /* Klein four group; theta(x,y) = (-1)^{x_2 y_1} has nontrivial class */
  std::vector<std::vector<int>> table(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) table[i][j] = i ^ j;
  FiniteGroup V4 = FiniteGroup::from_table(table);
  auto theta = [](int x, int y) { return ((x >> 1) & 1) * (y & 1); };
  CHECK_THROWS_WITH_AS(twisted_table(V4, theta, 2),
                       "2-cocycle is not a coboundary: nontrivial cohomology class",
                       std::runtime_error);
}

TEST_CASE("malformed cochains are rejected") {
  FiniteGroup Z4 = cyclic_group(4);
  /* not normalized */
  CHECK_THROWS_AS(twisted_table(Z4, [](int, int) { return 1; }, 2), std::invalid_argument);
  /* normalized but not a cocycle */
  auto bad = [](int x, int y) { return (x == 1 && y == 1) ? 1 : 0; };
  CHECK_THROWS_AS(twisted_table(Z4, bad, 2), std::invalid_argument);
}

TEST_CASE("nonabelian group with a nontrivial inflated cochain") {
  /* the quotient of the order-12 binary dihedral group by its rotation
     core of order 3 is cyclic of order 4 */
  FiniteGroup BD3 = build_su2_group({SU2Family::BinaryDihedral, 3});
  int o3 = -1;
  for (int g = 0; g < BD3.order(); ++g)
    if (BD3.element_order(g) == 3) {
      o3 = g;
      break;
    }
  REQUIRE(o3 >= 0);
  Subgroup N = subgroup_from(BD3, {o3});
  REQUIRE(N.order() == 3);
  REQUIRE(is_normal(BD3, N));
  QuotientMap q = quotient(BD3, N);
  REQUIRE(q.target.order() == 4);
  Cocycle3 w = cyclic_cocycle_on(q.target, 1);
  InflatedCocycle infl(w, q);

  /* the full group is the stabilizer of every quotient element here */
  auto theta = [&](int x, int y) {
    int gq = q.section[1];
    return infl.theta_exp(gq, x, y);
  };
  TwistedCharacterTable T = twisted_table(BD3, theta, 4);
  CHECK(T.rows.size() == 6);
  CHECK(T.degrees == character_table(BD3).degrees);
}
