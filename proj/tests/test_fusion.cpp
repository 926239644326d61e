#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "gtqd/fusion.hpp"
#include "gtqd/polyhedral.hpp"

using namespace gtqd;

namespace {

FiniteGroup cyclic_group(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup::from_table(std::move(t));
}

GTQD su2_center(SU2Family f, long p = 0) {
  FiniteGroup G = build_su2_group({f, p});
  Subgroup N = central_involutions(G);
  QuotientMap qm = quotient(G, N);
  return GTQD(G, N, trivial_cocycle(qm.target));
}

GTQD cyclic_center(int m, long q) {
  FiniteGroup G = cyclic_group(m);
  Subgroup N = central_involutions(G);
  QuotientMap qm = quotient(G, N);
  return GTQD(G, N, cyclic_cocycle_on(qm.target, q));
}

GTQD z4_mod_z2(long q) { return cyclic_center(4, q); }

int class_with_rep_order(const FiniteGroup& T, int k) {
  for (int c = 0; c < (int)T.classes().size(); ++c)
    if (T.element_order(T.classes()[c].representative) == k) return c;
  throw std::runtime_error("no class of that order");
}

std::multiset<long> per_class_counts(const FusionSystem& sys) {
  std::multiset<long> out;
  for (int c = 0; c < (int)sys.contexts().size(); ++c)
    out.insert((long)sys.context(c).table.irrep_count());
  return out;
}

/* independent multiplicity for quotients where every class is a singleton
   and every stabilizer is the whole source group (abelian case): the local
   rule with the coproduct weight folded in, straight off the tables */
long singleton_class_mult(const FusionSystem& sys, const IrrepLabel& V, const IrrepLabel& W,
                          const IrrepLabel& U) {
  const GTQD& D = sys.algebra();
  const FiniteGroup& G = D.group();
  const FiniteGroup& T = D.quotient_map().target;
  const std::vector<int>& sec = D.quotient_map().section;
  long M = D.cochains().value_order();
  int g1 = sys.context(V.class_index).rep;
  int g2 = sys.context(W.class_index).rep;
  int g3 = sys.context(U.class_index).rep;
  if (T.mul(g1, g2) != g3) return 0;
  Cyclotomic s;
  for (int x = 0; x < G.order(); ++x) {
    const ClassContext& K1 = sys.context(V.class_index);
    const ClassContext& K2 = sys.context(W.class_index);
    const ClassContext& K3 = sys.context(U.class_index);
    s += Cyclotomic::root(M, D.cochains().gamma_exp(x, sec[g1], sec[g2])) *
         K1.table.rows[V.stab_char_index][K1.to_local[x]] *
         K2.table.rows[W.stab_char_index][K2.to_local[x]] *
         K3.table.rows[U.stab_char_index][K3.to_local[x]].conj();
  }
  s *= Cyclotomic::from_rational(Rational(1, G.order()));
  Rational r = s.rational_value();
  REQUIRE(r.get_den() == 1);
  REQUIRE(r >= 0);
  return r.get_num().get_si();
}

std::vector<Cyclotomic> by_class(const FiniteGroup& G, const std::vector<Cyclotomic>& by_elem) {
  std::vector<Cyclotomic> out;
  for (const ConjugacyClass& c : G.classes()) out.push_back(by_elem[c.representative]);
  return out;
}

} // namespace

TEST_CASE("label counts, per-class counts, and the dimension identity") {
  struct Row {
    GTQD D;
    int total;
    std::multiset<long> per_class;
  };
  std::vector<Row> rows;
  rows.push_back({cyclic_center(6, 0), 18, {6, 6, 6}});
  rows.push_back({su2_center(SU2Family::BinaryDihedral, 3), 16, {6, 6, 4}});
  rows.push_back({su2_center(SU2Family::BinaryDihedral, 4), 32, {7, 7, 8, 5, 5}});
  rows.push_back({su2_center(SU2Family::BinaryTetrahedral), 24, {7, 5, 6, 6}});
  rows.push_back({su2_center(SU2Family::BinaryOctahedral), 34, {8, 5, 7, 8, 6}});
  rows.push_back({su2_center(SU2Family::BinaryIcosahedral), 40, {9, 5, 6, 10, 10}});
  for (const Row& row : rows) {
    FusionSystem sys(row.D);
    INFO("|G| = " << row.D.group().order());
    CHECK(sys.label_count() == row.total);
    CHECK(per_class_counts(sys) == row.per_class);
    long dim2 = 0;
    for (const IrrepLabel& l : sys.labels()) {
      CHECK(l.dimension > 0);
      long cs = (long)row.D.quotient_map().target.classes()[l.class_index].members.size();
      CHECK(l.dimension == cs * sys.context(l.class_index).table.degrees[l.stab_char_index]);
      dim2 += l.dimension * l.dimension;
    }
    CHECK(dim2 == (long)row.D.quotient_map().target.order() * row.D.group().order());
    /* deterministic order: class index, then row index */
    for (int i = 0; i + 1 < sys.label_count(); ++i) {
      const IrrepLabel &a = sys.label(i), &b = sys.label(i + 1);
      CHECK(std::pair(a.class_index, a.stab_char_index) < std::pair(b.class_index, b.stab_char_index));
      CHECK(sys.label_index(a.class_index, a.stab_char_index) == i);
    }
    CHECK(simple_modules(row.D) == sys.labels());
  }
}

TEST_CASE("character values: trivial label, vanishing, and faithful stabilizer values") {
  GTQD D = su2_center(SU2Family::BinaryDihedral, 3);
  FusionSystem sys(D);
  const FiniteGroup& G = D.group();
  const FiniteGroup& T = D.quotient_map().target;

  const IrrepLabel& triv = sys.label(sys.label_index(sys.identity_class(), 0));
  for (int t = 0; t < sys.context(sys.identity_class()).local.order(); ++t)
    CHECK(sys.context(sys.identity_class()).table.rows[0][t] == Cyclotomic::one());
  for (int x = 0; x < G.order(); ++x) {
    CHECK(sys.character_value(triv, T.identity(), x) == Cyclotomic::one());
    for (int h = 1; h < T.order(); ++h)
      CHECK(sys.character_value(triv, h, x) == Cyclotomic::zero());
  }

  int c3 = class_with_rep_order(T, 3);
  const ClassContext& K = sys.context(c3);
  REQUIRE(K.local.order() == 6);
  int t6 = -1;
  for (int t = 0; t < 6; ++t)
    if (K.local.element_order(t) == 6) t6 = t;
  REQUIRE(t6 >= 0);
  int faithful = 0;
  for (int r = 0; r < K.table.irrep_count(); ++r) {
    const Cyclotomic& v = K.table.rows[r][t6];
    bool primitive6 = pow(v, 6) == Cyclotomic::one();
    for (int k = 1; k < 6 && primitive6; ++k)
      if (pow(v, (unsigned long)k) == Cyclotomic::one()) primitive6 = false;
    if (!primitive6) continue;
    ++faithful;
    IrrepLabel l{c3, r, (long)T.classes()[c3].members.size() * K.table.degrees[r]};
    CHECK(sys.character_value(l, K.rep, K.to_parent[t6]) == v);
  }
  CHECK(faithful == 2);

  /* conjugated argument outside the stabilizer kills the value */
  IrrepLabel l{c3, 0, (long)T.classes()[c3].members.size() * K.table.degrees[0]};
  int outside = -1;
  for (int x = 0; x < G.order() && outside < 0; ++x)
    if (!K.stab.contains(x)) outside = x;
  REQUIRE(outside >= 0);
  CHECK(sys.character_value(l, K.rep, outside) == Cyclotomic::zero());
}

TEST_CASE("the simple characters are orthonormal") {
  std::vector<GTQD> configs;
  for (long q = 0; q < 3; ++q) configs.push_back(cyclic_center(6, q));
  for (long q = 0; q < 2; ++q) configs.push_back(z4_mod_z2(q));
  configs.push_back(su2_center(SU2Family::BinaryDihedral, 3));
  configs.push_back(su2_center(SU2Family::BinaryDihedral, 4));
  configs.push_back(su2_center(SU2Family::BinaryTetrahedral));
  configs.push_back(su2_center(SU2Family::BinaryOctahedral));
  {
    /* quotient by the trivial subgroup and by the whole group */
    FiniteGroup G = cyclic_group(4);
    QuotientMap qm = quotient(G, trivial_subgroup(G));
    configs.push_back(GTQD(G, trivial_subgroup(G), cyclic_cocycle_on(qm.target, 1)));
  }
  {
    FiniteGroup G = build_su2_group({SU2Family::BinaryTetrahedral, 0});
    QuotientMap qm = quotient(G, full_subgroup(G));
    configs.push_back(GTQD(G, full_subgroup(G), trivial_cocycle(qm.target)));
  }
  for (const GTQD& D : configs) {
    FusionSystem sys(D);
    INFO("|G| = " << D.group().order() << ", |quotient| = " << D.quotient_map().target.order()
                  << ", labels = " << sys.label_count());
    for (int i = 0; i < sys.label_count(); ++i) {
      DoubleCharacter a = sys.character(sys.label(i));
      for (int j = i; j < sys.label_count(); ++j) {
        Rational r = sys.inner_product(a, sys.character(sys.label(j)));
        CHECK(r == Rational(i == j ? 1 : 0));
      }
    }
  }
}

TEST_CASE("tensor characters: unit, trivial-cocycle formula, dimension") {
  GTQD D = su2_center(SU2Family::BinaryDihedral, 3);
  FusionSystem sys(D);
  const FiniteGroup& G = D.group();
  const FiniteGroup& T = D.quotient_map().target;
  const IrrepLabel& triv = sys.label(sys.label_index(sys.identity_class(), 0));

  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> label_pick(0, sys.label_count() - 1);

  for (int trial = 0; trial < 6; ++trial) {
    const IrrepLabel& V = sys.label(label_pick(rng));
    DoubleCharacter right = sys.tensor_character(sys.character(V), sys.character(triv));
    DoubleCharacter left = sys.tensor_character(sys.character(triv), sys.character(V));
    for (int h = 0; h < T.order(); ++h)
      for (int x = 0; x < G.order(); ++x) {
        Cyclotomic want = sys.character_value(V, h, x);
        CHECK(right.eval(h, x) == want);
        CHECK(left.eval(h, x) == want);
      }
  }

  /* with the trivial cocycle the weight disappears */
  std::uniform_int_distribution<int> hpick(0, T.order() - 1), xpick(0, G.order() - 1);
  for (int trial = 0; trial < 30; ++trial) {
    const IrrepLabel& V = sys.label(label_pick(rng));
    const IrrepLabel& W = sys.label(label_pick(rng));
    int k = hpick(rng), x = xpick(rng);
    Cyclotomic plain;
    for (int a = 0; a < T.order(); ++a)
      plain += sys.character_value(V, a, x) * sys.character_value(W, T.mul(T.inv(a), k), x);
    CHECK(sys.tensor_character(sys.character(V), sys.character(W)).eval(k, x) == plain);
  }

  /* evaluating against the unit sums to the product of dimensions, with and
     without a nontrivial cocycle */
  auto dimension_check = [](const FusionSystem& s) {
    const FiniteGroup& Q = s.algebra().quotient_map().target;
    for (const IrrepLabel& V : s.labels())
      for (const IrrepLabel& W : s.labels()) {
        DoubleCharacter tc = s.tensor_character(s.character(V), s.character(W));
        Cyclotomic total;
        for (int k = 0; k < Q.order(); ++k) total += tc.eval(k, 0);
        CHECK(total == Cyclotomic::from_rational(V.dimension * W.dimension));
      }
  };
  FusionSystem zsys(z4_mod_z2(1));
  dimension_check(zsys);
  std::mt19937_64 rng2(42);
  for (int trial = 0; trial < 8; ++trial) {
    const IrrepLabel& V = sys.label(label_pick(rng2));
    const IrrepLabel& W = sys.label(label_pick(rng2));
    DoubleCharacter tc = sys.tensor_character(sys.character(V), sys.character(W));
    Cyclotomic total;
    for (int k = 0; k < T.order(); ++k) total += tc.eval(k, 0);
    CHECK(total == Cyclotomic::from_rational(V.dimension * W.dimension));
  }
}

TEST_CASE("fusion coefficients match the direct stabilizer computation") {
  for (long q = 0; q < 2; ++q) {
    FusionSystem sys(z4_mod_z2(q));
    INFO("q = " << q);
    REQUIRE(sys.label_count() == 8);
    for (const IrrepLabel& V : sys.labels())
      for (const IrrepLabel& W : sys.labels()) {
        long row_total = 0;
        for (const IrrepLabel& U : sys.labels()) {
          long want = singleton_class_mult(sys, V, W, U);
          CHECK(sys.fusion_coefficient(V, W, U) == want);
          row_total += want;
        }
        /* all simples are one-dimensional here, so fusion is group-like */
        CHECK(row_total == 1);
      }
  }

  GTQD D = su2_center(SU2Family::BinaryDihedral, 3);
  FusionSystem sys(D);
  const IrrepLabel& triv = sys.label(sys.label_index(sys.identity_class(), 0));
  for (const IrrepLabel& V : sys.labels())
    for (const IrrepLabel& U : sys.labels())
      CHECK(sys.fusion_coefficient(V, triv, U) == (V == U ? 1 : 0));
}

TEST_CASE("fusion with a source-group character: delta for trivial W, restriction multiplicities") {
  GTQD D = su2_center(SU2Family::BinaryTetrahedral);
  FusionSystem sys(D);
  const FiniteGroup& G = D.group();
  std::vector<Cyclotomic> ones(G.order(), Cyclotomic::one());
  for (const IrrepLabel& V : sys.labels())
    for (const IrrepLabel& U : sys.labels())
      CHECK(sys.fusion_with_G_module(V, ones, U) == (V == U ? 1 : 0));

  /* with V = U = the trivial stabilizer character on a class, the rule is
     literally the multiplicity of the trivial character in W restricted to
     the stabilizer */
  for (int r = 0; r < sys.context(sys.identity_class()).table.irrep_count(); ++r) {
    IrrepLabel wlab = sys.label(sys.label_index(sys.identity_class(), r));
    std::vector<Cyclotomic> wvals = sys.values_on_group(wlab);
    for (int c = 0; c < (int)sys.contexts().size(); ++c) {
      const ClassContext& K = sys.context(c);
      IrrepLabel V = sys.label(sys.label_index(c, 0));
      std::vector<Cyclotomic> restr =
          restrict_class_function(G, by_class(G, wvals), K.local, K.to_parent);
      std::vector<Cyclotomic> triv_local(K.local.classes().size(), Cyclotomic::one());
      Rational want = inner_product_ordinary(K.local, restr, triv_local);
      CHECK(Rational(sys.fusion_with_G_module(V, wvals, V)) == want);
    }
  }
}

TEST_CASE("canonical module on the order-8 stabilizer of the binary octahedral double") {
  GTQD D = su2_center(SU2Family::BinaryOctahedral);
  FusionSystem sys(D);
  const FiniteGroup& G = D.group();
  std::vector<Cyclotomic> wvals = canonical_w_values(G);

  int c8 = -1;
  for (int c = 0; c < (int)sys.contexts().size(); ++c)
    if (sys.context(c).local.order() == 8 && sys.context(c).local.is_abelian()) c8 = c;
  REQUIRE(c8 >= 0);
  const ClassContext& K = sys.context(c8);
  REQUIRE(recognize_su2_subgroup(K.stab).family == SU2Family::Cyclic);

  /* decompose W restricted to the Z_8 stabilizer as a sum of two of its
     eight linear characters */
  int la = -1, lb = -1;
  for (int a = 0; a < 8 && la < 0; ++a)
    for (int b = a + 1; b < 8 && la < 0; ++b) {
      bool match = true;
      for (int t = 0; t < 8 && match; ++t)
        match = K.table.rows[a][t] + K.table.rows[b][t] == wvals[K.to_parent[t]];
      if (match) la = a, lb = b;
    }
  REQUIRE(la >= 0);

  /* multiplying by a linear character permutes the rows; find the images */
  auto row_times = [&](int r, int s) {
    for (int u = 0; u < 8; ++u) {
      bool match = true;
      for (int t = 0; t < 8 && match; ++t)
        match = K.table.rows[u][t] == K.table.rows[r][t] * K.table.rows[s][t];
      if (match) return u;
    }
    throw std::runtime_error("product of linear characters not in the table");
  };
  for (int r = 0; r < 8; ++r) {
    IrrepLabel V = sys.label(sys.label_index(c8, r));
    int na = row_times(r, la), nb = row_times(r, lb);
    REQUIRE(na != nb);
    for (int s = 0; s < 8; ++s) {
      IrrepLabel U = sys.label(sys.label_index(c8, s));
      long want = (s == na ? 1 : 0) + (s == nb ? 1 : 0);
      CHECK(sys.fusion_with_G_module(V, wvals, U) == want);
    }
  }
}

TEST_CASE("character values do not depend on the choice of conjugator") {
  std::vector<GTQD> configs;
  configs.push_back(su2_center(SU2Family::BinaryDihedral, 4));
  configs.push_back(su2_center(SU2Family::BinaryTetrahedral));
  for (long q = 1; q < 3; ++q) configs.push_back(cyclic_center(6, q));
  std::mt19937_64 rng(7);
  for (const GTQD& D : configs) {
    FusionSystem sys(D);
    const FiniteGroup& G = D.group();
    const FiniteGroup& T = D.quotient_map().target;
    std::uniform_int_distribution<int> label_pick(0, sys.label_count() - 1);
    std::uniform_int_distribution<int> xpick(0, G.order() - 1);
    for (int trial = 0; trial < 100; ++trial) {
      const IrrepLabel& l = sys.label(label_pick(rng));
      const ConjugacyClass& cls = T.classes()[l.class_index];
      const ClassContext& K = sys.context(l.class_index);
      std::uniform_int_distribution<int> mpick(0, (int)cls.members.size() - 1);
      std::uniform_int_distribution<int> cpick(0, K.stab.order() - 1);
      int mi = mpick(rng);
      int hbar = cls.members[mi];
      int x = xpick(rng);
      int y = D.quotient_map().section[cls.conjugators[mi]];
      int y2 = G.mul(y, K.stab.elements[cpick(rng)]);
      CHECK(sys.character_value_via(l, hbar, x, y2) == sys.character_value(l, hbar, x));
    }
    /* a conjugator that moves the representative to the wrong class member
       is rejected */
    for (int c = 0; c < (int)sys.contexts().size(); ++c) {
      const ConjugacyClass& cls = T.classes()[c];
      if (cls.members.size() < 2) continue;
      IrrepLabel l = sys.label(sys.label_index(c, 0));
      int y = D.quotient_map().section[cls.conjugators[1]];
      CHECK_THROWS_AS((void)sys.character_value_via(l, cls.members[0], 0, y),
                      std::invalid_argument);
      break;
    }
  }
}

TEST_CASE("fusion with a real module character is symmetric") {
  for (SU2Family f : {SU2Family::BinaryTetrahedral, SU2Family::BinaryOctahedral}) {
    GTQD D = su2_center(f);
    FusionSystem sys(D);
    std::vector<Cyclotomic> wvals = canonical_w_values(D.group());
    for (const Cyclotomic& v : wvals) CHECK(v.conj() == v);
    for (int c = 0; c < (int)sys.contexts().size(); ++c) {
      int n = sys.context(c).table.irrep_count();
      for (int r = 0; r < n; ++r)
        for (int s = r; s < n; ++s) {
          IrrepLabel V = sys.label(sys.label_index(c, r));
          IrrepLabel U = sys.label(sys.label_index(c, s));
          CHECK(sys.fusion_with_G_module(V, wvals, U) == sys.fusion_with_G_module(U, wvals, V));
        }
    }
  }
}

TEST_CASE("quotient by the whole group recovers ordinary character theory") {
  FiniteGroup G = build_su2_group({SU2Family::BinaryTetrahedral, 0});
  QuotientMap qm = quotient(G, full_subgroup(G));
  GTQD D(G, full_subgroup(G), trivial_cocycle(qm.target));
  FusionSystem sys(D);
  REQUIRE(sys.label_count() == 7);
  CharacterTable ord = character_table(G);
  const ClassContext& K = sys.context(0);
  REQUIRE(K.table.irrep_count() == ord.irrep_count());
  for (int r = 0; r < ord.irrep_count(); ++r)
    for (int x = 0; x < G.order(); ++x) {
      CHECK(K.table.rows[r][K.to_local[x]] == ord.value(r, x));
      CHECK(sys.character_value(sys.label(r), 0, x) == ord.value(r, x));
    }
}

TEST_CASE("input validation") {
  GTQD D = su2_center(SU2Family::BinaryDihedral, 3);
  FusionSystem sys(D);
  const FiniteGroup& G = D.group();
  IrrepLabel V = sys.label(0);
  CHECK_THROWS_AS((void)sys.fusion_with_G_module(V, std::vector<Cyclotomic>(3), V),
                  std::invalid_argument);
  std::vector<Cyclotomic> not_cf(G.order(), Cyclotomic::one());
  int c2 = class_with_rep_order(G, 4);
  not_cf[G.classes()[c2].members[0]] = Cyclotomic::from_rational(2);
  CHECK_THROWS_AS((void)sys.fusion_with_G_module(V, not_cf, V), std::invalid_argument);
  int nonid = -1;
  for (int i = 0; i < sys.label_count(); ++i)
    if (sys.label(i).class_index != sys.identity_class()) nonid = i;
  REQUIRE(nonid >= 0);
  CHECK_THROWS_AS((void)sys.values_on_group(sys.label(nonid)), std::invalid_argument);
}
