#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <set>
#include <stdexcept>

#include "gtqd/mckay.hpp"

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

std::vector<std::vector<long>> adj_of(int n, const std::vector<std::array<int, 3>>& edges) {
  std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
  for (const auto& e : edges) {
    a[e[0]][e[1]] += e[2];
    if (e[0] != e[1]) a[e[1]][e[0]] += e[2];
  }
  return a;
}

std::vector<int> all_nodes(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

ADELabel ade(char f, int i) {
  ADELabel l;
  l.family = f;
  l.index = i;
  return l;
}

} // namespace

TEST_CASE("diagram recognition rules") {
  /* cycles */
  CHECK(classify_ADE(adj_of(2, {{0, 1, 2}}), all_nodes(2)) == ade('A', 1));
  CHECK(classify_ADE(adj_of(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}}), all_nodes(3)) == ade('A', 2));
  CHECK(classify_ADE(adj_of(6, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {5, 0, 1}}),
                     all_nodes(6)) == ade('A', 5));
  /* four-leaf star and forked paths */
  CHECK(classify_ADE(adj_of(5, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}}), all_nodes(5)) ==
        ade('D', 4));
  CHECK(classify_ADE(
            adj_of(6, {{0, 2, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {3, 5, 1}}), all_nodes(6)) ==
        ade('D', 5));
  CHECK(classify_ADE(adj_of(7, {{0, 2, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {4, 6, 1}}),
                     all_nodes(7)) == ade('D', 6));
  /* trivalent trees: arms {2,2,2}, {1,3,3}, {1,2,5} */
  CHECK(classify_ADE(adj_of(7, {{0, 1, 1}, {1, 2, 1}, {3, 4, 1}, {4, 2, 1}, {5, 6, 1}, {6, 2, 1}}),
                     all_nodes(7)) == ade('E', 6));
  CHECK(classify_ADE(adj_of(8, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {5, 6, 1},
                                {3, 7, 1}}),
                     all_nodes(8)) == ade('E', 7));
  {
    std::vector<std::array<int, 3>> e8;
    for (int i = 0; i + 1 < 8; ++i) e8.push_back({i, i + 1, 1});
    e8.push_back({5, 8, 1}); /* arm of one node off the third position from the end */
    CHECK(classify_ADE(adj_of(9, e8), all_nodes(9)) == ade('E', 8));
  }
  /* rejected shapes carry witnesses */
  auto bad = [&](const std::vector<std::vector<long>>& a, int n) {
    ADELabel l = classify_ADE(a, all_nodes(n));
    CHECK(!l.recognized());
    CHECK(!l.witness.empty());
    return l.witness;
  };
  CHECK(bad(adj_of(1, {{0, 0, 2}}), 1).find("self-edge") != std::string::npos);
  CHECK(bad(adj_of(2, {{0, 1, 3}}), 2).find("multiplicity 3") != std::string::npos);
  CHECK(bad(adj_of(3, {{0, 1, 1}, {1, 2, 1}}), 3).find("path") != std::string::npos);
  CHECK(bad(adj_of(6, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {0, 5, 1}}), 6)
            .find("degree 5") != std::string::npos);
  CHECK(bad(adj_of(4, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {2, 3, 1}}), 4)
            .find("neither a cycle nor a tree") != std::string::npos);
  CHECK(bad(adj_of(7, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {1, 4, 1}, {4, 5, 1}, {4, 6, 1}}), 7)
            .find("leaf prongs") != std::string::npos);
}

TEST_CASE("the classical construction lands on the expected diagrams") {
  for (long m = 2; m <= 24; ++m) {
    FiniteGroup H = build_su2_group({SU2Family::Cyclic, m});
    McKayGraph g = classical_mckay(H);
    INFO("cyclic order " << m);
    REQUIRE(g.components.size() == 1);
    CHECK(g.component_type[0] == ade('A', (int)m - 1));
    CHECK(g.component_type[0] == expected_correspondent(full_subgroup(H)));
  }
  for (long n = 2; n <= 12; ++n) {
    FiniteGroup H = build_su2_group({SU2Family::BinaryDihedral, n});
    McKayGraph g = classical_mckay(H);
    INFO("binary dihedral parameter " << n);
    REQUIRE(g.components.size() == 1);
    CHECK(g.component_type[0] == ade('D', (int)n + 2));
    CHECK(g.component_type[0] == expected_correspondent(full_subgroup(H)));
  }
  /* parameter 1 collapses to the cyclic group of order 4 */
  {
    FiniteGroup H = build_su2_group({SU2Family::BinaryDihedral, 1});
    CHECK(classical_mckay(H).component_type[0] == ade('A', 3));
    CHECK(expected_correspondent(full_subgroup(H)) == ade('A', 3));
  }
  std::vector<std::pair<SU2Family, int>> exceptional = {
      {SU2Family::BinaryTetrahedral, 6},
      {SU2Family::BinaryOctahedral, 7},
      {SU2Family::BinaryIcosahedral, 8},
  };
  for (auto [f, idx] : exceptional) {
    FiniteGroup H = build_su2_group({f, 0});
    McKayGraph g = classical_mckay(H);
    REQUIRE(g.components.size() == 1);
    CHECK(g.component_type[0] == ade('E', idx));
    CHECK(g.component_type[0] == expected_correspondent(full_subgroup(H)));
    for (size_t i = 0; i < g.nodes.size(); ++i) CHECK(g.adjacency[i][i] == 0);
  }
}

TEST_CASE("quotient by the whole group reproduces the classical graph") {
  FiniteGroup G = build_su2_group({SU2Family::BinaryTetrahedral, 0});
  QuotientMap qm = quotient(G, full_subgroup(G));
  GTQD D(G, full_subgroup(G), trivial_cocycle(qm.target));
  FusionSystem sys(D);
  McKayGraph g = build_graph(sys, canonical_module(G));
  McKayGraph classical = classical_mckay(G);
  REQUIRE(g.nodes.size() == classical.nodes.size());
  CHECK(g.adjacency == classical.adjacency);
  REQUIRE(g.components.size() == 1);
  CHECK(g.component_type[0] == ade('E', 6));
}

TEST_CASE("binary octahedral double: five components in the expected shapes") {
  GTQD D = su2_center(SU2Family::BinaryOctahedral);
  FusionSystem sys(D);
  std::vector<Cyclotomic> w = canonical_module(D.group());
  TheoremReport rep = verify_theorem(sys, w);
  CHECK(rep.asserted);
  for (const TheoremClause& c : rep.clauses) {
    INFO(c.name << ": " << c.witness);
    CHECK(c.ok);
  }
  const McKayGraph& g = rep.graph;
  REQUIRE(g.nodes.size() == 34);
  REQUIRE(g.components.size() == 5);
  std::multiset<std::pair<int, std::string>> got, want;
  for (int ci = 0; ci < 5; ++ci)
    got.insert({(int)g.components[ci].size(), g.component_type[ci].str()});
  want = {{8, "E~7"}, {5, "D~4"}, {7, "D~6"}, {8, "A~7"}, {6, "A~5"}};
  CHECK(got == want);

  /* the trivial node is joined exactly to the canonical module's row */
  int c_id = sys.identity_class();
  const ClassContext& K = sys.context(c_id);
  int w_row = -1;
  for (int r = 0; r < K.table.irrep_count(); ++r) {
    bool match = true;
    for (int x = 0; x < D.group().order() && match; ++x)
      match = K.table.rows[r][K.to_local[x]] == w[x];
    if (match) w_row = r;
  }
  REQUIRE(w_row >= 0);
  int triv = sys.label_index(c_id, 0);
  for (int v = 0; v < (int)g.nodes.size(); ++v)
    CHECK(g.adjacency[triv][v] == (v == sys.label_index(c_id, w_row) ? 1 : 0));
}

TEST_CASE("decomposition holds across the corpus") {
  std::vector<GTQD> configs;
  {
    FiniteGroup G = cyclic_group(6);
    Subgroup N = central_involutions(G);
    QuotientMap qm = quotient(G, N);
    configs.push_back(GTQD(G, N, trivial_cocycle(qm.target)));
  }
  configs.push_back(su2_center(SU2Family::BinaryDihedral, 3));
  configs.push_back(su2_center(SU2Family::BinaryDihedral, 4));
  configs.push_back(su2_center(SU2Family::BinaryTetrahedral));
  configs.push_back(su2_center(SU2Family::BinaryIcosahedral));
  for (SU2Family f : {SU2Family::BinaryTetrahedral, SU2Family::BinaryOctahedral}) {
    FiniteGroup G = build_su2_group({f, 0});
    QuotientMap q1 = quotient(G, trivial_subgroup(G));
    configs.push_back(GTQD(G, trivial_subgroup(G), trivial_cocycle(q1.target)));
    QuotientMap q2 = quotient(G, full_subgroup(G));
    configs.push_back(GTQD(G, full_subgroup(G), trivial_cocycle(q2.target)));
  }
  for (const GTQD& D : configs) {
    FusionSystem sys(D);
    INFO("|G| = " << D.group().order() << ", |N| = " << D.normal_subgroup().order());
    TheoremReport rep = verify_theorem(sys, canonical_module(D.group()));
    CHECK(rep.asserted == (D.normal_subgroup().order() <= 2));
    for (const TheoremClause& c : rep.clauses) {
      INFO(c.name << ": " << c.witness);
      CHECK(c.ok);
    }
    CHECK(rep.graph.components.size() == D.quotient_map().target.classes().size());
    for (size_t i = 0; i < rep.graph.nodes.size(); ++i) CHECK(rep.graph.adjacency[i][i] == 0);
  }
}

TEST_CASE("the graph does not depend on the cocycle") {
  for (int n = 1; n <= 6; ++n) {
    FiniteGroup G = cyclic_group(2 * n);
    Subgroup N = central_involutions(G);
    REQUIRE(N.order() == 2);
    QuotientMap qm = quotient(G, N);
    std::vector<Cyclotomic> w = canonical_module(G);
    McKayGraph base;
    for (long q = 0; q < n; ++q) {
      GTQD D(G, N, cyclic_cocycle_on(qm.target, q));
      FusionSystem sys(D);
      McKayGraph g = build_graph(sys, w);
      INFO("n = " << n << ", q = " << q);
      REQUIRE((int)g.components.size() == (int)qm.target.classes().size());
      for (int ci = 0; ci < (int)g.components.size(); ++ci)
        CHECK(g.component_type[ci] == ade('A', 2 * n - 1));
      if (q == 0)
        base = g;
      else
        CHECK(g.adjacency == base.adjacency);
    }
  }
}

TEST_CASE("renderings are deterministic and carry the component structure") {
  GTQD D = su2_center(SU2Family::BinaryOctahedral);
  FusionSystem sys(D);
  McKayGraph g = build_graph(sys, canonical_module(D.group()));
  std::string dot = mckay_dot(sys, g);
  CHECK(dot == mckay_dot(sys, g));
  size_t clusters = 0, pos = 0;
  while ((pos = dot.find("subgraph cluster_", pos)) != std::string::npos) {
    ++clusters;
    pos += 17;
  }
  CHECK(clusters == 5);
  size_t nodes = 0;
  pos = 0;
  while ((pos = dot.find("(dim ", pos)) != std::string::npos) {
    ++nodes;
    pos += 5;
  }
  CHECK(nodes == 34);

  nlohmann::json j = mckay_json(sys, g);
  CHECK(j["nodes"].size() == 34);
  CHECK(j["components"].size() == 5);
  CHECK(j["edges"].size() == 31);
  CHECK(j == mckay_json(sys, g));
  for (const auto& e : j["edges"]) CHECK(e[2].get<long>() > 0);
}
