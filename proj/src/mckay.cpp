#include "gtqd/mckay.hpp"

#include <algorithm>
#include <stdexcept>

namespace gtqd {

namespace {

std::string degree_string(const std::vector<long>& deg) {
  std::vector<long> d = deg;
  std::sort(d.begin(), d.end(), std::greater<long>());
  std::string s = "degrees [";
  for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + "]";
}

long integer_entry(const Rational& r, const char* what) {
  if (r < 0 || r.get_den() != 1 || !r.get_num().fits_slong_p())
    throw std::logic_error(std::string(what) + " is not a nonnegative integer: " + r.get_str());
  return r.get_num().get_si();
}

void check_symmetric(const std::vector<std::vector<long>>& adj) {
  for (size_t i = 0; i < adj.size(); ++i)
    for (size_t j = i + 1; j < adj.size(); ++j)
      if (adj[i][j] != adj[j][i])
        throw std::logic_error("fusion graph is not symmetric at (" + std::to_string(i) + "," +
                               std::to_string(j) + ")");
}

void fill_components(McKayGraph& g) {
  int n = (int)g.nodes.size();
  g.components = graph_components(g.adjacency);
  g.component_of.assign(n, -1);
  g.component_class.clear();
  g.component_type.clear();
  for (int ci = 0; ci < (int)g.components.size(); ++ci) {
    int cls = g.nodes[g.components[ci][0]].class_index;
    for (int v : g.components[ci]) {
      g.component_of[v] = ci;
      if (g.nodes[v].class_index != cls) cls = -1;
    }
    g.component_class.push_back(cls);
    g.component_type.push_back(classify_ADE(g.adjacency, g.components[ci]));
  }
}

} // namespace

std::string ADELabel::str() const {
  if (family == '?') return "unrecognized(" + witness + ")";
  return std::string(1, family) + "~" + std::to_string(index);
}

std::vector<Cyclotomic> canonical_module(const FiniteGroup& G) {
  if (G.has_matrix_rep()) return canonical_w_values(G);
  int n = G.order();
  int gen = -1;
  for (int g = 0; g < n && gen < 0; ++g)
    if (G.element_order(g) == n) gen = g;
  if (gen < 0)
    throw std::invalid_argument("no canonical module: the group has neither matrices nor a "
                                "generator of full order");
  std::vector<Cyclotomic> w(n);
  int e = G.identity();
  for (int k = 0; k < n; ++k) {
    w[e] = Cyclotomic::root(n, k) + Cyclotomic::root(n, -k);
    e = G.mul(e, gen);
  }
  return w;
}

std::vector<std::vector<int>> graph_components(const std::vector<std::vector<long>>& adjacency) {
  int n = (int)adjacency.size();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> comp, todo{start};
    seen[start] = 1;
    while (!todo.empty()) {
      int u = todo.back();
      todo.pop_back();
      comp.push_back(u);
      for (int v = 0; v < n; ++v)
        if (!seen[v] && adjacency[u][v] != 0) {
          seen[v] = 1;
          todo.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

/* The shapes below are the extended diagrams: cycles A~(m-1), the forked
   paths D~n, and the three trivalent trees E~6/E~7/E~8 with arm node counts
   {2,2,2}, {1,3,3}, {1,2,5}.  The input set is assumed connected. */
ADELabel classify_ADE(const std::vector<std::vector<long>>& adjacency,
                      const std::vector<int>& nodes) {
  int n = (int)nodes.size();
  std::vector<long> deg(n, 0);
  long maxmult = 0;
  bool loop = false;
  long edges = 0;
  for (int i = 0; i < n; ++i) {
    if (adjacency[nodes[i]][nodes[i]] != 0) loop = true;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      long m = adjacency[nodes[i]][nodes[j]];
      deg[i] += m;
      maxmult = std::max(maxmult, m);
      edges += m;
    }
  }
  edges /= 2;
  auto unrec = [&](const std::string& why) {
    ADELabel l;
    l.witness = why + "; " + degree_string(deg);
    return l;
  };
  auto ade = [](char f, int idx) {
    ADELabel l;
    l.family = f;
    l.index = idx;
    return l;
  };

  if (loop) return unrec("node with a self-edge");
  if (maxmult > 1) {
    if (n == 2 && maxmult == 2 && edges == 2) return ade('A', 1);
    return unrec("edge of multiplicity " + std::to_string(maxmult));
  }
  if (n >= 3 && std::all_of(deg.begin(), deg.end(), [](long d) { return d == 2; }))
    return ade('A', n - 1);
  if (edges != n - 1) return unrec("neither a cycle nor a tree");

  std::vector<int> branch, leaves;
  long maxdeg = 0;
  for (int i = 0; i < n; ++i) {
    maxdeg = std::max(maxdeg, deg[i]);
    if (deg[i] >= 3) branch.push_back(i);
    if (deg[i] == 1) leaves.push_back(i);
  }
  if (maxdeg > 4) return unrec("node of degree " + std::to_string(maxdeg));
  if (maxdeg == 4) {
    if (n == 5 && leaves.size() == 4) return ade('D', 4);
    return unrec("degree-4 node outside the five-node star");
  }
  if (branch.size() == 2) {
    for (int b : branch) {
      int leaf_nb = 0;
      for (int j = 0; j < n; ++j)
        if (adjacency[nodes[b]][nodes[j]] != 0 && deg[j] == 1) ++leaf_nb;
      if (leaf_nb != 2) return unrec("branch node without two leaf prongs");
    }
    if (leaves.size() != 4) return unrec("two branch nodes but " +
                                         std::to_string(leaves.size()) + " leaves");
    return ade('D', n - 1);
  }
  if (branch.size() == 1) {
    int c0 = branch[0];
    std::vector<int> arms;
    for (int j = 0; j < n; ++j) {
      if (adjacency[nodes[c0]][nodes[j]] == 0) continue;
      int prev = c0, cur = j, len = 1;
      for (bool moved = true; moved;) {
        moved = false;
        for (int k = 0; k < n; ++k)
          if (k != prev && adjacency[nodes[cur]][nodes[k]] != 0) {
            prev = cur;
            cur = k;
            ++len;
            moved = true;
            break;
          }
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms == std::vector<int>{2, 2, 2}) return ade('E', 6);
    if (arms == std::vector<int>{1, 3, 3}) return ade('E', 7);
    if (arms == std::vector<int>{1, 2, 5}) return ade('E', 8);
    std::string w = "trivalent tree with arms {";
    for (size_t i = 0; i < arms.size(); ++i) w += (i ? "," : "") + std::to_string(arms[i]);
    return unrec(w + "}");
  }
  if (branch.size() > 2) return unrec(std::to_string(branch.size()) + " branch nodes");
  return unrec("simple path (finite type)");
}

McKayGraph build_graph(const FusionSystem& sys, const std::vector<Cyclotomic>& w_values) {
  McKayGraph g;
  g.nodes = sys.labels();
  int n = (int)g.nodes.size();
  g.adjacency.assign(n, std::vector<long>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      g.adjacency[u][v] = sys.fusion_with_G_module(g.nodes[u], w_values, g.nodes[v]);
  check_symmetric(g.adjacency);
  fill_components(g);
  return g;
}

McKayGraph build_graph(const GTQD& D, const std::vector<Cyclotomic>& w_values) {
  return build_graph(FusionSystem(D), w_values);
}

McKayGraph classical_mckay(const FiniteGroup& H) {
  CharacterTable tab = character_table(H);
  std::vector<Cyclotomic> w = canonical_module(H);
  int nc = (int)H.classes().size();
  std::vector<Cyclotomic> wc;
  wc.reserve(nc);
  for (const ConjugacyClass& c : H.classes()) wc.push_back(w[c.representative]);

  McKayGraph g;
  int k = tab.irrep_count();
  for (int r = 0; r < k; ++r) g.nodes.push_back({0, r, tab.degrees[r]});
  g.adjacency.assign(k, std::vector<long>(k, 0));
  for (int i = 0; i < k; ++i) {
    std::vector<Cyclotomic> prod(nc);
    for (int c = 0; c < nc; ++c) prod[c] = tab.rows[i][c] * wc[c];
    for (int j = 0; j < k; ++j)
      g.adjacency[i][j] =
          integer_entry(inner_product_ordinary(H, prod, tab.rows[j]), "edge multiplicity");
  }
  check_symmetric(g.adjacency);
  fill_components(g);
  return g;
}

ADELabel expected_correspondent(const Subgroup& H) {
  SU2GroupId id = recognize_su2_subgroup(H);
  ADELabel l;
  switch (id.family) {
    case SU2Family::Cyclic:
      l.family = 'A';
      l.index = (int)id.parameter - 1;
      break;
    case SU2Family::BinaryDihedral:
      l.family = 'D';
      l.index = (int)id.parameter + 2;
      break;
    case SU2Family::BinaryTetrahedral:
      l.family = 'E';
      l.index = 6;
      break;
    case SU2Family::BinaryOctahedral:
      l.family = 'E';
      l.index = 7;
      break;
    case SU2Family::BinaryIcosahedral:
      l.family = 'E';
      l.index = 8;
      break;
  }
  return l;
}

TheoremReport verify_theorem(const FusionSystem& sys, const std::vector<Cyclotomic>& w_values) {
  TheoremReport rep;
  rep.asserted = sys.algebra().normal_subgroup().order() <= 2;
  rep.graph = build_graph(sys, w_values);
  const McKayGraph& g = rep.graph;
  const FiniteGroup& T = sys.algebra().quotient_map().target;
  int nc = (int)T.classes().size();
  auto class_name = [&](int c) { return T.label(T.classes()[c].representative); };

  TheoremClause c1{"one component per conjugacy class"};
  if ((int)g.components.size() != nc) {
    c1.ok = false;
    c1.witness = std::to_string(g.components.size()) + " components for " + std::to_string(nc) +
                 " classes";
  }

  TheoremClause c2{"each component is the label set of one class"};
  std::vector<int> comp_of_class(nc, -1);
  for (int ci = 0; ci < (int)g.components.size() && c2.ok; ++ci) {
    int c = g.component_class[ci];
    if (c < 0) {
      c2.ok = false;
      c2.witness = "a component mixes labels from several classes";
    } else if (comp_of_class[c] >= 0) {
      c2.ok = false;
      c2.witness = "class " + class_name(c) + " is split across components";
    } else {
      comp_of_class[c] = ci;
      int want = sys.context(c).table.irrep_count();
      if ((int)g.components[ci].size() != want) {
        c2.ok = false;
        c2.witness = "class " + class_name(c) + " has " + std::to_string(want) +
                     " characters but a component of " +
                     std::to_string(g.components[ci].size()) + " nodes";
      }
    }
  }
  for (int c = 0; c < nc && c2.ok; ++c)
    if (comp_of_class[c] < 0) {
      c2.ok = false;
      c2.witness = "class " + class_name(c) + " has no component";
    }

  TheoremClause c3{"each component is the correspondent of its class stabilizer"};
  for (int c = 0; c < nc; ++c) {
    if (comp_of_class[c] < 0) continue;
    ADELabel want = expected_correspondent(sys.context(c).stab);
    const ADELabel& got = g.component_type[comp_of_class[c]];
    if (!(got == want)) {
      c3.ok = false;
      c3.witness = "class " + class_name(c) + ": " + got.str() + " instead of " + want.str();
      break;
    }
  }

  TheoremClause c4{"classes of order above 2 give even cycles"};
  for (int c = 0; c < nc; ++c) {
    if (comp_of_class[c] < 0 || T.element_order(T.classes()[c].representative) <= 2) continue;
    const ADELabel& got = g.component_type[comp_of_class[c]];
    if (got.family != 'A' || got.index % 2 == 0) {
      c4.ok = false;
      c4.witness = "class " + class_name(c) + " of order " +
                   std::to_string(T.element_order(T.classes()[c].representative)) + " gives " +
                   got.str();
      break;
    }
  }

  rep.clauses = {c1, c2, c3, c4};
  rep.ok = true;
  for (const TheoremClause& cl : rep.clauses) rep.ok = rep.ok && cl.ok;
  return rep;
}

TheoremReport verify_theorem(const GTQD& D) {
  FusionSystem sys(D);
  return verify_theorem(sys, canonical_module(D.group()));
}

std::string mckay_dot(const FusionSystem& sys, const McKayGraph& g) {
  const FiniteGroup& T = sys.algebra().quotient_map().target;
  auto class_name = [&](int c) {
    return c < 0 ? std::string("?") : T.label(T.classes()[c].representative);
  };
  std::string out = "graph mckay {\n";
  for (int ci = 0; ci < (int)g.components.size(); ++ci) {
    out += "  subgraph cluster_" + std::to_string(ci) + " {\n";
    out += "    label=\"class=" + class_name(g.component_class[ci]) + " type=" +
           g.component_type[ci].str() + "\";\n";
    for (int v : g.components[ci])
      out += "    n" + std::to_string(v) + " [label=\"" + class_name(g.nodes[v].class_index) +
             "/" + std::to_string(g.nodes[v].stab_char_index) + " (dim " +
             std::to_string(g.nodes[v].dimension) + ")\"];\n";
    out += "  }\n";
  }
  for (int u = 0; u < (int)g.nodes.size(); ++u)
    for (int v = u; v < (int)g.nodes.size(); ++v)
      if (g.adjacency[u][v] != 0)
        out += "  n" + std::to_string(u) + " -- n" + std::to_string(v) +
               " [weight=" + std::to_string(g.adjacency[u][v]) + "];\n";
  out += "}\n";
  return out;
}

nlohmann::json mckay_json(const FusionSystem& sys, const McKayGraph& g) {
  const FiniteGroup& T = sys.algebra().quotient_map().target;
  auto class_name = [&](int c) { return T.label(T.classes()[c].representative); };
  nlohmann::json nodes = nlohmann::json::array();
  for (const IrrepLabel& l : g.nodes)
    nodes.push_back({{"class", class_name(l.class_index)},
                     {"class_index", l.class_index},
                     {"char", l.stab_char_index},
                     {"dim", l.dimension}});
  nlohmann::json comps = nlohmann::json::array();
  for (int ci = 0; ci < (int)g.components.size(); ++ci) {
    nlohmann::json c = {{"type", g.component_type[ci].str()},
                        {"nodes", g.components[ci]}};
    if (g.component_class[ci] >= 0)
      c["class"] = class_name(g.component_class[ci]);
    else
      c["class"] = nullptr;
    comps.push_back(std::move(c));
  }
  nlohmann::json edges = nlohmann::json::array();
  for (int u = 0; u < (int)g.nodes.size(); ++u)
    for (int v = u; v < (int)g.nodes.size(); ++v)
      if (g.adjacency[u][v] != 0) edges.push_back({u, v, g.adjacency[u][v]});
  return {{"nodes", std::move(nodes)}, {"components", std::move(comps)},
          {"edges", std::move(edges)}};
}

} // namespace gtqd
