/* command line surface: build D^w(G,N) for a finite SU(2) subgroup, inspect
   its pieces, compute fusion data, and run the verification suites.
   exit codes: 0 ok, 1 a verification suite failed, 2 bad usage or config. */

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtqd/chartab.hpp"
#include "gtqd/cocycle.hpp"
#include "gtqd/cyclo.hpp"
#include "gtqd/fusion.hpp"
#include "gtqd/group.hpp"
#include "gtqd/mckay.hpp"
#include "gtqd/polyhedral.hpp"
#include "gtqd/qdouble.hpp"
#include "gtqd/serialize.hpp"

namespace {

using namespace gtqd;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

/* configuration problems: bad grammar, non-normal gens, cocycle on a
   non-cyclic quotient.  always exits with kUsage. */
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string group;
  std::string normal = "center";
  std::string cocycle = "trivial";
  std::string output = "text";
  std::uint64_t seed = 0;
};

/* resolved session; heap-allocated so the subgroup's parent pointer stays
   put while the algebra is built */
struct Session {
  Options opt;
  SU2GroupId id{SU2Family::Cyclic, 1};
  FiniteGroup G;
  Subgroup N;
  std::optional<GTQD> D;

  const GTQD& algebra() const { return *D; }
};

long parse_long(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(std::string("expected an integer ") + what + ", got '" + s + "'");
  }
}

SU2GroupId parse_group_spec(const std::string& s) {
  if (s == "bt") return {SU2Family::BinaryTetrahedral, 0};
  if (s == "bo") return {SU2Family::BinaryOctahedral, 0};
  if (s == "bi") return {SU2Family::BinaryIcosahedral, 0};
  size_t colon = s.find(':');
  if (colon != std::string::npos) {
    std::string head = s.substr(0, colon), tail = s.substr(colon + 1);
    if (head == "cyclic") {
      long m = parse_long(tail, "after cyclic:");
      if (m < 1) throw ConfigError("cyclic order must be at least 1");
      return {SU2Family::Cyclic, m};
    }
    if (head == "bd") {
      long n = parse_long(tail, "after bd:");
      if (n < 1) throw ConfigError("binary dihedral index must be at least 1");
      return {SU2Family::BinaryDihedral, n};
    }
  }
  throw ConfigError("unknown group '" + s + "' (expected cyclic:m | bd:n | bt | bo | bi)");
}

Subgroup resolve_normal(const FiniteGroup& G, const std::string& s) {
  if (s == "trivial") return trivial_subgroup(G);
  if (s == "center") return central_involutions(G);
  if (s == "full") return full_subgroup(G);
  const std::string prefix = "gens:";
  if (s.rfind(prefix, 0) == 0) {
    std::string rest = s.substr(prefix.size());
    std::vector<int> gens;
    size_t start = 0;
    while (true) {
      size_t comma = rest.find(',', start);
      std::string tok = rest.substr(start, comma == std::string::npos ? std::string::npos
                                                                      : comma - start);
      if (tok.empty()) throw ConfigError("empty element label in '" + s + "'");
      std::optional<int> g = G.element_by_label(tok);
      if (!g) throw ConfigError("no element labelled '" + tok + "'");
      gens.push_back(*g);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    Subgroup N = subgroup_from(G, gens);
    if (!is_normal(G, N))
      throw ConfigError("'" + s + "' generates a subgroup that is not normal");
    return N;
  }
  throw ConfigError("unknown normal subgroup '" + s +
                    "' (expected trivial | center | full | gens:<labels>)");
}

std::unique_ptr<Session> open_session(const Options& opt) {
  if (opt.output != "text" && opt.output != "json" && opt.output != "dot")
    throw ConfigError("unknown output '" + opt.output + "' (expected text | json | dot)");
  auto s = std::make_unique<Session>();
  s->opt = opt;
  s->id = parse_group_spec(opt.group);
  s->G = build_su2_group(s->id);
  s->N = resolve_normal(s->G, opt.normal);
  QuotientMap q = quotient(s->G, s->N);
  Cocycle3 w;
  if (opt.cocycle == "trivial") {
    w = trivial_cocycle(q.target);
  } else if (opt.cocycle.rfind("cyclic:", 0) == 0) {
    long exp = parse_long(opt.cocycle.substr(7), "after cyclic:");
    if (exp < 0) throw ConfigError("cocycle exponent must be nonnegative");
    try {
      w = cyclic_cocycle_on(q.target, exp);
    } catch (const std::exception& e) {
      throw ConfigError("cocycle cyclic:" + std::to_string(exp) +
                        " needs a cyclic quotient: " + e.what());
    }
  } else {
    throw ConfigError("unknown cocycle '" + opt.cocycle + "' (expected trivial | cyclic:q)");
  }
  s->D.emplace(s->G, s->N, std::move(w));
  return s;
}

json envelope(const Session& s, const std::string& command) {
  json j;
  j["schema"] = "gtqd/1";
  j["command"] = command;
  j["config"] = {{"group", s.opt.group},
                 {"normal", s.opt.normal},
                 {"cocycle", s.opt.cocycle},
                 {"seed", s.opt.seed}};
  return j;
}

void require_text_or_json(const Session& s, const char* command) {
  if (s.opt.output != "text" && s.opt.output != "json")
    throw ConfigError(std::string("output '") + s.opt.output + "' is not available for " +
                      command + " (use text or json)");
}

std::string config_line(const Session& s) {
  return s.id.str() + " / " + s.opt.normal + ", cocycle " + s.opt.cocycle;
}

/* left-justified column table, two spaces between columns */
void print_table(const std::vector<std::vector<std::string>>& rows, const std::string& indent) {
  std::vector<size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  for (const auto& r : rows) {
    std::string line = indent;
    for (size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    std::cout << line << "\n";
  }
}

/* ---------------- group-info ---------------- */

int cmd_group_info(const Session& s) {
  require_text_or_json(s, "group-info");
  const GTQD& D = s.algebra();
  const FiniteGroup& G = D.group();
  const Subgroup& N = D.normal_subgroup();
  const QuotientMap& q = D.quotient_map();
  Subgroup Z = center(G);

  struct Row {
    int index;
    std::string label;
    int size, order, stab_order;
    std::string type;
  };
  std::vector<Row> rows;
  for (int c = 0; c < (int)q.target.classes().size(); ++c) {
    const ConjugacyClass& K = q.target.classes()[c];
    Subgroup stab = stabilizer_in_source(q, K.representative);
    rows.push_back({c, q.target.label(K.representative), (int)K.members.size(),
                    q.target.element_order(K.representative), stab.order(),
                    recognize_su2_subgroup(stab).str()});
  }

  if (s.opt.output == "json") {
    json j = envelope(s, "group-info");
    j["group"] = {{"spec", s.id.str()},           {"order", G.order()},
                  {"classes", (int)G.classes().size()}, {"exponent", G.exponent()},
                  {"abelian", G.is_abelian()},    {"center_order", Z.order()}};
    std::vector<std::string> nlabels;
    for (int g : N.elements) nlabels.push_back(G.label(g));
    j["normal"] = {{"order", N.order()}, {"elements", nlabels}};
    json cls = json::array();
    for (const Row& r : rows)
      cls.push_back({{"index", r.index},
                     {"label", r.label},
                     {"size", r.size},
                     {"element_order", r.order},
                     {"stabilizer", {{"order", r.stab_order}, {"type", r.type}}}});
    j["quotient"] = {{"order", q.target.order()},
                     {"abelian", q.target.is_abelian()},
                     {"classes", cls}};
    std::cout << j.dump(2) << "\n";
    return kOk;
  }

  std::cout << "group " << s.id.str() << ": order " << G.order() << ", "
            << G.classes().size() << " classes, center order " << Z.order() << ", exponent "
            << G.exponent() << (G.is_abelian() ? ", abelian" : ", nonabelian") << "\n";
  std::cout << "normal subgroup (" << s.opt.normal << "): order " << N.order() << " {";
  for (size_t i = 0; i < N.elements.size(); ++i)
    std::cout << (i ? ", " : "") << G.label(N.elements[i]);
  std::cout << "}\n";
  std::cout << "quotient: order " << q.target.order() << ", " << q.target.classes().size()
            << " classes" << (q.target.is_abelian() ? ", abelian" : ", nonabelian") << "\n";
  std::vector<std::vector<std::string>> tab = {
      {"class", "label", "size", "order", "stabilizer", "type"}};
  for (const Row& r : rows)
    tab.push_back({std::to_string(r.index), r.label, std::to_string(r.size),
                   std::to_string(r.order), std::to_string(r.stab_order), r.type});
  print_table(tab, "  ");
  return kOk;
}

/* ---------------- chartab ---------------- */

json table_json(const CharacterTable& T) {
  const FiniteGroup& H = T.group;
  json classes = json::array();
  for (const ConjugacyClass& K : H.classes())
    classes.push_back({{"label", H.label(K.representative)},
                       {"size", (int)K.members.size()},
                       {"element_order", H.element_order(K.representative)}});
  json rows = json::array();
  for (const auto& r : T.rows) {
    json row = json::array();
    for (const Cyclotomic& v : r) row.push_back(cyclotomic_to_json(v));
    rows.push_back(row);
  }
  return json{{"classes", classes}, {"degrees", T.degrees}, {"rows", rows}};
}

void print_table_text(const CharacterTable& T, const std::string& indent) {
  const FiniteGroup& H = T.group;
  std::vector<std::vector<std::string>> tab;
  std::vector<std::string> head = {"class:"}, size = {"size:"}, ord = {"order:"};
  for (const ConjugacyClass& K : H.classes()) {
    head.push_back(H.label(K.representative));
    size.push_back(std::to_string(K.members.size()));
    ord.push_back(std::to_string(H.element_order(K.representative)));
  }
  tab.push_back(head);
  tab.push_back(size);
  tab.push_back(ord);
  for (int i = 0; i < T.irrep_count(); ++i) {
    std::vector<std::string> row = {"chi" + std::to_string(i) + ":"};
    for (const Cyclotomic& v : T.rows[i]) row.push_back(v.str());
    tab.push_back(row);
  }
  print_table(tab, indent);
}

int cmd_chartab(const Session& s, std::optional<int> stab_class) {
  require_text_or_json(s, "chartab");
  const GTQD& D = s.algebra();
  const FiniteGroup& G = D.group();
  const QuotientMap& q = D.quotient_map();

  if (!stab_class) {
    CharacterTable T = character_table(G);
    if (s.opt.output == "json") {
      json j = envelope(s, "chartab");
      j["subject"] = {{"kind", "group"}, {"spec", s.id.str()}, {"order", G.order()}};
      j["table"] = table_json(T);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "character table of " << s.id.str() << " (order " << G.order() << ", "
                << T.irrep_count() << " irreducibles)\n";
      print_table_text(T, "  ");
    }
    return kOk;
  }

  int c = *stab_class;
  if (c < 0 || c >= (int)q.target.classes().size())
    throw ConfigError("stabilizer class index " + std::to_string(c) + " is out of range (0.." +
                      std::to_string(q.target.classes().size() - 1) + ")");
  int rep = q.target.classes()[c].representative;
  int lift = q.section[rep];
  Subgroup stab = stabilizer_in_source(q, rep);
  std::vector<int> to_parent, to_local;
  FiniteGroup local = materialize(stab, &to_parent, &to_local);
  const InflatedCocycle& w = D.cochains();
  long M = w.value_order();
  TwistedCharacterTable T = twisted_table(
      local, [&](int i, int j) { return w.theta_exp(lift, to_parent[i], to_parent[j]); }, M);
  bool twisted = T.mu_order > 1;
  std::string type = recognize_su2_subgroup(stab).str();

  if (s.opt.output == "json") {
    json j = envelope(s, "chartab");
    j["subject"] = {{"kind", "stabilizer"},
                    {"class", c},
                    {"class_label", q.target.label(rep)},
                    {"order", stab.order()},
                    {"type", type}};
    j["table"] = table_json(T.base);
    j["theta_trivial"] = !twisted;
    j["mu_order"] = T.mu_order;
    j["mu_exponents"] = T.mu_exp;
    std::cout << j.dump(2) << "\n";
    return kOk;
  }

  std::cout << "stabilizer of quotient class " << c << " (" << q.target.label(rep) << ") in "
            << config_line(s) << "\n";
  std::cout << "stabilizer: order " << stab.order() << ", type " << type << "\n";
  print_table_text(T.base, "  ");
  if (twisted) {
    std::cout << "restricted cochain is nontrivial; projective rows are mu * chi with mu of order "
              << T.mu_order << "\n";
    std::vector<std::vector<std::string>> tab = {{"element:"}, {"mu exponent:"}};
    for (int h = 0; h < local.order(); ++h) {
      tab[0].push_back(local.label(h));
      tab[1].push_back(std::to_string(T.mu_exp[h]));
    }
    print_table(tab, "  ");
  } else {
    std::cout << "restricted cochain is trivial (mu = 1); projective rows equal the plain rows\n";
  }
  return kOk;
}

/* ---------------- irreps ---------------- */

int cmd_irreps(const Session& s) {
  require_text_or_json(s, "irreps");
  const GTQD& D = s.algebra();
  FusionSystem sys(D);
  const QuotientMap& q = D.quotient_map();

  struct Row {
    int index;
    std::string label;
    int size, stab_order;
    std::string type;
    int irreps;
  };
  std::vector<Row> rows;
  for (int c = 0; c < (int)q.target.classes().size(); ++c) {
    const ConjugacyClass& K = q.target.classes()[c];
    const ClassContext& ctx = sys.context(c);
    rows.push_back({c, q.target.label(K.representative), (int)K.members.size(),
                    ctx.stab.order(), recognize_su2_subgroup(ctx.stab).str(),
                    ctx.table.irrep_count()});
  }
  long dim2 = 0;
  for (const IrrepLabel& l : sys.labels()) dim2 += l.dimension * l.dimension;

  if (s.opt.output == "json") {
    json j = envelope(s, "irreps");
    json per = json::array();
    for (const Row& r : rows)
      per.push_back({{"class", r.index},
                     {"label", r.label},
                     {"size", r.size},
                     {"stabilizer", {{"order", r.stab_order}, {"type", r.type}}},
                     {"irreps", r.irreps}});
    j["per_class"] = per;
    json labels = json::array();
    for (int i = 0; i < sys.label_count(); ++i) {
      const IrrepLabel& l = sys.label(i);
      labels.push_back({{"index", i},
                        {"class", l.class_index},
                        {"char", l.stab_char_index},
                        {"dim", l.dimension}});
    }
    j["labels"] = labels;
    j["total"] = sys.label_count();
    j["dimension_identity"] = {{"sum_dim_sq", dim2}, {"quotient_times_group", D.dimension()}};
    std::cout << j.dump(2) << "\n";
    return kOk;
  }

  std::cout << "simple modules of the double for " << config_line(s) << "\n";
  std::vector<std::vector<std::string>> tab = {
      {"class", "label", "size", "stabilizer", "type", "irreps"}};
  for (const Row& r : rows)
    tab.push_back({std::to_string(r.index), r.label, std::to_string(r.size),
                   std::to_string(r.stab_order), r.type, std::to_string(r.irreps)});
  print_table(tab, "  ");
  std::cout << "total: " << sys.label_count()
            << " modules; sum of squared dimensions = " << dim2 << " = |G/N| * |G|\n";
  std::cout << "labels:\n";
  for (int i = 0; i < sys.label_count(); ++i) {
    const IrrepLabel& l = sys.label(i);
    std::cout << "  #" << i << ": class " << l.class_index << " ("
              << q.target.label(q.target.classes()[l.class_index].representative) << "), row "
              << l.stab_char_index << ", dim " << l.dimension << "\n";
  }
  return kOk;
}

/* ---------------- fusion ---------------- */

long checked_multiplicity(const Rational& r) {
  if (r.get_den() != 1 || r < 0)
    throw std::logic_error("fusion multiplicity is not a nonnegative integer");
  return r.get_num().get_si();
}

std::string term_list(const std::vector<std::pair<int, long>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " + ";
    if (terms[i].second != 1) out += std::to_string(terms[i].second) + " ";
    out += "#" + std::to_string(terms[i].first);
  }
  return out;
}

int cmd_fusion(const Session& s, const std::vector<int>& vwu, bool full) {
  require_text_or_json(s, "fusion");
  if (full == !vwu.empty())
    throw ConfigError("fusion needs either three label indices V W U or --full");
  FusionSystem sys(s.algebra());
  int n = sys.label_count();
  for (int i : vwu)
    if (i < 0 || i >= n)
      throw ConfigError("label index " + std::to_string(i) + " is out of range (0.." +
                        std::to_string(n - 1) + ")");

  if (!full) {
    long m = sys.fusion_coefficient(sys.label(vwu[0]), sys.label(vwu[1]), sys.label(vwu[2]));
    if (s.opt.output == "json") {
      json j = envelope(s, "fusion");
      j["v"] = vwu[0];
      j["w"] = vwu[1];
      j["u"] = vwu[2];
      j["multiplicity"] = m;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "multiplicity of #" << vwu[2] << " in #" << vwu[0] << " (x) #" << vwu[1]
                << ": " << m << "\n";
    }
    return kOk;
  }

  std::vector<DoubleCharacter> chars;
  chars.reserve(n);
  for (int i = 0; i < n; ++i) chars.push_back(sys.character(sys.label(i)));
  json triples = json::array();
  std::vector<std::string> lines;
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) {
      DoubleCharacter tc = sys.tensor_character(chars[v], chars[w]);
      std::vector<std::pair<int, long>> terms;
      for (int u = 0; u < n; ++u) {
        long m = checked_multiplicity(sys.inner_product(tc, chars[u]));
        if (m) {
          terms.emplace_back(u, m);
          triples.push_back(json::array({v, w, u, m}));
        }
      }
      lines.push_back("#" + std::to_string(v) + " (x) #" + std::to_string(w) + " = " +
                      term_list(terms));
    }

  if (s.opt.output == "json") {
    json j = envelope(s, "fusion");
    j["full"] = true;
    j["labels"] = n;
    j["triples"] = triples;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "fusion table for " << config_line(s) << " (" << n << " modules)\n";
    for (const std::string& l : lines) std::cout << l << "\n";
  }
  return kOk;
}

/* ---------------- mckay ---------------- */

int cmd_mckay(const Session& s) {
  const GTQD& D = s.algebra();
  FusionSystem sys(D);
  McKayGraph g = build_graph(sys, canonical_module(D.group()));

  if (s.opt.output == "dot") {
    std::cout << mckay_dot(sys, g);
    return kOk;
  }
  if (s.opt.output == "json") {
    json j = envelope(s, "mckay");
    j["mckay"] = mckay_json(sys, g);
    std::cout << j.dump(2) << "\n";
    return kOk;
  }

  const FiniteGroup& T = D.quotient_map().target;
  auto class_name = [&](int c) {
    return c < 0 ? std::string("mixed") : T.label(T.classes()[c].representative);
  };
  std::cout << "fusion graph with the canonical 2-dimensional module for " << config_line(s)
            << "\n";
  std::cout << "nodes: " << g.nodes.size() << "\n";
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    const IrrepLabel& l = g.nodes[i];
    std::cout << "  #" << i << ": class " << l.class_index << " ("
              << class_name(l.class_index) << ") row " << l.stab_char_index << " (dim "
              << l.dimension << ")\n";
  }
  std::cout << "components: " << g.components.size() << "\n";
  for (size_t ci = 0; ci < g.components.size(); ++ci) {
    std::cout << "  " << ci << ": class " << class_name(g.component_class[ci]) << ", type "
              << g.component_type[ci].str() << ", nodes {";
    for (size_t k = 0; k < g.components[ci].size(); ++k)
      std::cout << (k ? ", " : "") << "#" << g.components[ci][k];
    std::cout << "}\n";
  }
  std::cout << "edges:\n";
  for (size_t u = 0; u < g.nodes.size(); ++u)
    for (size_t v = u; v < g.nodes.size(); ++v)
      if (g.adjacency[u][v])
        std::cout << "  #" << u << " -- #" << v << " (" << g.adjacency[u][v] << ")\n";
  return kOk;
}

/* ---------------- verify ---------------- */

struct Check {
  std::string name;
  bool ok = true;
  std::string witness;
};

struct SuiteResult {
  std::string suite;
  std::string note;
  std::vector<Check> checks;

  bool ok() const {
    for (const Check& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

SuiteResult suite_cocycle(const Session& s) {
  const GTQD& D = s.algebra();
  SuiteResult out{"cocycle", "", {}};
  Cocycle3Check c = verify_3cocycle(D.cocycle());
  std::string wit;
  if (!c.ok)
    wit = c.reason + " at (" + std::to_string(c.witness[0]) + "," +
          std::to_string(c.witness[1]) + "," + std::to_string(c.witness[2]) + "," +
          std::to_string(c.witness[3]) + ")";
  out.checks.push_back({"degree-3 identity and normalization of the cocycle", c.ok, wit});

  const QuotientMap& q = D.quotient_map();
  bool all = true;
  std::string w2;
  for (const ConjugacyClass& K : q.target.classes())
    if (!theta_restricted_is_2cocycle(D.cochains(), K.representative)) {
      all = false;
      w2 = "fails on the stabilizer of class " + q.target.label(K.representative);
      break;
    }
  out.checks.push_back({"restricted cochain is a 2-cocycle on every stabilizer", all, w2});
  return out;
}

SuiteResult suite_lemma31(const Session& s) {
  const GTQD& D = s.algebra();
  SuiteResult out{"lemma31", "", {}};
  ThetaTransportCheck t = theta_transport_check(D.cochains());
  std::string wit;
  if (!t.ok)
    wit = "violated at class rep " + D.group().label(t.class_rep) + ", t=" +
          D.group().label(t.t) + ", w=" + D.group().label(t.w);
  out.checks.push_back({"conjugation transport products all equal 1", t.ok, wit});

  FusionSystem sys(D);
  long evals = 0;
  bool ok = true;
  std::string w2;
  try {
    for (int i = 0; i < sys.label_count(); ++i)
      for (int hbar = 0; hbar < D.fiber_order(); ++hbar)
        for (int x = 0; x < D.group().order(); ++x) {
          sys.character_value(sys.label(i), hbar, x);
          ++evals;
        }
  } catch (const std::logic_error& e) {
    ok = false;
    w2 = e.what();
  }
  out.checks.push_back({"character transport factor collapses to 1 (" + std::to_string(evals) +
                            " evaluations)",
                        ok, w2});
  return out;
}

SuiteResult suite_quasihopf(const Session& s) {
  const GTQD& D = s.algebra();
  VerifyMode mode = D.dimension() <= 64 ? VerifyMode::full : VerifyMode::sampled;
  SuiteResult out{"quasihopf",
                  mode == VerifyMode::full
                      ? "full mode (dimension " + std::to_string(D.dimension()) + ")"
                      : "sampled mode (dimension " + std::to_string(D.dimension()) + ", seed " +
                            std::to_string(s.opt.seed) + ")",
                  {}};
  QuasiHopfReport r = verify_quasihopf(D, mode, s.opt.seed);
  for (const AxiomResult& a : r.axioms) out.checks.push_back({a.axiom, a.ok, a.witness});
  return out;
}

SuiteResult suite_normality(const Session& s) {
  const GTQD& D = s.algebra();
  const FiniteGroup& G = D.group();
  const Subgroup& N = D.normal_subgroup();
  SuiteResult out{"normality", "", {}};
  NormalityReport r = normality_report(G, N, D.cocycle());
  out.checks.push_back({"adjoint closure of im phi agrees with centrality of N",
                        r.adjoint_closed == r.centrality, r.detail});
  out.checks.push_back({"image of phi is a normal subalgebra", r.adjoint_closed,
                        r.adjoint_closed ? "" : "not normal as subalgebra: N ⊄ Z(G)"});
  if (r.centrality && (long)G.order() * G.order() <= 4096) {
    ImageQuotientReport qr = quotient_by_normal_image(D);
    bool ok = qr.dimension == N.order() && qr.idempotent_basis;
    std::string wit;
    if (!ok)
      wit = "quotient dimension " + std::to_string(qr.dimension) + ", expected " +
            std::to_string(N.order()) +
            (qr.idempotent_basis ? "" : "; coset idempotents are not a basis");
    out.checks.push_back(
        {"quotient by the image ideal has dimension |N| with an idempotent coset basis", ok,
         wit});
  } else if (r.centrality) {
    out.note = "image quotient skipped (inflated dimension over 4096)";
  }
  return out;
}

SuiteResult suite_orthonormality(const Session& s) {
  const GTQD& D = s.algebra();
  FusionSystem sys(D);
  int n = sys.label_count();
  SuiteResult out{"orthonormality", "", {}};

  std::vector<int> picks;
  if (n <= 128) {
    picks.resize(n);
    for (int i = 0; i < n; ++i) picks[i] = i;
    out.note = "full Gram matrix (" + std::to_string(n) + " characters)";
  } else {
    std::mt19937_64 rng(s.opt.seed);
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    for (int i = 0; i < 10; ++i) {
      int j = i + (int)(rng() % (n - i));
      std::swap(all[i], all[j]);
      picks.push_back(all[i]);
    }
    out.note = "random 10x10 sub-Gram (seed " + std::to_string(s.opt.seed) + ")";
  }

  std::vector<DoubleCharacter> chars;
  chars.reserve(picks.size());
  for (int i : picks) chars.push_back(sys.character(sys.label(i)));
  bool ok = true;
  std::string wit;
  for (size_t a = 0; a < picks.size() && ok; ++a)
    for (size_t b = 0; b < picks.size() && ok; ++b) {
      Rational r = sys.inner_product(chars[a], chars[b]);
      Rational want = picks[a] == picks[b] ? 1 : 0;
      if (r != want) {
        ok = false;
        wit = "<#" + std::to_string(picks[a]) + ", #" + std::to_string(picks[b]) + "> = " +
              r.get_str();
      }
    }
  out.checks.push_back({"Gram matrix of the simple characters is the identity", ok, wit});
  return out;
}

SuiteResult suite_theorem(const Session& s) {
  const GTQD& D = s.algebra();
  FusionSystem sys(D);
  TheoremReport r = verify_theorem(sys, canonical_module(D.group()));
  SuiteResult out{"theorem", "", {}};
  if (!r.asserted)
    out.note = "normal subgroup has order above 2; the decomposition is reported, not asserted";
  for (const TheoremClause& c : r.clauses) {
    if (r.asserted)
      out.checks.push_back({c.name, c.ok, c.ok ? "" : c.witness});
    else
      out.checks.push_back({c.name + " [observed: " + (c.ok ? "holds" : "fails") + "]", true,
                            c.ok ? "" : c.witness});
  }
  return out;
}

int cmd_verify(const Session& s, const std::string& suite) {
  require_text_or_json(s, "verify");
  static const std::vector<std::string> known = {"cocycle",   "lemma31",        "quasihopf",
                                                 "normality", "orthonormality", "theorem"};
  std::vector<std::string> run;
  if (suite == "all") {
    run = known;
  } else {
    bool found = false;
    for (const std::string& k : known) found = found || k == suite;
    if (!found)
      throw ConfigError("unknown suite '" + suite +
                        "' (expected cocycle | lemma31 | quasihopf | normality | "
                        "orthonormality | theorem | all)");
    run = {suite};
  }

  std::vector<SuiteResult> results;
  for (const std::string& name : run) {
    if (name == "cocycle") results.push_back(suite_cocycle(s));
    else if (name == "lemma31") results.push_back(suite_lemma31(s));
    else if (name == "quasihopf") results.push_back(suite_quasihopf(s));
    else if (name == "normality") results.push_back(suite_normality(s));
    else if (name == "orthonormality") results.push_back(suite_orthonormality(s));
    else results.push_back(suite_theorem(s));
  }

  int failed = 0, total = 0;
  for (const SuiteResult& r : results)
    for (const Check& c : r.checks) {
      ++total;
      if (!c.ok) ++failed;
    }

  if (s.opt.output == "json") {
    json j = envelope(s, "verify");
    j["suite"] = suite;
    json suites = json::array();
    for (const SuiteResult& r : results) {
      json checks = json::array();
      for (const Check& c : r.checks)
        checks.push_back({{"name", c.name}, {"ok", c.ok}, {"witness", c.witness}});
      suites.push_back({{"suite", r.suite}, {"note", r.note}, {"checks", checks}});
    }
    j["suites"] = suites;
    j["checks"] = total;
    j["failed"] = failed;
    j["ok"] = failed == 0;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "verify " << suite << " for " << config_line(s) << ", seed " << s.opt.seed
              << "\n";
    for (const SuiteResult& r : results) {
      std::cout << "[" << r.suite << "]" << (r.note.empty() ? "" : " " + r.note) << "\n";
      for (const Check& c : r.checks) {
        std::cout << "  " << (c.ok ? "pass" : "FAIL") << "  " << c.name << "\n";
        if (!c.witness.empty()) std::cout << "        " << c.witness << "\n";
      }
    }
    if (failed == 0)
      std::cout << "result: all " << total << " checks passed\n";
    else
      std::cout << "result: " << failed << " of " << total << " checks failed\n";
  }
  return failed == 0 ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized twisted quantum double of a finite SU(2) subgroup"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--group", opt.group, "group: cyclic:m | bd:n | bt | bo | bi")->required();
  app.add_option("--normal", opt.normal,
                 "normal subgroup: trivial | center | full | gens:<labels>; center is the "
                 "subgroup generated by -I")
      ->capture_default_str();
  app.add_option("--cocycle", opt.cocycle,
                 "cocycle on the quotient: trivial | cyclic:q (cyclic quotients only)")
      ->capture_default_str();
  app.add_option("--output", opt.output, "format: text | json | dot (dot: mckay only)")
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for sampled verification")->capture_default_str();

  CLI::App* c_info = app.add_subcommand("group-info", "orders, classes and stabilizer types");
  CLI::App* c_chartab =
      app.add_subcommand("chartab", "character table of the group or of a class stabilizer");
  int stab_class = -1;
  CLI::Option* stab_opt = c_chartab->add_option(
      "--stabilizer", stab_class, "quotient class index whose stabilizer table to print");
  CLI::App* c_irreps = app.add_subcommand("irreps", "simple modules and per-class counts");
  CLI::App* c_fusion =
      app.add_subcommand("fusion", "fusion multiplicity for labels V W U, or the full tensor");
  std::vector<int> vwu;
  c_fusion->add_option("labels", vwu, "label indices V W U as listed by irreps")->expected(0, 3);
  bool full = false;
  c_fusion->add_flag("--full", full, "decompose every pairwise tensor product");
  CLI::App* c_mckay =
      app.add_subcommand("mckay", "fusion graph with the canonical 2-dimensional module");
  CLI::App* c_verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  c_verify
      ->add_option("--suite", suite,
                   "cocycle | lemma31 | quasihopf | normality | orthonormality | theorem | all")
      ->capture_default_str();

  for (CLI::App* sub : {c_info, c_chartab, c_irreps, c_fusion, c_mckay, c_verify})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kUsage;
  }

  try {
    auto s = open_session(opt);
    if (c_info->parsed()) return cmd_group_info(*s);
    if (c_chartab->parsed())
      return cmd_chartab(*s, stab_opt->count() > 0 ? std::optional<int>(stab_class)
                                                   : std::optional<int>());
    if (c_irreps->parsed()) return cmd_irreps(*s);
    if (c_fusion->parsed()) {
      if (!vwu.empty() && vwu.size() != 3)
        throw ConfigError("fusion needs exactly three label indices, got " +
                          std::to_string(vwu.size()));
      return cmd_fusion(*s, vwu, full);
    }
    if (c_mckay->parsed()) return cmd_mckay(*s);
    return cmd_verify(*s, suite);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kVerifyFailed;
  }
}
