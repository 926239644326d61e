#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "gtqd/fusion.hpp"
#include "gtqd/polyhedral.hpp"

namespace gtqd {

/* Extended affine Dynkin diagram label.  index is node count minus one for
   recognized diagrams; family '?' marks an unrecognized shape and carries a
   witness describing it. */
struct ADELabel {
  char family = '?'; /* 'A', 'D', 'E', or '?' */
  int index = 0;
  std::string witness;

  bool recognized() const { return family != '?'; }
  std::string str() const;

  friend bool operator==(const ADELabel& a, const ADELabel& b) {
    return a.family == b.family && (a.family == '?' || a.index == b.index);
  }
};

/* Fusion graph of the simple modules under tensoring with a fixed
   self-dual module: nodes in label order, symmetric multiplicity matrix,
   connected components with their supporting quotient class (-1 when a
   component mixes classes) and their diagram classification. */
struct McKayGraph {
  std::vector<IrrepLabel> nodes;
  std::vector<std::vector<long>> adjacency;
  std::vector<std::vector<int>> components; /* sorted by least node index */
  std::vector<int> component_of;            /* node -> component */
  std::vector<int> component_class;
  std::vector<ADELabel> component_type;
};

/* Character values of the defining 2-dimensional module, element-indexed:
   the matrix trace when the group carries matrices, else a faithful linear
   character plus its dual for a cyclic group; throws otherwise. */
std::vector<Cyclotomic> canonical_module(const FiniteGroup& G);

/* adjacency[u][v] = multiplicity of node v in (node u) tensor What, computed
   class by class with the stabilizer-local rule (cross-checked internally on
   every entry); throws std::logic_error if the result is not symmetric. */
McKayGraph build_graph(const FusionSystem& sys, const std::vector<Cyclotomic>& w_values);
McKayGraph build_graph(const GTQD& D, const std::vector<Cyclotomic>& w_values);

/* connected components of a symmetric multiplicity matrix, each sorted,
   ordered by least member */
std::vector<std::vector<int>> graph_components(const std::vector<std::vector<long>>& adjacency);

/* Decide which extended affine diagram the induced subgraph on `nodes` is:
   a double edge on two nodes is A~1; a simple 2-regular cycle on m nodes is
   A~(m-1); trees are matched against the D~ and E~ shapes by degree sequence
   and arm lengths.  Anything else (loops, other multi-edges, paths, wider
   stars) comes back unrecognized with a witness. */
ADELabel classify_ADE(const std::vector<std::vector<long>>& adjacency,
                      const std::vector<int>& nodes);

/* The original correspondence, used as the independent oracle: nodes are the
   ordinary irreducible characters of H, edges pair multiplicities against
   the defining module. */
McKayGraph classical_mckay(const FiniteGroup& H);

/* diagram expected for a stabilizer: identify the subgroup on the SU(2)
   list, then map Cyclic(m) -> A~(m-1), BinaryDihedral(n) -> D~(n+2),
   2T -> E~6, 2O -> E~7, 2I -> E~8 */
ADELabel expected_correspondent(const Subgroup& H);

struct TheoremClause {
  std::string name;
  bool ok = true;
  std::string witness; /* empty when ok */
};

/* Decomposition of the fusion graph checked clause by clause:
   (i) one component per quotient conjugacy class, (ii) each component is
   exactly the label set of one class, (iii) each component's diagram is the
   correspondent of the class stabilizer, (iv) classes of order > 2 give
   even cycles.  `asserted` is true when the normal subgroup has order at
   most 2 (the regime the decomposition is claimed in); outside it the
   report is informational. */
struct TheoremReport {
  McKayGraph graph;
  std::vector<TheoremClause> clauses;
  bool ok = true;
  bool asserted = true;
};

TheoremReport verify_theorem(const FusionSystem& sys, const std::vector<Cyclotomic>& w_values);
TheoremReport verify_theorem(const GTQD& D);

/* DOT rendering: one cluster per component labelled "class=<rep> type=<ADE>",
   node labels "<class rep>/<char index> (dim d)", edge weights are
   multiplicities.  Byte-stable: nodes in label order, edges lexicographic. */
std::string mckay_dot(const FusionSystem& sys, const McKayGraph& g);

/* the same structure as JSON: nodes, components, edges [u, v, weight] */
nlohmann::json mckay_json(const FusionSystem& sys, const McKayGraph& g);

} // namespace gtqd
