#include "gtqd/polyhedral.hpp"

#include <stdexcept>

namespace gtqd {

namespace {

Mat2 diag_root(long m) {
  return Mat2{{Cyclotomic::root(m, 1), Cyclotomic::zero(), Cyclotomic::zero(),
               Cyclotomic::root(m, -1)}};
}

/* quaternion a+bi+cj+dk as a unitary 2x2 matrix */
Mat2 quat(const Cyclotomic& a, const Cyclotomic& b, const Cyclotomic& c, const Cyclotomic& d) {
  Cyclotomic i = Cyclotomic::root(4, 1);
  return Mat2{{a + b * i, c + d * i, -c + d * i, a - b * i}};
}

void check_generators(const std::vector<Mat2>& gens) {
  for (const Mat2& g : gens)
    if (g.det() != Cyclotomic::one())
      throw std::runtime_error("generator with determinant != 1");
}

}  // namespace

std::string SU2GroupId::str() const {
  switch (family) {
    case SU2Family::Cyclic:
      return "cyclic:" + std::to_string(parameter);
    case SU2Family::BinaryDihedral:
      return "bd:" + std::to_string(parameter);
    case SU2Family::BinaryTetrahedral:
      return "bt";
    case SU2Family::BinaryOctahedral:
      return "bo";
    case SU2Family::BinaryIcosahedral:
      return "bi";
  }
  return "?";
}

FiniteGroup build_su2_group(const SU2GroupId& id) {
  std::vector<Mat2> gens;
  std::vector<std::string> names;
  long expected_order = 0;
  long expected_center = 2;

  Cyclotomic half = Cyclotomic::from_rational(Rational(1, 2));
  Cyclotomic mhalf = -half;

  switch (id.family) {
    case SU2Family::Cyclic:
      if (id.parameter < 1) throw std::invalid_argument("cyclic order must be >= 1");
      gens = {diag_root(id.parameter)};
      names = {"x"};
      expected_order = id.parameter;
      expected_center = id.parameter;
      break;
    case SU2Family::BinaryDihedral:
      if (id.parameter < 1) throw std::invalid_argument("binary dihedral parameter must be >= 1");
      gens = {diag_root(2 * id.parameter),
              Mat2{{Cyclotomic::zero(), Cyclotomic::one(), -Cyclotomic::one(), Cyclotomic::zero()}}};
      names = {"x", "y"};
      expected_order = 4 * id.parameter;
      // n = 1 gives the abelian group generated by y alone (y has order 4).
      expected_center = id.parameter == 1 ? 4 : 2;
      break;
    case SU2Family::BinaryTetrahedral:
    case SU2Family::BinaryOctahedral:
    case SU2Family::BinaryIcosahedral: {
      Mat2 qi = quat(Cyclotomic::zero(), Cyclotomic::one(), Cyclotomic::zero(), Cyclotomic::zero());
      Mat2 qw = quat(mhalf, half, half, half);
      gens = {qi, qw};
      names = {"x", "y"};
      if (id.family == SU2Family::BinaryOctahedral) {
        gens.push_back(diag_root(8));
        names.push_back("z");
        expected_order = 48;
      } else if (id.family == SU2Family::BinaryIcosahedral) {
        /* golden ratio p = zeta_10 + zeta_10^-1, and p^-1 = p - 1 */
        Cyclotomic p = Cyclotomic::root(10, 1) + Cyclotomic::root(10, -1);
        Cyclotomic pinv = p - Cyclotomic::one();
        gens.push_back(quat(p * half, pinv * half, half, Cyclotomic::zero()));
        names.push_back("z");
        expected_order = 120;
      } else {
        expected_order = 24;
      }
      break;
    }
  }

  check_generators(gens);
  FiniteGroup G = FiniteGroup::generate(gens, names);
  if (G.order() != expected_order)
    throw std::runtime_error("unexpected group order " + std::to_string(G.order()) + " for " +
                             id.str());
  if (center(G).order() != expected_center)
    throw std::runtime_error("unexpected center for " + id.str());
  return G;
}

SU2GroupId recognize_su2_subgroup(const Subgroup& S) {
  const FiniteGroup& G = *S.parent;
  int n = S.order();
  for (int g : S.elements)
    if (G.element_order(g) == n) return {SU2Family::Cyclic, n};
  if (n % 4 == 0) {
    for (int g : S.elements)
      if (G.element_order(g) == n / 2) return {SU2Family::BinaryDihedral, n / 4};
  }
  FiniteGroup H = materialize(S, nullptr, nullptr);
  int k = (int)H.classes().size();
  if (n == 24 && k == 7) return {SU2Family::BinaryTetrahedral, 0};
  if (n == 48 && k == 8) return {SU2Family::BinaryOctahedral, 0};
  if (n == 120 && k == 9) return {SU2Family::BinaryIcosahedral, 0};
  throw std::invalid_argument("subgroup is not on the SU(2) list (order " + std::to_string(n) +
                              ", " + std::to_string(k) + " classes)");
}

std::vector<Cyclotomic> canonical_w_values(const FiniteGroup& G) {
  if (!G.has_matrix_rep())
    throw std::invalid_argument("defining character needs a matrix realization");
  std::vector<Cyclotomic> w;
  w.reserve(G.order());
  for (int g = 0; g < G.order(); ++g) w.push_back(G.matrix(g).trace());
  if (w[0] != Cyclotomic::from_rational(2))
    throw std::runtime_error("defining representation is not 2-dimensional");
  /* must be a class function */
  for (const ConjugacyClass& c : G.classes())
    for (int m : c.members)
      if (w[m] != w[c.representative]) throw std::runtime_error("trace is not a class function");
  return w;
}

}  // namespace gtqd
