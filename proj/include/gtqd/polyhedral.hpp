#pragma once

#include "gtqd/group.hpp"

namespace gtqd {

enum class SU2Family {
  Cyclic,            /* Z_m */
  BinaryDihedral,    /* <2,2,n>, order 4n */
  BinaryTetrahedral, /* <2,3,3>, order 24 */
  BinaryOctahedral,  /* <2,3,4>, order 48 */
  BinaryIcosahedral, /* <2,3,5>, order 120 */
};

struct SU2GroupId {
  SU2Family family;
  long parameter = 0; /* m for Cyclic, n for BinaryDihedral, unused otherwise */

  friend bool operator==(const SU2GroupId&, const SU2GroupId&) = default;
  std::string str() const;
};

/* Build the finite SU(2) subgroup as an exact matrix group.
 * Generator conventions (quaternions map to matrices via
 * a+bi+cj+dk -> [[a+bi, c+di], [-c+di, a-bi]]):
 *   Cyclic m:          x = diag(zeta_m, zeta_m^-1)
 *   BinaryDihedral n:  x = diag(zeta_2n, zeta_2n^-1), y = [[0,1],[-1,0]]
 *   BinaryTetrahedral: x = i, y = (-1+i+j+k)/2
 *   BinaryOctahedral:  x = i, y = (-1+i+j+k)/2, z = diag(zeta_8, zeta_8^-1)
 *   BinaryIcosahedral: x = i, y = (-1+i+j+k)/2, z = (p + p^-1 i + j)/2
 *                      with p the golden ratio, entries in Q(zeta_20)
 * Construction verifies determinants, the expected order, and the center. */
FiniteGroup build_su2_group(const SU2GroupId& id);

/* Identify a subgroup of an SU(2) group up to isomorphism: cyclic first,
 * then binary dihedral (order 4n with an element of order 2n), then the
 * three exceptional groups by order and class count. */
SU2GroupId recognize_su2_subgroup(const Subgroup& S);

/* Character of the defining 2-dimensional representation: the matrix trace,
 * one value per element.  For cyclic groups this equals the sum of a
 * faithful 1-dimensional character and its dual. */
std::vector<Cyclotomic> canonical_w_values(const FiniteGroup& G);

}  // namespace gtqd
