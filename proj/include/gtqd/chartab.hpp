#pragma once

#include <functional>
#include <vector>

#include "gtqd/cyclo.hpp"
#include "gtqd/group.hpp"

namespace gtqd {

/* Exact irreducible character table.  rows[i][c] is the value of the i-th
   character on the c-th conjugacy class of the group.  Rows are sorted by
   degree, the trivial character first among degree-1 rows, then by value
   sequence under the group's class order.  Row and column orthogonality are
   verified at construction. */
struct CharacterTable {
  FiniteGroup group;
  std::vector<long> degrees;
  std::vector<std::vector<Cyclotomic>> rows;

  int irrep_count() const { return (int)rows.size(); }
  const Cyclotomic& value(int row, int element) const {
    return rows[row][group.class_of(element)];
  }
};

/* Burnside-Dixon: simultaneous diagonalization of the class-multiplication
   matrices over a prime field F_p with p = 1 mod exponent(G), followed by
   an exact lift of eigenvalue data to cyclotomic integers. */
CharacterTable character_table(const FiniteGroup& G);

/* (1/|G|) sum_g chi1(g) conj(chi2(g)) for class functions given by values
   on conjugacy classes.  Throws if the result is not rational. */
Rational inner_product_ordinary(const FiniteGroup& G, const std::vector<Cyclotomic>& chi1,
                                const std::vector<Cyclotomic>& chi2);

/* Pointwise restriction of a class function on G to the subgroup H given by
   its standalone group and the local-to-parent index map; verifies the
   restriction is constant on H-classes. */
std::vector<Cyclotomic> restrict_class_function(const FiniteGroup& G,
                                                const std::vector<Cyclotomic>& chi_by_class,
                                                const FiniteGroup& H,
                                                const std::vector<int>& to_parent);

/* Projective character table for a 2-cocycle theta on H with values in the
   M-th roots of unity.  A trivializer mu with  mu(x)mu(y)/mu(xy) = theta(x,y)
   is found by exact linear algebra on exponents modulo M * exponent(H); the
   twisted rows are mu * chi, indexed by group element (they are not class
   functions).  Row i is mu times row i of the base table, so row indices
   pair with the same ordinary characters for every cochain on the same
   subgroup.  Throws when theta is not a coboundary. */
struct TwistedCharacterTable {
  CharacterTable base;
  long mu_order = 1;          // all trivializer values are mu_order-th roots
  std::vector<long> mu_exp;   // mu(h) = zeta_{mu_order}^{mu_exp[h]}
  std::vector<long> degrees;
  std::vector<std::vector<Cyclotomic>> rows; // rows[i][h], element-indexed

  int irrep_count() const { return (int)rows.size(); }
  Cyclotomic mu(int h) const { return Cyclotomic::root(mu_order, mu_exp[h]); }
};

TwistedCharacterTable twisted_table(const FiniteGroup& H,
                                    const std::function<long(int, int)>& theta_exp,
                                    long theta_order);

}  // namespace gtqd
