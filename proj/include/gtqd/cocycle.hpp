#pragma once

#include <array>
#include <string>
#include <vector>

#include "gtqd/cyclo.hpp"
#include "gtqd/group.hpp"

namespace gtqd {

/* Normalized 3-cocycle on a finite group, with all values roots of unity.
   Stored as exponents e(a,b,c) so that omega(a,b,c) = zeta_M^{e(a,b,c)}. */
struct Cocycle3 {
  FiniteGroup group;           // the group the table is indexed over
  long value_order = 1;        // M: every value lies in the M-th roots of unity
  std::vector<long> exponents; // n^3 entries, exponent of zeta_M, in [0, M)

  long exponent(int a, int b, int c) const {
    int n = group.order();
    return exponents[((long)a * n + b) * n + c];
  }
  Cyclotomic value(int a, int b, int c) const {
    return Cyclotomic::root(value_order, exponent(a, b, c));
  }
};

Cocycle3 trivial_cocycle(const FiniteGroup& G);

/* omega(a,b,c) = zeta_n^{q*a*floor((b+c)/n)} on the cyclic group of order n,
   elements identified with residues 0..n-1. */
Cocycle3 cyclic_cocycle(long n, long q);

/* The same family transported onto an existing cyclic group via its
   lowest-index generator of full order. Throws if G is not cyclic. */
Cocycle3 cyclic_cocycle_on(const FiniteGroup& G, long q);

struct Cocycle3Check {
  bool ok = true;
  std::array<int, 4> witness{-1, -1, -1, -1}; // violating quadruple when !ok
  std::string reason;
};

/* Checks normalization and the degree-3 identity
   w(h,k,l) w(g,hk,l) w(g,h,k) = w(gh,k,l) w(g,h,kl).
   Exhaustive for |G| <= 60, otherwise 10^6 deterministic random quadruples. */
Cocycle3Check verify_3cocycle(const Cocycle3& w);

/* A 3-cocycle on the quotient target pulled back to the source group.
   All evaluators take source-group element indices. */
class InflatedCocycle {
 public:
  InflatedCocycle(const Cocycle3& base, const QuotientMap& map);

  const Cocycle3& base() const { return *base_; }
  const QuotientMap& map() const { return *map_; }
  long value_order() const { return base_->value_order; }

  long omega_exp(int g, int x, int y) const;
  long theta_exp(int g, int x, int y) const;
  long gamma_exp(int g, int x, int y) const;

  Cyclotomic omega(int g, int x, int y) const;
  /* theta_g(x,y) = w(g,x,y) w(x,y,g^{xy}) / w(x,g,y^g), arguments projected */
  Cyclotomic theta(int g, int x, int y) const;
  /* gamma_g(x,y) = w(x,y,g) w(g,x^g,y^g) / w(x,g,y^g), arguments projected */
  Cyclotomic gamma(int g, int x, int y) const;

 private:
  const Cocycle3* base_;
  const QuotientMap* map_;
};

/* Verifies the degree-2 identity for theta_g restricted to the stabilizer
   of gbar (a class representative index in the quotient target), exhaustively:
   theta_g(x,y) theta_g(xy,z) = theta_g(x,yz) theta_g(y,z). */
bool theta_restricted_is_2cocycle(const InflatedCocycle& w, int gbar);

struct ThetaTransportCheck {
  bool ok = true;
  int class_rep = -1; // source-group lift of the failing class representative
  int t = -1;         // stabilizer element
  int w = -1;         // coset representative
};

/* For every conjugacy class of the quotient with lifted representative f,
   every t in the stabilizer C of fbar and every coset representative w of C:
   theta_{wfw^-1}(wtw^-1, w) * theta_f(w, t)^-1 = 1 exactly. */
ThetaTransportCheck theta_transport_check(const InflatedCocycle& w);

} // namespace gtqd
