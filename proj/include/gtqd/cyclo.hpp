#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace gtqd {

using Rational = mpq_class;
using BigInt = mpz_class;

/* Coefficient vector of the m-th cyclotomic polynomial, ascending degree,
 * monic, integer coefficients.  Computed by exact division of x^m - 1 by the
 * lower-order cyclotomic factors; results are memoized process-wide. */
const std::vector<BigInt>& cyclotomic_polynomial(long m);

/* An element of Q(zeta_m), stored as the canonical residue mod Phi_m:
 * coeffs[i] multiplies zeta_m^i, and the vector length is exactly
 * deg Phi_m = phi(m).  Every value remembers the order it was constructed
 * at; binary operations lift both sides to the lcm of their orders and the
 * result stays there (orders are never shrunk behind the caller's back). */
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), c_(1) {}

  static Cyclotomic zero() { return Cyclotomic(); }
  static Cyclotomic one() { return from_rational(1); }
  static Cyclotomic from_rational(const Rational& r);
  /* zeta_m^k (k taken mod m) */
  static Cyclotomic root(long m, long k);

  long order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  /* true when the value lies in Q (all basis coefficients above 1 vanish) */
  bool is_rational() const;
  /* the rational value; throws std::domain_error when not rational */
  Rational rational_value() const;

  /* complex conjugate, i.e. zeta |-> zeta^{-1} */
  Cyclotomic conj() const;
  /* multiplicative inverse; throws std::domain_error on zero */
  Cyclotomic inverse() const;
  /* numeric embedding at zeta_m = exp(2*pi*i/m) */
  std::complex<double> to_complex() const;

  /* rewrite at order M (requires order() | M); value unchanged */
  Cyclotomic lifted_to(long M) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    return a * b.inverse();
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return compare(a, b) == 0;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) {
    return compare(a, b) != 0;
  }

  /* total order used for deterministic sorting: lift to the common order,
   * then compare coefficient vectors lexicographically */
  static int compare(const Cyclotomic& a, const Cyclotomic& b);

  /* short human-readable form, e.g. "1/2 - 1/2*z8^2" with z<m> = zeta_m */
  std::string str() const;

 private:
  Cyclotomic(long order, std::vector<Rational> c) : order_(order), c_(std::move(c)) {}
  static Cyclotomic reduce(long m, std::vector<Rational> poly);

  long order_;
  std::vector<Rational> c_;
};

Cyclotomic pow(Cyclotomic base, unsigned long e);

}  // namespace gtqd
