#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gtqd/cyclo.hpp"

namespace gtqd {

/* 2x2 matrix over the cyclotomics, row major: a[0] a[1] / a[2] a[3] */
struct Mat2 {
  std::array<Cyclotomic, 4> a;

  static Mat2 identity();
  Cyclotomic det() const { return a[0] * a[3] - a[1] * a[2]; }
  Cyclotomic trace() const { return a[0] + a[3]; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return Mat2{{x.a[0] * y.a[0] + x.a[1] * y.a[2], x.a[0] * y.a[1] + x.a[1] * y.a[3],
                 x.a[2] * y.a[0] + x.a[3] * y.a[2], x.a[2] * y.a[1] + x.a[3] * y.a[3]}};
  }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a[0] == y.a[0] && x.a[1] == y.a[1] && x.a[2] == y.a[2] && x.a[3] == y.a[3];
  }
};

struct ConjugacyClass {
  int representative = 0;        /* minimal element index in the class */
  std::vector<int> members;      /* ascending */
  std::vector<int> conjugators;  /* conjugators[i] * rep * conjugators[i]^-1 = members[i] */
};

/* Immutable finite group on indices 0..order-1 with 0 the identity.
 * Everything (inverses, element orders, conjugacy data) is computed up
 * front, so const access is safe from any number of threads. */
class FiniteGroup {
 public:
  /* empty shell; use from_table or generate to build a real group */
  FiniteGroup() = default;

  /* table[a][b] = index of a*b; identity must be index 0.  Labels default
   * to g<i>.  A 2x2 matrix image may be attached (one matrix per element). */
  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                std::vector<std::string> labels = {},
                                std::vector<Mat2> matrices = {});

  /* BFS closure of exact matrix generators; elements are indexed in
   * discovery order starting from the identity.  Labels are compressed
   * generator words ("e", "x", "y", "x2y", ...).  Throws when the closure
   * exceeds cap. */
  static FiniteGroup generate(const std::vector<Mat2>& generators,
                              const std::vector<std::string>& generator_names,
                              int cap = 10000);

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[(size_t)a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return 0; }
  int conjugate(int g, int by) const { return mul(mul(by, g), inv(by)); }
  int power(int a, long k) const;
  int element_order(int a) const { return elt_order_[a]; }
  long exponent() const { return exponent_; }
  bool is_abelian() const { return abelian_; }

  const std::string& label(int a) const { return labels_[a]; }
  /* resolves a stored word label or the positional form g<i> */
  std::optional<int> element_by_label(const std::string& s) const;

  bool has_matrix_rep() const { return !mats_.empty(); }
  const Mat2& matrix(int a) const { return mats_[a]; }

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  int class_of(int a) const { return class_of_[a]; }

 private:
  void finish_construction();

  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<int> elt_order_;
  long exponent_ = 1;
  bool abelian_ = true;
  std::vector<std::string> labels_;
  std::vector<Mat2> mats_;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;
};

/* A subset of a parent group, closed under multiplication and inverse. */
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<int> elements;  /* ascending */
  std::vector<char> mask;     /* size parent->order() */

  int order() const { return (int)elements.size(); }
  bool contains(int g) const { return mask[g] != 0; }
};

/* closure of the given elements inside G */
Subgroup subgroup_from(const FiniteGroup& G, const std::vector<int>& gens);
Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup full_subgroup(const FiniteGroup& G);
Subgroup center(const FiniteGroup& G);
/* the subgroup generated by the central elements of order <= 2 (for the
 * SU(2) groups this is <-I>, or trivial when no involution exists) */
Subgroup central_involutions(const FiniteGroup& G);
bool is_normal(const FiniteGroup& G, const Subgroup& S);

/* G -> G/N with an explicit section.  target element 0 is the image of the
 * identity and section(0) = 0; the section picks the minimal coset member. */
struct QuotientMap {
  const FiniteGroup* source = nullptr;
  Subgroup normal;
  FiniteGroup target;
  std::vector<int> projection;  /* source index -> target index */
  std::vector<int> section;     /* target index -> source index */
};

QuotientMap quotient(const FiniteGroup& G, const Subgroup& N);

/* right conjugation action of x in G on gbar in the quotient target:
 * xbar^-1 * gbar * xbar */
int conj_by_image(const QuotientMap& q, int gbar, int x);

/* {x in G : xbar^-1 gbar xbar = gbar}; always contains N */
Subgroup stabilizer_in_source(const QuotientMap& q, int gbar);

/* Subgroup as a standalone group; fills index maps between the parent and
 * the local numbering (to_local is -1 off the subgroup). */
FiniteGroup materialize(const Subgroup& S, std::vector<int>* to_parent,
                        std::vector<int>* to_local);

}  // namespace gtqd
