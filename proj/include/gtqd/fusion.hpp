#pragma once

#include <functional>
#include <vector>

#include "gtqd/chartab.hpp"
#include "gtqd/qdouble.hpp"

namespace gtqd {

/* One simple module of D^w(G,N): a conjugacy class fbar of the quotient
   together with an irreducible projective character of the lifted stabilizer
   C = {x in G : xbar fbar xbar^-1 = fbar}.  dimension = |class| * degree. */
struct IrrepLabel {
  int class_index = 0;     /* conjugacy class of the quotient target */
  int stab_char_index = 0; /* row of the stabilizer's projective table */
  long dimension = 0;

  friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
};

/* Cached data for one quotient class: the lifted representative, its
   stabilizer inside the source group, that stabilizer as a standalone group,
   and the projective character table of the restricted 2-cocycle. */
struct ClassContext {
  int rep = 0;  /* class representative, a quotient element */
  int lift = 0; /* section lift of rep into the source group */
  Subgroup stab;
  FiniteGroup local;
  std::vector<int> to_parent; /* local index -> source index */
  std::vector<int> to_local;  /* source index -> local index, -1 off stab */
  TwistedCharacterTable table;
};

/* A character of the double, as an evaluator on basis elements e(hbar)|x|x.
   class_index is the quotient class carrying the support when that support
   lies in a single class (simple characters, G-module characters); -1 for
   composites such as tensor characters. */
struct DoubleCharacter {
  int class_index = -1;
  std::function<Cyclotomic(int hbar, int x)> eval;
};

/* The simple modules of D^w(G,N) and their exact character theory: values,
   inner products, tensor characters, fusion multiplicities.  Construction
   computes one projective stabilizer table per quotient class and checks
   sum(dimension^2) = |quotient| * |G|.  All methods are const and pure;
   returned evaluators reference this object and must not outlive it. */
class FusionSystem {
 public:
  explicit FusionSystem(const GTQD& D);

  const GTQD& algebra() const { return D_; }
  const std::vector<ClassContext>& contexts() const { return ctx_; }
  const ClassContext& context(int class_index) const { return ctx_.at(class_index); }
  const std::vector<IrrepLabel>& labels() const { return labels_; }
  const IrrepLabel& label(int i) const { return labels_.at(i); }
  int label_count() const { return (int)labels_.size(); }
  /* position of (class, row) in the deterministic label order */
  int label_index(int class_index, int stab_char_index) const;
  /* index of the class of the quotient identity */
  int identity_class() const { return identity_class_; }

  /* chi(e(hbar)|x|x) for the simple module l: zero unless hbar lies in the
     label's class and the conjugated argument z = y^-1 x y lands in the
     stabilizer; otherwise the stabilizer character at z.  The conjugator y
     lifts the stored class conjugator.  Both the transport-factor-laden
     expression and the plain one are evaluated and must agree (the transport
     factor collapses to 1); a mismatch throws std::logic_error. */
  Cyclotomic character_value(const IrrepLabel& l, int hbar, int x) const;
  /* same value computed through an explicit source-group conjugator y with
     ybar fbar ybar^-1 = hbar (throws std::invalid_argument otherwise) */
  Cyclotomic character_value_via(const IrrepLabel& l, int hbar, int x, int y) const;

  DoubleCharacter character(const IrrepLabel& l) const;

  /* (1/|G|) sum over (hbar, x) of a * conj(b), the sum restricted to the
     support of whichever argument is simple; exact rational result */
  Rational inner_product(const DoubleCharacter& a, const DoubleCharacter& b) const;

  /* character of the tensor module: coproduct weights gamma_xbar(abar, bbar)
     folded against both factor characters */
  DoubleCharacter tensor_character(const DoubleCharacter& a, const DoubleCharacter& b) const;

  /* multiplicity of U in V (x) W via tensor_character and inner_product;
     throws std::logic_error unless the result is a nonnegative integer */
  long fusion_coefficient(const IrrepLabel& V, const IrrepLabel& W, const IrrepLabel& U) const;

  /* multiplicity of U in V (x) What, where W is an ordinary character of the
     source group given by element-indexed values (must be a class function);
     computed by the stabilizer-local rule
       (1/|C|) sum_t chiV(t) W(t) conj(chiU(t))
     over the common stabilizer, zero when the classes differ, and
     cross-checked on every call against the general tensor computation */
  long fusion_with_G_module(const IrrepLabel& V, const std::vector<Cyclotomic>& w_values,
                            const IrrepLabel& U) const;

  /* an identity-class label is an ordinary character of the source group;
     returns its element-indexed values */
  std::vector<Cyclotomic> values_on_group(const IrrepLabel& l) const;

 private:
  Cyclotomic value_with(const ClassContext& K, const IrrepLabel& l, int x, int y) const;
  long integer_coefficient(const Rational& r, const char* what) const;

  GTQD D_;
  std::vector<ClassContext> ctx_;
  std::vector<IrrepLabel> labels_;
  std::vector<std::vector<int>> label_at_; /* [class][row] -> label position */
  int identity_class_ = 0;
};

/* the label list alone, in the same deterministic order */
std::vector<IrrepLabel> simple_modules(const GTQD& D);

} // namespace gtqd
