#include "gtqd/fusion.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gtqd {

namespace {

long pm(long e, long M) {
  long r = e % M;
  return r < 0 ? r + M : r;
}

} // namespace

FusionSystem::FusionSystem(const GTQD& D) : D_(D) {
  const FiniteGroup& G = D_.group();
  const QuotientMap& q = D_.quotient_map();
  const FiniteGroup& T = q.target;
  const InflatedCocycle& w = D_.cochains();
  long M = w.value_order();

  identity_class_ = T.class_of(T.identity());
  int nc = (int)T.classes().size();
  ctx_.reserve(nc);
  label_at_.resize(nc);
  long dim2 = 0;
  for (int c = 0; c < nc; ++c) {
    ClassContext K;
    K.rep = T.classes()[c].representative;
    K.lift = q.section[K.rep];
    K.stab = stabilizer_in_source(q, K.rep);
    K.local = materialize(K.stab, &K.to_parent, &K.to_local);
    int lift = K.lift;
    const std::vector<int>& tp = K.to_parent;
    K.table = twisted_table(
        K.local, [&w, lift, &tp](int i, int j) { return w.theta_exp(lift, tp[i], tp[j]); }, M);
    long class_size = (long)T.classes()[c].members.size();
    for (int r = 0; r < K.table.irrep_count(); ++r) {
      IrrepLabel l{c, r, class_size * K.table.degrees[r]};
      label_at_[c].push_back((int)labels_.size());
      labels_.push_back(l);
      dim2 += l.dimension * l.dimension;
    }
    ctx_.push_back(std::move(K));
  }
  if (dim2 != (long)T.order() * G.order())
    throw std::logic_error("simple-module dimensions do not fill the algebra: sum of squares " +
                           std::to_string(dim2) + " != " +
                           std::to_string((long)T.order() * G.order()));
}

int FusionSystem::label_index(int class_index, int stab_char_index) const {
  return label_at_.at(class_index).at(stab_char_index);
}

/* shared evaluation at e(hbar)|x|x through the conjugator y, where
   ybar rep ybar^-1 = hbar and rep is the class representative of l:
     delta(z in C) * theta_{hbar}(xbar, ybar) theta_{rep}(ybar, zbar)^-1 * chi(z)
   with z = y^-1 x y.  The theta ratio is 1 whenever z lands in the
   stabilizer; both sides are computed and compared. */
Cyclotomic FusionSystem::value_with(const ClassContext& K, const IrrepLabel& l, int x,
                                    int y) const {
  const FiniteGroup& G = D_.group();
  const InflatedCocycle& w = D_.cochains();
  long M = w.value_order();
  int z = G.conjugate(x, G.inv(y));
  if (!K.stab.contains(z)) return Cyclotomic::zero();
  long e = pm(w.theta_exp(G.conjugate(K.lift, y), x, y) - w.theta_exp(K.lift, y, z), M);
  const Cyclotomic& plain = K.table.rows[l.stab_char_index][K.to_local[z]];
  Cyclotomic full = Cyclotomic::root(M, e) * plain;
  if (e != 0 || full != plain)
    throw std::logic_error("conjugation transport factor is not 1 at class " +
                           std::to_string(l.class_index) + ", x=" + G.label(x) +
                           ", y=" + G.label(y));
  return full;
}

Cyclotomic FusionSystem::character_value(const IrrepLabel& l, int hbar, int x) const {
  const FiniteGroup& T = D_.quotient_map().target;
  if (T.class_of(hbar) != l.class_index) return Cyclotomic::zero();
  const ConjugacyClass& cls = T.classes()[l.class_index];
  auto it = std::lower_bound(cls.members.begin(), cls.members.end(), hbar);
  int ybar = cls.conjugators[it - cls.members.begin()];
  return value_with(ctx_[l.class_index], l, x, D_.quotient_map().section[ybar]);
}

Cyclotomic FusionSystem::character_value_via(const IrrepLabel& l, int hbar, int x, int y) const {
  const QuotientMap& q = D_.quotient_map();
  const ClassContext& K = ctx_.at(l.class_index);
  if (q.target.conjugate(K.rep, q.projection[y]) != hbar)
    throw std::invalid_argument("conjugator does not carry the class representative to " +
                                q.target.label(hbar));
  return value_with(K, l, x, y);
}

DoubleCharacter FusionSystem::character(const IrrepLabel& l) const {
  return {l.class_index, [this, l](int hbar, int x) { return character_value(l, hbar, x); }};
}

Rational FusionSystem::inner_product(const DoubleCharacter& a, const DoubleCharacter& b) const {
  const FiniteGroup& G = D_.group();
  const FiniteGroup& T = D_.quotient_map().target;
  const std::vector<int>& sec = D_.quotient_map().section;
  Cyclotomic s;
  int c = b.class_index >= 0 ? b.class_index : a.class_index;
  if (c >= 0) {
    /* one side vanishes off {(hbar, y t y^-1) : t in C}; walk only that set */
    const ConjugacyClass& cls = T.classes()[c];
    const ClassContext& K = ctx_[c];
    for (size_t i = 0; i < cls.members.size(); ++i) {
      int hbar = cls.members[i];
      int y = sec[cls.conjugators[i]];
      for (int t : K.stab.elements) {
        int x = G.conjugate(t, y);
        Cyclotomic va = a.eval(hbar, x);
        if (va.is_zero()) continue;
        s += va * b.eval(hbar, x).conj();
      }
    }
  } else {
    for (int hbar = 0; hbar < T.order(); ++hbar)
      for (int x = 0; x < G.order(); ++x) {
        Cyclotomic va = a.eval(hbar, x);
        if (va.is_zero()) continue;
        s += va * b.eval(hbar, x).conj();
      }
  }
  s *= Cyclotomic::from_rational(Rational(1, G.order()));
  return s.rational_value();
}

DoubleCharacter FusionSystem::tensor_character(const DoubleCharacter& a,
                                               const DoubleCharacter& b) const {
  return {-1, [this, a, b](int kbar, int x) {
            const FiniteGroup& T = D_.quotient_map().target;
            const std::vector<int>& sec = D_.quotient_map().section;
            const InflatedCocycle& w = D_.cochains();
            long M = w.value_order();
            Cyclotomic s;
            auto term = [&](int abar) {
              int bbar = T.mul(T.inv(abar), kbar);
              Cyclotomic va = a.eval(abar, x);
              if (va.is_zero()) return;
              Cyclotomic vb = b.eval(bbar, x);
              if (vb.is_zero()) return;
              s += Cyclotomic::root(M, w.gamma_exp(x, sec[abar], sec[bbar])) * va * vb;
            };
            if (a.class_index >= 0)
              for (int abar : T.classes()[a.class_index].members) term(abar);
            else
              for (int abar = 0; abar < T.order(); ++abar) term(abar);
            return s;
          }};
}

long FusionSystem::integer_coefficient(const Rational& r, const char* what) const {
  if (r < 0 || r.get_den() != 1 || !r.get_num().fits_slong_p())
    throw std::logic_error(std::string(what) + " is not a nonnegative integer: " + r.get_str());
  return r.get_num().get_si();
}

long FusionSystem::fusion_coefficient(const IrrepLabel& V, const IrrepLabel& W,
                                      const IrrepLabel& U) const {
  Rational r = inner_product(tensor_character(character(V), character(W)), character(U));
  return integer_coefficient(r, "fusion multiplicity");
}

long FusionSystem::fusion_with_G_module(const IrrepLabel& V, const std::vector<Cyclotomic>& w_values,
                                        const IrrepLabel& U) const {
  const FiniteGroup& G = D_.group();
  if ((int)w_values.size() != G.order())
    throw std::invalid_argument("module character needs one value per group element");
  for (const ConjugacyClass& cls : G.classes())
    for (int m : cls.members)
      if (w_values[m] != w_values[cls.representative])
        throw std::invalid_argument("module character is not a class function");

  long local = 0;
  if (V.class_index == U.class_index) {
    const ClassContext& K = ctx_.at(V.class_index);
    Cyclotomic s;
    for (int t = 0; t < K.local.order(); ++t)
      s += K.table.rows[V.stab_char_index][t] * w_values[K.to_parent[t]] *
           K.table.rows[U.stab_char_index][t].conj();
    s *= Cyclotomic::from_rational(Rational(1, K.local.order()));
    local = integer_coefficient(s.rational_value(), "stabilizer-local multiplicity");
  }

  /* the same multiplicity through the generic tensor character; the two
     computations share no code path beyond the tables themselves */
  DoubleCharacter what{identity_class_, [&w_values](int hbar, int x) {
                         return hbar == 0 ? w_values[x] : Cyclotomic::zero();
                       }};
  Rational r = inner_product(tensor_character(character(V), what), character(U));
  long general = integer_coefficient(r, "fusion multiplicity");
  if (general != local)
    throw std::logic_error("stabilizer-local fusion rule disagrees with the tensor computation: " +
                           std::to_string(local) + " vs " + std::to_string(general));
  return local;
}

std::vector<Cyclotomic> FusionSystem::values_on_group(const IrrepLabel& l) const {
  if (l.class_index != identity_class_)
    throw std::invalid_argument("only identity-class labels are characters of the source group");
  const ClassContext& K = ctx_[identity_class_];
  const FiniteGroup& G = D_.group();
  std::vector<Cyclotomic> out;
  out.reserve(G.order());
  for (int x = 0; x < G.order(); ++x)
    out.push_back(K.table.rows[l.stab_char_index][K.to_local[x]]);
  return out;
}

std::vector<IrrepLabel> simple_modules(const GTQD& D) { return FusionSystem(D).labels(); }

} // namespace gtqd
