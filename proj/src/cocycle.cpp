#include "gtqd/cocycle.hpp"

#include <random>
#include <stdexcept>

namespace gtqd {

namespace {

long positive_mod(long e, long m) { return ((e % m) + m) % m; }

/* right conjugation b^-1 a b inside G */
int rconj(const FiniteGroup& G, int a, int b) { return G.mul(G.mul(G.inv(b), a), b); }

void require_valid(const Cocycle3& w, const char* what) {
  Cocycle3Check chk = verify_3cocycle(w);
  if (!chk.ok) throw std::logic_error(std::string(what) + ": " + chk.reason);
}

} // namespace

Cocycle3 trivial_cocycle(const FiniteGroup& G) {
  Cocycle3 w;
  w.group = G;
  w.value_order = 1;
  long n = G.order();
  w.exponents.assign(n * n * n, 0);
  return w;
}

Cocycle3 cyclic_cocycle(long n, long q) {
  if (n < 1) throw std::invalid_argument("cyclic cocycle order must be >= 1");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (long i = 0; i < n; ++i) {
    labels[i] = std::to_string(i);
    for (long j = 0; j < n; ++j) table[i][j] = (int)((i + j) % n);
  }
  Cocycle3 w;
  w.group = FiniteGroup::from_table(table, labels);
  w.value_order = n;
  w.exponents.assign(n * n * n, 0);
  long qr = positive_mod(q, n);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long c = 0; c < n; ++c)
        w.exponents[(a * n + b) * n + c] = positive_mod(qr * a * ((b + c) / n), n);
  require_valid(w, "cyclic cocycle construction");
  return w;
}

Cocycle3 cyclic_cocycle_on(const FiniteGroup& G, long q) {
  long n = G.order();
  int gen = -1;
  for (int g = 0; g < n; ++g)
    if (G.element_order(g) == n) {
      gen = g;
      break;
    }
  if (gen < 0) throw std::invalid_argument("cyclic cocycle requires a cyclic group");
  std::vector<long> dlog(n, -1);
  int cur = G.identity();
  for (long k = 0; k < n; ++k) {
    dlog[cur] = k;
    cur = G.mul(cur, gen);
  }
  Cocycle3 w;
  w.group = G;
  w.value_order = n;
  w.exponents.assign(n * n * n, 0);
  long qr = positive_mod(q, n);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long c = 0; c < n; ++c)
        w.exponents[(a * n + b) * n + c] =
            positive_mod(qr * dlog[a] * ((dlog[b] + dlog[c]) / n), n);
  require_valid(w, "cyclic cocycle transport");
  return w;
}

Cocycle3Check verify_3cocycle(const Cocycle3& w) {
  const FiniteGroup& G = w.group;
  long n = G.order();
  long M = w.value_order;
  Cocycle3Check out;

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (positive_mod(w.exponent(0, a, b), M) != 0 ||
          positive_mod(w.exponent(a, 0, b), M) != 0 ||
          positive_mod(w.exponent(a, b, 0), M) != 0) {
        out.ok = false;
        out.witness = {a, b, -1, -1};
        out.reason = "not normalized";
        return out;
      }
    }

  auto holds = [&](int g, int h, int k, int l) {
    long lhs = w.exponent(h, k, l) + w.exponent(g, G.mul(h, k), l) + w.exponent(g, h, k);
    long rhs = w.exponent(G.mul(g, h), k, l) + w.exponent(g, h, G.mul(k, l));
    return positive_mod(lhs - rhs, M) == 0;
  };
  auto fail = [&](int g, int h, int k, int l) {
    out.ok = false;
    out.witness = {g, h, k, l};
    out.reason = "cocycle identity violated";
    return out;
  };

  if (n <= 60) {
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l)
            if (!holds(g, h, k, l)) return fail(g, h, k, l);
  } else {
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<int> pick(0, (int)n - 1);
    for (long i = 0; i < 1000000; ++i) {
      int g = pick(rng), h = pick(rng), k = pick(rng), l = pick(rng);
      if (!holds(g, h, k, l)) return fail(g, h, k, l);
    }
  }
  return out;
}

InflatedCocycle::InflatedCocycle(const Cocycle3& base, const QuotientMap& map)
    : base_(&base), map_(&map) {
  const FiniteGroup& A = base.group;
  const FiniteGroup& B = map.target;
  if (A.order() != B.order())
    throw std::invalid_argument("cocycle group does not match the quotient target");
  for (int i = 0; i < A.order(); ++i)
    for (int j = 0; j < A.order(); ++j)
      if (A.mul(i, j) != B.mul(i, j))
        throw std::invalid_argument("cocycle group does not match the quotient target");
}

long InflatedCocycle::omega_exp(int g, int x, int y) const {
  const std::vector<int>& pr = map_->projection;
  return base_->exponent(pr[g], pr[x], pr[y]);
}

long InflatedCocycle::theta_exp(int g, int x, int y) const {
  const std::vector<int>& pr = map_->projection;
  const FiniteGroup& B = base_->group;
  int gb = pr[g], xb = pr[x], yb = pr[y];
  int xyb = B.mul(xb, yb);
  long e = base_->exponent(gb, xb, yb) + base_->exponent(xb, yb, rconj(B, gb, xyb)) -
           base_->exponent(xb, gb, rconj(B, yb, gb));
  return positive_mod(e, base_->value_order);
}

long InflatedCocycle::gamma_exp(int g, int x, int y) const {
  const std::vector<int>& pr = map_->projection;
  const FiniteGroup& B = base_->group;
  int gb = pr[g], xb = pr[x], yb = pr[y];
  long e = base_->exponent(xb, yb, gb) +
           base_->exponent(gb, rconj(B, xb, gb), rconj(B, yb, gb)) -
           base_->exponent(xb, gb, rconj(B, yb, gb));
  return positive_mod(e, base_->value_order);
}

Cyclotomic InflatedCocycle::omega(int g, int x, int y) const {
  return Cyclotomic::root(base_->value_order, omega_exp(g, x, y));
}

Cyclotomic InflatedCocycle::theta(int g, int x, int y) const {
  return Cyclotomic::root(base_->value_order, theta_exp(g, x, y));
}

Cyclotomic InflatedCocycle::gamma(int g, int x, int y) const {
  return Cyclotomic::root(base_->value_order, gamma_exp(g, x, y));
}

bool theta_restricted_is_2cocycle(const InflatedCocycle& w, int gbar) {
  const QuotientMap& q = w.map();
  const FiniteGroup& G = *q.source;
  Subgroup C = stabilizer_in_source(q, gbar);
  int g = q.section[gbar];
  long M = w.value_order();
  for (int x : C.elements)
    for (int y : C.elements) {
      int xy = G.mul(x, y);
      for (int z : C.elements) {
        long lhs = w.theta_exp(g, x, y) + w.theta_exp(g, xy, z);
        long rhs = w.theta_exp(g, x, G.mul(y, z)) + w.theta_exp(g, y, z);
        if (positive_mod(lhs - rhs, M) != 0) return false;
      }
    }
  return true;
}

ThetaTransportCheck theta_transport_check(const InflatedCocycle& w) {
  const QuotientMap& q = w.map();
  const FiniteGroup& G = *q.source;
  long M = w.value_order();
  for (const ConjugacyClass& cl : q.target.classes()) {
    int fbar = cl.representative;
    int f = q.section[fbar];
    Subgroup C = stabilizer_in_source(q, fbar);
    std::vector<char> covered(G.order(), 0);
    for (int rep = 0; rep < G.order(); ++rep) {
      if (covered[rep]) continue;
      for (int c : C.elements) covered[G.mul(rep, c)] = 1;
      int frep = G.conjugate(f, rep);
      for (int t : C.elements) {
        long e = w.theta_exp(frep, G.conjugate(t, rep), rep) - w.theta_exp(f, rep, t);
        if (positive_mod(e, M) != 0) return {false, f, t, rep};
      }
    }
  }
  return {};
}

} // namespace gtqd
