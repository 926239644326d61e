#include "gtqd/chartab.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace gtqd {

namespace {

long mod_mul(long a, long b, long p) { return (a % p) * (b % p) % p; }

long mod_pow(long a, long k, long p) {
  long r = 1 % p;
  a %= p;
  if (a < 0) a += p;
  while (k > 0) {
    if (k & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    k >>= 1;
  }
  return r;
}

long mod_inv(long a, long m) {
  long r0 = m, r1 = ((a % m) + m) % m, t0 = 0, t1 = 1;
  while (r1 != 0) {
    long q = r0 / r1;
    long r2 = r0 - q * r1;
    long t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw std::logic_error("modular inverse of a non-unit");
  return ((t0 % m) + m) % m;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long q : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    if (n % q == 0) return n == q;
  }
  long d = n - 1;
  int s = 0;
  while (d % 2 == 0) d /= 2, ++s;
  for (long a : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    long x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mod_mul(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) out.push_back(n);
  return out;
}

/* smallest prime p = 1 mod e with p^2 > 4n^3 (so p > 2 sqrt(n) n) */
long dixon_prime(long e, long n) {
  long p = e + 1;
  while (p * p <= 4 * n * n * n || !is_prime(p)) {
    p += e;
    if (p > (1L << 40)) throw std::runtime_error("no suitable prime for character lift");
  }
  return p;
}

long primitive_root(long p) {
  std::vector<long> qs = prime_factors(p - 1);
  for (long g = 2; g < p; ++g) {
    bool ok = true;
    for (long q : qs)
      if (mod_pow(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

using Vec = std::vector<long>;
using Mat = std::vector<Vec>;

/* in-place reduced row echelon form; returns pivot columns */
std::vector<int> rref(Mat& rows, long p) {
  std::vector<int> pivots;
  size_t lead = 0;
  int ncols = rows.empty() ? 0 : (int)rows[0].size();
  for (int col = 0; col < ncols && lead < rows.size(); ++col) {
    size_t sel = lead;
    while (sel < rows.size() && rows[sel][col] % p == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[lead], rows[sel]);
    long inv = mod_inv(rows[lead][col], p);
    for (long& x : rows[lead]) x = mod_mul(x, inv, p);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == lead) continue;
      long f = rows[i][col] % p;
      if (f == 0) continue;
      for (int c = 0; c < ncols; ++c)
        rows[i][c] = ((rows[i][c] - mod_mul(f, rows[lead][c], p)) % p + p) % p;
    }
    pivots.push_back(col);
    ++lead;
  }
  rows.resize(lead);
  return pivots;
}

/* kernel basis of the square matrix M over F_p, deterministic */
Mat kernel(Mat M, long p) {
  int s = (int)M.size();
  std::vector<int> pivots = rref(M, p);
  std::vector<char> is_pivot(s, 0);
  for (int c : pivots) is_pivot[c] = 1;
  Mat out;
  for (int free = 0; free < s; ++free) {
    if (is_pivot[free]) continue;
    Vec v(s, 0);
    v[free] = 1;
    for (size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = (p - M[i][free] % p) % p;
    out.push_back(v);
  }
  return out;
}

/* characteristic polynomial (monic, coefficients low to high) via a
   similarity reduction to upper Hessenberg form */
Vec charpoly(Mat A, long p) {
  int s = (int)A.size();
  for (int j = 0; j + 2 < s; ++j) {
    int piv = -1;
    for (int i = j + 1; i < s; ++i)
      if (A[i][j] % p != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      std::swap(A[piv], A[j + 1]);
      for (int i = 0; i < s; ++i) std::swap(A[i][piv], A[i][j + 1]);
    }
    long inv = mod_inv(A[j + 1][j], p);
    for (int i = j + 2; i < s; ++i) {
      long m = mod_mul(A[i][j], inv, p);
      if (m == 0) continue;
      for (int c = 0; c < s; ++c) A[i][c] = ((A[i][c] - mod_mul(m, A[j + 1][c], p)) % p + p) % p;
      for (int r = 0; r < s; ++r) A[r][j + 1] = (A[r][j + 1] + mod_mul(m, A[r][i], p)) % p;
    }
  }
  /* p_k = (x - h_kk) p_{k-1} - sum_i h_ik (prod of subdiagonals) p_{i-1} */
  std::vector<Vec> polys(s + 1);
  polys[0] = {1};
  for (int k = 1; k <= s; ++k) {
    const Vec& prev = polys[k - 1];
    Vec cur(k + 1, 0);
    long hkk = A[k - 1][k - 1] % p;
    for (int t = 0; t < k; ++t) {
      cur[t + 1] = (cur[t + 1] + prev[t]) % p;
      cur[t] = ((cur[t] - mod_mul(hkk, prev[t], p)) % p + p) % p;
    }
    long beta = 1;
    for (int i = k - 1; i >= 1; --i) {
      beta = mod_mul(beta, A[i][i - 1], p);
      long coef = mod_mul(A[i - 1][k - 1], beta, p);
      if (coef == 0) continue;
      const Vec& pi = polys[i - 1];
      for (size_t t = 0; t < pi.size(); ++t)
        cur[t] = ((cur[t] - mod_mul(coef, pi[t], p)) % p + p) % p;
    }
    polys[k] = cur;
  }
  return polys[s];
}

std::vector<long> poly_roots(const Vec& f, long p, int max_roots) {
  std::vector<long> out;
  for (long x = 0; x < p && (int)out.size() < max_roots; ++x) {
    long v = 0;
    for (size_t i = f.size(); i-- > 0;) v = (mod_mul(v, x, p) + f[i]) % p;
    if (v == 0) out.push_back(x);
  }
  return out;
}

long integer_sqrt_exact(long x) {
  long d = 0;
  while ((d + 1) * (d + 1) <= x) ++d;
  if (d * d != x) throw std::logic_error("character degree recovery failed");
  return d;
}

bool row_is_trivial(const std::vector<Cyclotomic>& row) {
  for (const Cyclotomic& v : row)
    if (!(v == Cyclotomic::one())) return false;
  return true;
}

int compare_rows(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    int c = Cyclotomic::compare(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

void verify_table(const CharacterTable& T) {
  const FiniteGroup& G = T.group;
  const auto& classes = G.classes();
  int r = (int)T.rows.size();
  long n = G.order();
  long sum_sq = 0;
  for (long d : T.degrees) {
    if (d < 1 || n % d != 0) throw std::logic_error("irrep degree does not divide group order");
    sum_sq += d * d;
  }
  if (sum_sq != n) throw std::logic_error("degree squares do not sum to the group order");
  if (!row_is_trivial(T.rows[0])) throw std::logic_error("first table row is not trivial");

  auto row_pair = [&](int i, int j) {
    Cyclotomic acc = Cyclotomic::zero();
    for (int c = 0; c < r; ++c) {
      Cyclotomic term = T.rows[i][c] * T.rows[j][c].conj();
      acc = acc + term * Cyclotomic::from_rational(Rational((long)classes[c].members.size()));
    }
    return acc * Cyclotomic::from_rational(Rational(1, n));
  };
  auto col_pair = [&](int i, int j) {
    Cyclotomic acc = Cyclotomic::zero();
    for (int t = 0; t < r; ++t) acc = acc + T.rows[t][i] * T.rows[t][j].conj();
    return acc;
  };
  auto check_row = [&](int i, int j) {
    Cyclotomic want = i == j ? Cyclotomic::one() : Cyclotomic::zero();
    if (!(row_pair(i, j) == want)) throw std::logic_error("row orthogonality violated");
  };
  auto check_col = [&](int i, int j) {
    Cyclotomic want = i == j ? Cyclotomic::from_rational(Rational(n, (long)classes[i].members.size()))
                             : Cyclotomic::zero();
    if (!(col_pair(i, j) == want)) throw std::logic_error("column orthogonality violated");
  };
  if (r <= 60) {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        check_row(i, j);
        check_col(i, j);
      }
  } else {
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<int> pick(0, r - 1);
    for (int t = 0; t < 2000; ++t) {
      check_row(pick(rng), pick(rng));
      check_col(pick(rng), pick(rng));
    }
    for (int i = 0; i < r; ++i) check_row(i, i);
  }
}

} // namespace

CharacterTable character_table(const FiniteGroup& G) {
  CharacterTable T;
  T.group = G;
  const auto& classes = G.classes();
  int r = (int)classes.size();
  long n = G.order();
  if (r == 1) {
    T.degrees = {1};
    T.rows = {{Cyclotomic::one()}};
    return T;
  }

  /* class-sum structure constants: a[i][j][k] = #{(x,y) in C_i x C_j : xy = z_k} */
  std::vector<long> a((size_t)r * r * r, 0);
  auto aref = [&](int i, int j, int k) -> long& { return a[((size_t)i * r + j) * r + k]; };
  for (int k = 0; k < r; ++k) {
    int z = classes[k].representative;
    for (int i = 0; i < r; ++i)
      for (int x : classes[i].members) aref(i, G.class_of(G.mul(G.inv(x), z)), k) += 1;
  }

  long e = G.exponent();
  long p = dixon_prime(e, n);
  long w = primitive_root(p);

  /* split F_p^r into common eigenspaces of the class-multiplication maps */
  std::vector<Mat> spaces;
  {
    Mat full(r, Vec(r, 0));
    for (int i = 0; i < r; ++i) full[i][i] = 1;
    spaces.push_back(full);
  }
  for (int i = 1; i < r; ++i) {
    bool all_lines = true;
    for (const Mat& S : spaces) all_lines = all_lines && S.size() == 1;
    if (all_lines) break;

    Mat Ai(r, Vec(r, 0));
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) Ai[j][k] = aref(i, j, k) % p;

    std::vector<Mat> next;
    for (Mat& S : spaces) {
      int s = (int)S.size();
      if (s == 1) {
        next.push_back(std::move(S));
        continue;
      }
      std::vector<int> pivots = rref(S, p);
      /* restriction C with A * b_l = sum_t C[t][l] b_t, read off via pivots */
      Mat C(s, Vec(s, 0));
      for (int l = 0; l < s; ++l) {
        Vec img(r, 0);
        for (int c = 0; c < r; ++c) {
          if (S[l][c] == 0) continue;
          for (int row = 0; row < r; ++row)
            img[row] = (img[row] + mod_mul(Ai[row][c], S[l][c], p)) % p;
        }
        for (int t = 0; t < s; ++t) {
          long coef = img[pivots[t]] % p;
          C[t][l] = coef;
          if (coef == 0) continue;
          for (int c = 0; c < r; ++c) img[c] = ((img[c] - mod_mul(coef, S[t][c], p)) % p + p) % p;
        }
        for (int c = 0; c < r; ++c)
          if (img[c] % p != 0) throw std::logic_error("class map does not preserve eigenspace");
      }
      Vec poly = charpoly(C, p);
      std::vector<long> roots = poly_roots(poly, p, s);
      int found = 0;
      for (long lam : roots) {
        Mat shifted = C;
        for (int t = 0; t < s; ++t) shifted[t][t] = ((shifted[t][t] - lam) % p + p) % p;
        Mat ker = kernel(shifted, p);
        if (ker.empty()) continue;
        Mat sub;
        for (const Vec& kv : ker) {
          Vec v(r, 0);
          for (int l = 0; l < s; ++l) {
            if (kv[l] == 0) continue;
            for (int c = 0; c < r; ++c) v[c] = (v[c] + mod_mul(kv[l], S[l][c], p)) % p;
          }
          sub.push_back(v);
        }
        found += (int)sub.size();
        next.push_back(std::move(sub));
      }
      if (found != s) throw std::logic_error("class map failed to diagonalize");
    }
    spaces = std::move(next);
  }

  std::vector<Vec> central; /* normalized eigenvectors: central character values */
  for (Mat& S : spaces) {
    if (S.size() != 1) throw std::logic_error("class maps did not separate all characters");
    Vec v = S[0];
    if (v[0] % p == 0) throw std::logic_error("central character vanishes at the identity");
    long inv = mod_inv(v[0], p);
    for (long& x : v) x = mod_mul(x, inv, p);
    central.push_back(v);
  }
  if ((int)central.size() != r) throw std::logic_error("wrong number of characters");

  std::vector<int> jstar(r);
  for (int j = 0; j < r; ++j) jstar[j] = G.class_of(G.inv(classes[j].representative));

  std::vector<std::pair<long, std::vector<Cyclotomic>>> built;
  for (const Vec& v : central) {
    long s = 0;
    for (int j = 0; j < r; ++j) {
      long cj = (long)classes[j].members.size() % p;
      s = (s + mod_mul(mod_mul(v[j], v[jstar[j]], p), mod_inv(cj, p), p)) % p;
    }
    long d2 = mod_mul(n % p, mod_inv(s, p), p);
    long d = integer_sqrt_exact(d2); /* d^2 <= |G| < p, so the residue is exact */

    /* chi mod p on each class, then an exact lift through eigenvalue
       multiplicities of powers of the representative */
    Vec chi_p(r);
    for (int j = 0; j < r; ++j)
      chi_p[j] = mod_mul(mod_mul(d % p, v[j], p), mod_inv((long)classes[j].members.size() % p, p), p);

    std::vector<Cyclotomic> row(r);
    for (int j = 0; j < r; ++j) {
      int g = classes[j].representative;
      long o = G.element_order(g);
      long z_inv = mod_inv(mod_pow(w, (p - 1) / o, p), p);
      long o_inv = mod_inv(o % p, p);
      Cyclotomic val = Cyclotomic::zero();
      long total = 0;
      for (long t = 0; t < o; ++t) {
        long m = 0;
        for (long l = 0; l < o; ++l) {
          long cp = chi_p[G.class_of(G.power(g, l))];
          m = (m + mod_mul(cp, mod_pow(z_inv, t * l, p), p)) % p;
        }
        m = mod_mul(m, o_inv, p);
        if (m > d) throw std::logic_error("eigenvalue multiplicity out of range");
        total += m;
        if (m != 0)
          val = val + Cyclotomic::from_rational(Rational(m)) * Cyclotomic::root(o, t);
      }
      if (total != d) throw std::logic_error("eigenvalue multiplicities do not sum to the degree");
      row[j] = val;
    }
    built.emplace_back(d, std::move(row));
  }

  std::sort(built.begin(), built.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    bool tx = row_is_trivial(x.second), ty = row_is_trivial(y.second);
    if (tx != ty) return tx;
    return compare_rows(x.second, y.second) < 0;
  });
  for (auto& [d, row] : built) {
    T.degrees.push_back(d);
    T.rows.push_back(std::move(row));
  }
  verify_table(T);
  return T;
}

Rational inner_product_ordinary(const FiniteGroup& G, const std::vector<Cyclotomic>& chi1,
                                const std::vector<Cyclotomic>& chi2) {
  const auto& classes = G.classes();
  Cyclotomic acc = Cyclotomic::zero();
  for (size_t c = 0; c < classes.size(); ++c) {
    Cyclotomic term = chi1[c] * chi2[c].conj();
    acc = acc + term * Cyclotomic::from_rational(Rational((long)classes[c].members.size()));
  }
  acc = acc * Cyclotomic::from_rational(Rational(1, G.order()));
  if (!acc.is_rational()) throw std::invalid_argument("inner product is not rational");
  return acc.rational_value();
}

std::vector<Cyclotomic> restrict_class_function(const FiniteGroup& G,
                                                const std::vector<Cyclotomic>& chi_by_class,
                                                const FiniteGroup& H,
                                                const std::vector<int>& to_parent) {
  std::vector<Cyclotomic> out;
  for (const ConjugacyClass& c : H.classes()) {
    Cyclotomic val = chi_by_class[G.class_of(to_parent[c.representative])];
    for (int m : c.members)
      if (!(chi_by_class[G.class_of(to_parent[m])] == val))
        throw std::logic_error("restriction is not constant on subgroup classes");
    out.push_back(val);
  }
  return out;
}

namespace {

/* Linear solver for u(x) + u(y) - u(xy) = t(x,y) over Z_{p^k}, built from a
   pivot list kept in Howell-style form (shadows of non-unit pivots inserted
   so insolubility always surfaces as an inconsistent zero row). */
class CoboundarySolver {
 public:
  CoboundarySolver(long p, int k, int n) : p_(p), n_(n), pk_(1) {
    while (k-- > 0) pk_ *= p;
    pivot_of_col_.assign(n_, -1);
  }

  bool insert(Vec row, long rhs) {
    for (int col = 0; col < n_; ++col) {
      long av = ((row[col] % pk_) + pk_) % pk_;
      row[col] = av;
      if (av == 0) continue;
      long v = valuation(av);
      int at = pivot_of_col_[col];
      if (at < 0) {
        long unit = av;
        for (long i = 0; i < v; ++i) unit /= p_;
        long scale = mod_inv(unit, pk_);
        for (long& x : row) x = mod_mul(x, scale, pk_);
        rhs = mod_mul(((rhs % pk_) + pk_) % pk_, scale, pk_);
        rows_.push_back(row);
        rhs_.push_back(rhs);
        lead_val_.push_back(v);
        pivot_of_col_[col] = (int)rows_.size() - 1;
        if (v > 0) {
          long shadow_mult = pk_;
          for (long i = 0; i < v; ++i) shadow_mult /= p_;
          Vec shadow(n_);
          for (int c = 0; c < n_; ++c) shadow[c] = mod_mul(row[c], shadow_mult, pk_);
          if (!insert(std::move(shadow), mod_mul(rhs, shadow_mult, pk_))) return false;
        }
        return true;
      }
      long w = lead_val_[at];
      if (v >= w) {
        long pw = 1;
        for (long i = 0; i < w; ++i) pw *= p_;
        long m = av / pw;
        for (int c = 0; c < n_; ++c)
          row[c] = ((row[c] - mod_mul(m, rows_[at][c], pk_)) % pk_ + pk_) % pk_;
        rhs = ((rhs - mod_mul(m, rhs_[at], pk_)) % pk_ + pk_) % pk_;
      } else {
        /* smaller valuation: the new row becomes the pivot */
        Vec old = rows_[at];
        long old_rhs = rhs_[at];
        long unit = av;
        for (long i = 0; i < v; ++i) unit /= p_;
        long scale = mod_inv(unit, pk_);
        for (long& x : row) x = mod_mul(x, scale, pk_);
        rhs = mod_mul(((rhs % pk_) + pk_) % pk_, scale, pk_);
        rows_[at] = row;
        rhs_[at] = rhs;
        lead_val_[at] = v;
        if (v > 0) {
          long shadow_mult = pk_;
          for (long i = 0; i < v; ++i) shadow_mult /= p_;
          Vec shadow(n_);
          for (int c = 0; c < n_; ++c) shadow[c] = mod_mul(row[c], shadow_mult, pk_);
          if (!insert(std::move(shadow), mod_mul(rhs, shadow_mult, pk_))) return false;
        }
        return insert(std::move(old), old_rhs);
      }
    }
    return ((rhs % pk_) + pk_) % pk_ == 0;
  }

  Vec solve() const {
    Vec u(n_, 0);
    for (int col = n_ - 1; col >= 0; --col) {
      int at = pivot_of_col_[col];
      if (at < 0) continue;
      long acc = rhs_[at];
      for (int c = col + 1; c < n_; ++c)
        acc = ((acc - mod_mul(rows_[at][c], u[c], pk_)) % pk_ + pk_) % pk_;
      long pv = 1;
      for (long i = 0; i < lead_val_[at]; ++i) pv *= p_;
      if (acc % pv != 0) throw std::logic_error("trivializer back-substitution failed");
      u[col] = (acc / pv) % (pk_ / pv);
    }
    return u;
  }

  long modulus() const { return pk_; }

 private:
  long valuation(long x) const {
    long v = 0;
    while (x % p_ == 0) x /= p_, ++v;
    return v;
  }

  long p_;
  int n_;
  long pk_;
  std::vector<Vec> rows_;
  Vec rhs_;
  std::vector<long> lead_val_;
  std::vector<int> pivot_of_col_;
};

} // namespace

TwistedCharacterTable twisted_table(const FiniteGroup& H,
                                    const std::function<long(int, int)>& theta_exp,
                                    long theta_order) {
  int n = H.order();
  long M = theta_order;
  auto t = [&](int x, int y) { return ((theta_exp(x, y) % M) + M) % M; };

  for (int x = 0; x < n; ++x)
    if (t(0, x) != 0 || t(x, 0) != 0)
      throw std::invalid_argument("2-cochain is not normalized");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xy = H.mul(x, y);
      for (int z = 0; z < n; ++z)
        if ((t(x, y) + t(xy, z) - t(x, H.mul(y, z)) - t(y, z)) % M != 0)
          throw std::invalid_argument("2-cochain violates the cocycle identity");
    }

  TwistedCharacterTable out;
  out.base = character_table(H);

  bool all_zero = true;
  for (int x = 0; x < n && all_zero; ++x)
    for (int y = 0; y < n && all_zero; ++y) all_zero = t(x, y) == 0;

  if (all_zero) {
    out.mu_order = 1;
    out.mu_exp.assign(n, 0);
  } else {
    /* any trivializer mu satisfies mu^{M e} = 1: mu^M is a character of H */
    long big = M * H.exponent();
    out.mu_order = big;
    out.mu_exp.assign(n, 0);

    long rem = big;
    std::vector<std::pair<long, int>> powers;
    for (long q = 2; q * q <= rem; ++q)
      if (rem % q == 0) {
        int k = 0;
        while (rem % q == 0) rem /= q, ++k;
        powers.emplace_back(q, k);
      }
    if (rem > 1) powers.emplace_back(rem, 1);

    std::vector<Vec> locals;
    std::vector<long> moduli;
    for (auto [q, k] : powers) {
      CoboundarySolver solver(q, k, n);
      long lift = big / M;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          Vec row(n, 0);
          row[x] += 1;
          row[y] += 1;
          row[H.mul(x, y)] -= 1;
          if (!solver.insert(std::move(row), t(x, y) * lift % solver.modulus()))
            throw std::runtime_error(
                "2-cocycle is not a coboundary: nontrivial cohomology class");
        }
      locals.push_back(solver.solve());
      moduli.push_back(solver.modulus());
    }
    for (int h = 0; h < n; ++h) {
      long x = 0, m = 1;
      for (size_t i = 0; i < locals.size(); ++i) {
        long mi = moduli[i];
        long diff = ((locals[i][h] - x) % mi + mi) % mi;
        long step = mod_mul(diff, mod_inv(m % mi, mi), mi);
        x += m * step;
        m *= mi;
      }
      out.mu_exp[h] = ((x % big) + big) % big;
    }
    long lift = big / M;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        long d = out.mu_exp[x] + out.mu_exp[y] - out.mu_exp[H.mul(x, y)] - t(x, y) * lift;
        if (((d % big) + big) % big != 0)
          throw std::logic_error("trivializer verification failed");
      }
  }

  /* rows follow the base table's row order: row i is mu times base row i.
     this keeps row indices meaningful across different cochains on the same
     subgroup (the pairing with ordinary characters does not move) */
  out.degrees = out.base.degrees;
  for (int i = 0; i < out.base.irrep_count(); ++i) {
    std::vector<Cyclotomic> row(n);
    for (int h = 0; h < n; ++h) row[h] = out.mu(h) * out.base.value(i, h);
    out.rows.push_back(std::move(row));
  }

  for (int i = 0; i < (int)out.rows.size(); ++i)
    for (int j = 0; j < (int)out.rows.size(); ++j) {
      Cyclotomic acc = Cyclotomic::zero();
      for (int h = 0; h < n; ++h) acc = acc + out.rows[i][h] * out.rows[j][h].conj();
      acc = acc * Cyclotomic::from_rational(Rational(1, n));
      Cyclotomic want = i == j ? Cyclotomic::one() : Cyclotomic::zero();
      if (!(acc == want)) throw std::logic_error("twisted rows are not orthonormal");
    }
  return out;
}

}  // namespace gtqd
