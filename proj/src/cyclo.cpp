#include "gtqd/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gtqd {

namespace {

/* exact division of integer polynomials, quotient only; asserts exactness */
std::vector<BigInt> poly_div_exact(const std::vector<BigInt>& num,
                                   const std::vector<BigInt>& den) {
  std::vector<BigInt> r = num;
  if (den.empty() || den.back() == 0)
    throw std::invalid_argument("polynomial division by zero");
  long dn = (long)r.size() - 1, dd = (long)den.size() - 1;
  if (dn < dd) throw std::runtime_error("inexact polynomial division");
  std::vector<BigInt> q(dn - dd + 1);
  for (long i = dn; i >= dd; --i) {
    if (r[i] == 0) continue;
    BigInt c = r[i] / den[dd];
    if (c * den[dd] != r[i]) throw std::runtime_error("inexact polynomial division");
    q[i - dd] = c;
    for (long j = 0; j <= dd; ++j) r[i - dd + j] -= c * den[j];
  }
  for (const BigInt& c : r)
    if (c != 0) throw std::runtime_error("inexact polynomial division");
  return q;
}

std::vector<long> divisors_of(long m) {
  std::vector<long> d;
  for (long i = 1; i * i <= m; ++i)
    if (m % i == 0) {
      d.push_back(i);
      if (i != m / i) d.push_back(m / i);
    }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(long m) {
  static std::map<long, std::vector<BigInt>> memo;
  static std::mutex mu;
  if (m <= 0) throw std::invalid_argument("cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;

  /* every divisor of m only has divisors that again divide m, so filling the
   * table in ascending divisor order needs no recursion */
  for (long d : divisors_of(m)) {
    if (memo.count(d)) continue;
    std::vector<BigInt> poly(d + 1);
    poly[0] = -1;
    poly[d] = 1;
    for (long e : divisors_of(d))
      if (e != d) poly = poly_div_exact(poly, memo.at(e));
    memo.emplace(d, std::move(poly));
  }
  return memo.at(m);
}

Cyclotomic Cyclotomic::reduce(long m, std::vector<Rational> poly) {
  const auto& phi = cyclotomic_polynomial(m);
  size_t deg = phi.size() - 1;
  if (poly.size() < deg) poly.resize(deg);
  for (size_t i = poly.size(); i-- > deg;) {
    if (poly[i] == 0) continue;
    Rational c = poly[i];
    poly[i] = 0;
    /* x^deg = -sum_{j<deg} phi[j] x^j, shifted by i-deg */
    for (size_t j = 0; j < deg; ++j) {
      if (phi[j] == 0) continue;
      poly[i - deg + j] -= c * Rational(phi[j]);
    }
  }
  poly.resize(deg);
  for (Rational& r : poly) r.canonicalize();
  return Cyclotomic(m, std::move(poly));
}

Cyclotomic Cyclotomic::from_rational(const Rational& r) {
  std::vector<Rational> c(1);
  c[0] = r;
  c[0].canonicalize();
  return Cyclotomic(1, std::move(c));
}

Cyclotomic Cyclotomic::root(long m, long k) {
  if (m <= 0) throw std::invalid_argument("root of unity needs positive order");
  k %= m;
  if (k < 0) k += m;
  std::vector<Rational> poly(k + 1);
  poly[k] = 1;
  return reduce(m, std::move(poly));
}

bool Cyclotomic::is_zero() const {
  for (const Rational& r : c_)
    if (r != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("value is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::conj() const {
  /* zeta^i |-> zeta^{m-i}; rebuild as an unreduced polynomial of degree < m */
  std::vector<Rational> poly(order_);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    long j = i == 0 ? 0 : order_ - (long)i;
    poly[j] += c_[i];
  }
  return reduce(order_, std::move(poly));
}

Cyclotomic Cyclotomic::lifted_to(long M) const {
  if (M == order_) return *this;
  if (M % order_ != 0) throw std::invalid_argument("lift target must be a multiple of the order");
  long r = M / order_;
  std::vector<Rational> poly((c_.size() - 1) * r + 1);
  for (size_t i = 0; i < c_.size(); ++i) poly[i * r] = c_[i];
  return reduce(M, std::move(poly));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (Rational& r : out.c_) r = -r;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  long M = std::lcm(order_, o.order_);
  if (order_ != M) *this = lifted_to(M);
  if (o.order_ != M) {
    Cyclotomic t = o.lifted_to(M);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += t.c_[i];
  } else {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  long M = std::lcm(order_, o.order_);
  if (order_ != M) *this = lifted_to(M);
  if (o.order_ != M) {
    Cyclotomic t = o.lifted_to(M);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= t.c_[i];
  } else {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  long M = std::lcm(order_, o.order_);
  Cyclotomic a = order_ == M ? *this : lifted_to(M);
  Cyclotomic b = o.order_ == M ? o : o.lifted_to(M);
  std::vector<Rational> poly(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      poly[i + j] += a.c_[i] * b.c_[j];
    }
  }
  *this = reduce(M, std::move(poly));
  return *this;
}

namespace {

/* polynomial helpers over Q for the extended Euclid inverse */
using QPoly = std::vector<Rational>;

void qp_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qp_divmod(QPoly num, const QPoly& den, QPoly* quot) {
  if (quot) quot->assign(num.size(), Rational(0));
  long dd = (long)den.size() - 1;
  for (long i = (long)num.size() - 1; i >= dd; --i) {
    if (num[i] == 0) continue;
    Rational c = num[i] / den[dd];
    if (quot) (*quot)[i - dd] = c;
    for (long j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  qp_trim(num);
  if (quot) qp_trim(*quot);
  return num;
}

}  // namespace

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
  /* extended Euclid on (Phi_m, value): maintain t with t*value = r (mod Phi) */
  const auto& phi_z = cyclotomic_polynomial(order_);
  QPoly r0(phi_z.size());
  for (size_t i = 0; i < phi_z.size(); ++i) r0[i] = Rational(phi_z[i]);
  QPoly r1(c_.begin(), c_.end());
  qp_trim(r1);
  QPoly t0, t1{Rational(1)};
  while (r1.size() > 1) {
    QPoly q;
    QPoly r2 = qp_divmod(r0, r1, &q);
    /* t2 = t0 - q*t1 */
    QPoly qt;
    if (!q.empty() && !t1.empty()) {
      qt.assign(q.size() + t1.size() - 1, Rational(0));
      for (size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        for (size_t j = 0; j < t1.size(); ++j) qt[i + j] += q[i] * t1[j];
      }
    }
    QPoly t2(std::max(t0.size(), qt.size()));
    for (size_t i = 0; i < t0.size(); ++i) t2[i] = t0[i];
    for (size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
    qp_trim(t2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r1.empty()) throw std::runtime_error("inverse: gcd degenerated (reducible modulus?)");
  Rational g = r1[0];
  for (Rational& c : t1) c /= g;
  t1.resize(std::max<size_t>(t1.size(), 1));
  return reduce(order_, QPoly(t1.begin(), t1.end()));
}

std::complex<double> Cyclotomic::to_complex() const {
  const double two_pi = 6.283185307179586476925286766559;
  std::complex<double> z = std::polar(1.0, two_pi / (double)order_);
  std::complex<double> acc(0.0, 0.0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * z + std::complex<double>(c_[i].get_d());
  return acc;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  long M = std::lcm(a.order_, b.order_);
  Cyclotomic la = a.order_ == M ? a : a.lifted_to(M);
  Cyclotomic lb = b.order_ == M ? b : b.lifted_to(M);
  for (size_t i = 0; i < la.c_.size(); ++i) {
    int c = cmp(la.c_[i], lb.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational r = c_[i];
    if (first) {
      if (r < 0) {
        os << "-";
        r = -r;
      }
    } else {
      os << (r < 0 ? " - " : " + ");
      if (r < 0) r = -r;
    }
    first = false;
    bool unit_coeff = (r == 1) && i != 0;
    if (!unit_coeff) os << r.get_str();
    if (i != 0) {
      if (!unit_coeff) os << "*";
      os << "z" << order_;
      if (i != 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

Cyclotomic pow(Cyclotomic base, unsigned long e) {
  Cyclotomic acc = Cyclotomic::one();
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace gtqd
