#include "gtqd/serialize.hpp"

#include <stdexcept>

namespace gtqd {

namespace {

nlohmann::json bigint_to_json(const BigInt& z) {
  if (z.fits_slong_p()) {
    long v = z.get_si();
    if (v >= -((long)1 << 53) && v <= ((long)1 << 53)) return v;
  }
  return z.get_str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt((long)j.get<int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

}  // namespace

nlohmann::json rational_to_json(const Rational& r) {
  return nlohmann::json::array({bigint_to_json(r.get_num()), bigint_to_json(r.get_den())});
}

Rational rational_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("rational must be a [num, den] pair");
  Rational r(bigint_from_json(j[0]), bigint_from_json(j[1]));
  if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
  r.canonicalize();
  return r;
}

nlohmann::json cyclotomic_to_json(const Cyclotomic& v) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Rational& c : v.coeffs()) coeffs.push_back(rational_to_json(c));
  return nlohmann::json{{"order", v.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const nlohmann::json& j) {
  long order = j.at("order").get<long>();
  const auto& coeffs = j.at("coeffs");
  size_t deg = cyclotomic_polynomial(order).size() - 1;
  if (!coeffs.is_array() || coeffs.size() != deg)
    throw std::invalid_argument("coefficient count must equal deg Phi_m");
  Cyclotomic acc = Cyclotomic::zero();
  for (size_t i = 0; i < coeffs.size(); ++i) {
    Rational c = rational_from_json(coeffs[i]);
    if (c == 0) continue;
    acc += Cyclotomic::from_rational(c) * Cyclotomic::root(order, (long)i);
  }
  /* pin the order even when high coefficients vanish */
  return acc.lifted_to(order);
}

nlohmann::json structure_constants_json(const GTQD& D) {
  nlohmann::json basis = nlohmann::json::array();
  for (long i = 0; i < D.dimension(); ++i) basis.push_back(D.basis_name(i));
  nlohmann::json triples = nlohmann::json::array();
  for (long i = 0; i < D.dimension(); ++i) {
    AlgebraElement a = basis_element(D, D.fiber_part(i), D.group_part(i));
    for (long j = 0; j < D.dimension(); ++j) {
      AlgebraElement p =
          multiply(a, basis_element(D, D.fiber_part(j), D.group_part(j)));
      for (const auto& [k, c] : p.coeffs)
        triples.push_back(nlohmann::json::array({i, j, k, cyclotomic_to_json(c)}));
    }
  }
  return nlohmann::json{{"schema", "gtqd/1"},
                        {"dimension", D.dimension()},
                        {"basis", basis},
                        {"triples", triples}};
}

}  // namespace gtqd
