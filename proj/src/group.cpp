#include "gtqd/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace gtqd {

Mat2 Mat2::identity() {
  return Mat2{{Cyclotomic::one(), Cyclotomic::zero(), Cyclotomic::zero(), Cyclotomic::one()}};
}

namespace {

/* canonical byte key of a matrix with all entries at the host order */
std::string matrix_key(const Mat2& m, long host) {
  std::ostringstream os;
  for (const Cyclotomic& e : m.a) {
    Cyclotomic lifted = e.lifted_to(host);
    for (const Rational& r : lifted.coeffs()) os << r.get_str() << ',';
    os << ';';
  }
  return os.str();
}

/* compressed generator word: runs of one letter become letter+count */
std::string word_label(const std::vector<int>& word, const std::vector<std::string>& names) {
  if (word.empty()) return "e";
  std::ostringstream os;
  size_t i = 0;
  while (i < word.size()) {
    size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    os << names[word[i]];
    if (j - i > 1) os << (j - i);
    i = j;
  }
  return os.str();
}

}  // namespace

void FiniteGroup::finish_construction() {
  n_ = (int)labels_.size();
  if (table_.size() != (size_t)n_ * n_) throw std::invalid_argument("malformed multiplication table");
  for (int v : table_)
    if (v < 0 || v >= n_) throw std::invalid_argument("table entry out of range");

  /* two-sided identity at index 0 */
  for (int a = 0; a < n_; ++a)
    if (mul(0, a) != a || mul(a, 0) != a)
      throw std::invalid_argument("index 0 is not a two-sided identity");

  /* inverses: each row must hit the identity exactly once */
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == 0) {
        if (inv_[a] != -1) throw std::invalid_argument("element with two right inverses");
        inv_[a] = b;
      }
    if (inv_[a] == -1) throw std::invalid_argument("element without inverse");
    if (mul(inv_[a], a) != 0) throw std::invalid_argument("right inverse is not a left inverse");
  }

  /* associativity: exhaustive at desk scale, sampled above it */
  if (n_ <= 360) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw std::invalid_argument("multiplication table is not associative");
  } else {
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<int> pick(0, n_ - 1);
    for (int t = 0; t < 1000000; ++t) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        throw std::invalid_argument("multiplication table is not associative");
    }
  }

  abelian_ = true;
  for (int a = 0; a < n_ && abelian_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) {
        abelian_ = false;
        break;
      }

  elt_order_.assign(n_, 1);
  exponent_ = 1;
  for (int a = 0; a < n_; ++a) {
    int k = 1, x = a;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    elt_order_[a] = k;
    exponent_ = std::lcm(exponent_, (long)k);
  }

  /* conjugacy classes in ascending-representative order; the first
   * conjugating witness found is kept for each member */
  classes_.clear();
  class_of_.assign(n_, -1);
  for (int r = 0; r < n_; ++r) {
    if (class_of_[r] != -1) continue;
    ConjugacyClass cls;
    cls.representative = r;
    std::vector<std::pair<int, int>> found{{r, 0}};
    class_of_[r] = (int)classes_.size();
    for (size_t qi = 0; qi < found.size(); ++qi) {
      auto [h, y] = found[qi];
      for (int g = 0; g < n_; ++g) {
        int hh = conjugate(h, g);
        if (class_of_[hh] == -1) {
          class_of_[hh] = (int)classes_.size();
          found.emplace_back(hh, mul(g, y));
        }
      }
    }
    std::sort(found.begin(), found.end());
    for (auto [h, y] : found) {
      cls.members.push_back(h);
      cls.conjugators.push_back(y);
      if (conjugate(cls.representative, y) != h)
        throw std::runtime_error("conjugator bookkeeping failed");
    }
    classes_.push_back(std::move(cls));
  }
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::vector<std::string> labels,
                                    std::vector<Mat2> matrices) {
  FiniteGroup G;
  int n = (int)table.size();
  G.table_.reserve((size_t)n * n);
  for (const auto& row : table) {
    if ((int)row.size() != n) throw std::invalid_argument("multiplication table is not square");
    G.table_.insert(G.table_.end(), row.begin(), row.end());
  }
  if (labels.empty()) {
    for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  }
  if ((int)labels.size() != n) throw std::invalid_argument("label count mismatch");
  if (!matrices.empty() && (int)matrices.size() != n)
    throw std::invalid_argument("matrix count mismatch");
  G.labels_ = std::move(labels);
  G.mats_ = std::move(matrices);
  G.finish_construction();
  return G;
}

FiniteGroup FiniteGroup::generate(const std::vector<Mat2>& generators,
                                  const std::vector<std::string>& generator_names,
                                  int cap) {
  if (generators.empty()) throw std::invalid_argument("need at least one generator");
  if (generators.size() != generator_names.size())
    throw std::invalid_argument("generator name count mismatch");

  long host = 1;
  for (const Mat2& g : generators)
    for (const Cyclotomic& e : g.a) host = std::lcm(host, e.order());

  std::vector<Mat2> elems{Mat2::identity()};
  std::vector<std::vector<int>> words{{}};
  std::map<std::string, int> index;
  index[matrix_key(elems[0], host)] = 0;

  for (size_t qi = 0; qi < elems.size(); ++qi) {
    for (size_t gi = 0; gi < generators.size(); ++gi) {
      Mat2 m = elems[qi] * generators[gi];
      std::string key = matrix_key(m, host);
      if (index.count(key)) continue;
      if ((int)elems.size() >= cap)
        throw std::runtime_error("group not closed within bound (cap " + std::to_string(cap) + ")");
      index[key] = (int)elems.size();
      std::vector<int> w = words[qi];
      w.push_back((int)gi);
      elems.push_back(m);
      words.push_back(std::move(w));
    }
  }

  int n = (int)elems.size();
  FiniteGroup G;
  G.table_.assign((size_t)n * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = index.find(matrix_key(elems[a] * elems[b], host));
      if (it == index.end()) throw std::runtime_error("product escaped the generated set");
      G.table_[(size_t)a * n + b] = it->second;
    }
  G.labels_.reserve(n);
  for (int i = 0; i < n; ++i) G.labels_.push_back(word_label(words[i], generator_names));
  G.mats_ = std::move(elems);
  G.finish_construction();
  return G;
}

int FiniteGroup::power(int a, long k) const {
  long m = element_order(a);
  k %= m;
  if (k < 0) k += m;
  int acc = 0, base = a;
  while (k) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

std::optional<int> FiniteGroup::element_by_label(const std::string& s) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == s) return i;
  if (s.size() > 1 && s[0] == 'g') {
    try {
      size_t pos = 0;
      int idx = std::stoi(s.substr(1), &pos);
      if (pos == s.size() - 1 && idx >= 0 && idx < n_) return idx;
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

Subgroup subgroup_from(const FiniteGroup& G, const std::vector<int>& gens) {
  Subgroup S;
  S.parent = &G;
  S.mask.assign(G.order(), 0);
  std::vector<int> queue{G.identity()};
  S.mask[G.identity()] = 1;
  for (int g : gens) {
    if (g < 0 || g >= G.order()) throw std::invalid_argument("generator index out of range");
    if (!S.mask[g]) {
      S.mask[g] = 1;
      queue.push_back(g);
    }
  }
  std::vector<int> gens_and_invs = gens;
  for (int g : gens) gens_and_invs.push_back(G.inv(g));
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (int g : gens_and_invs) {
      int m = G.mul(queue[qi], g);
      if (!S.mask[m]) {
        S.mask[m] = 1;
        queue.push_back(m);
      }
    }
  for (int i = 0; i < G.order(); ++i)
    if (S.mask[i]) S.elements.push_back(i);
  return S;
}

Subgroup trivial_subgroup(const FiniteGroup& G) { return subgroup_from(G, {}); }

Subgroup full_subgroup(const FiniteGroup& G) {
  Subgroup S;
  S.parent = &G;
  S.mask.assign(G.order(), 1);
  S.elements.resize(G.order());
  std::iota(S.elements.begin(), S.elements.end(), 0);
  return S;
}

Subgroup center(const FiniteGroup& G) {
  std::vector<int> c;
  for (int a = 0; a < G.order(); ++a) {
    bool central = true;
    for (int b = 0; b < G.order() && central; ++b) central = G.mul(a, b) == G.mul(b, a);
    if (central) c.push_back(a);
  }
  return subgroup_from(G, c);
}

Subgroup central_involutions(const FiniteGroup& G) {
  Subgroup Z = center(G);
  std::vector<int> invs;
  for (int z : Z.elements)
    if (G.element_order(z) <= 2 && z != G.identity()) invs.push_back(z);
  return subgroup_from(G, invs);
}

bool is_normal(const FiniteGroup& G, const Subgroup& S) {
  if (S.parent != &G) throw std::invalid_argument("subgroup belongs to a different group");
  for (int s : S.elements)
    for (int g = 0; g < G.order(); ++g)
      if (!S.contains(G.conjugate(s, g))) return false;
  return true;
}

QuotientMap quotient(const FiniteGroup& G, const Subgroup& N) {
  if (!is_normal(G, N)) throw std::invalid_argument("quotient by a non-normal subgroup");
  QuotientMap q;
  q.source = &G;
  q.normal = N;
  q.projection.assign(G.order(), -1);
  for (int g = 0; g < G.order(); ++g) {
    if (q.projection[g] != -1) continue;
    int idx = (int)q.section.size();
    q.section.push_back(g); /* minimal member: smaller ones are already assigned */
    for (int n : N.elements) q.projection[G.mul(g, n)] = idx;
  }
  int m = (int)q.section.size();
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) table[a][b] = q.projection[G.mul(q.section[a], q.section[b])];
  std::vector<std::string> labels;
  for (int a = 0; a < m; ++a) labels.push_back("[" + G.label(q.section[a]) + "]");
  q.target = FiniteGroup::from_table(std::move(table), std::move(labels));

  /* the projection must be a homomorphism on all of G, not just the section */
  if ((long)G.order() * G.order() <= 4000000) {
    for (int a = 0; a < G.order(); ++a)
      for (int b = 0; b < G.order(); ++b)
        if (q.projection[G.mul(a, b)] != q.target.mul(q.projection[a], q.projection[b]))
          throw std::runtime_error("projection is not a homomorphism");
  } else {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> pick(0, G.order() - 1);
    for (int t = 0; t < 1000000; ++t) {
      int a = pick(rng), b = pick(rng);
      if (q.projection[G.mul(a, b)] != q.target.mul(q.projection[a], q.projection[b]))
        throw std::runtime_error("projection is not a homomorphism");
    }
  }
  if (q.projection[G.identity()] != 0 || q.section[0] != G.identity())
    throw std::runtime_error("identity coset must sit at index 0");
  return q;
}

int conj_by_image(const QuotientMap& q, int gbar, int x) {
  const FiniteGroup& T = q.target;
  int xb = q.projection[x];
  return T.mul(T.mul(T.inv(xb), gbar), xb);
}

Subgroup stabilizer_in_source(const QuotientMap& q, int gbar) {
  std::vector<int> elems;
  for (int x = 0; x < q.source->order(); ++x)
    if (conj_by_image(q, gbar, x) == gbar) elems.push_back(x);
  Subgroup S = subgroup_from(*q.source, elems);
  if ((int)S.elements.size() != (int)elems.size())
    throw std::runtime_error("stabilizer set was not closed");
  return S;
}

FiniteGroup materialize(const Subgroup& S, std::vector<int>* to_parent,
                        std::vector<int>* to_local) {
  const FiniteGroup& G = *S.parent;
  int n = S.order();
  std::vector<int> loc(G.order(), -1);
  for (int i = 0; i < n; ++i) loc[S.elements[i]] = i;
  if (S.elements.empty() || S.elements[0] != G.identity())
    throw std::invalid_argument("subgroup must contain the identity at minimal index");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int m = G.mul(S.elements[a], S.elements[b]);
      if (loc[m] < 0) throw std::invalid_argument("subset is not closed under multiplication");
      table[a][b] = loc[m];
    }
  std::vector<std::string> labels;
  std::vector<Mat2> mats;
  for (int a = 0; a < n; ++a) {
    labels.push_back(G.label(S.elements[a]));
    if (G.has_matrix_rep()) mats.push_back(G.matrix(S.elements[a]));
  }
  if (to_parent) *to_parent = S.elements;
  if (to_local) *to_local = std::move(loc);
  return FiniteGroup::from_table(std::move(table), std::move(labels), std::move(mats));
}

}  // namespace gtqd
