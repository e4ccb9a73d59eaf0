#include "toric/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace toric {

CoxeterMatrix CoxeterMatrix::from_labels(std::vector<std::vector<int>> m) {
  CoxeterMatrix cm;
  cm.rank = static_cast<int>(m.size());
  for (int i = 0; i < cm.rank; ++i) {
    if (static_cast<int>(m[i].size()) != cm.rank) throw DomainError("Coxeter matrix is not square");
    if (m[i][i] != 1) throw DomainError("Coxeter matrix diagonal must be 1");
    for (int j = 0; j < cm.rank; ++j) {
      if (i == j) continue;
      if (m[i][j] != m[j][i]) throw DomainError("Coxeter matrix is not symmetric");
      if (m[i][j] != kInfinity && m[i][j] < 2) throw DomainError("Coxeter label below 2");
    }
  }
  cm.m = std::move(m);
  return cm;
}

CoxeterMatrix CoxeterMatrix::triangle(int k, int n, int m) {
  return from_labels({{1, k, m}, {k, 1, n}, {m, n, 1}});
}

int CoxeterMatrix::modulus() const {
  int N = 1;
  for (int i = 0; i < rank; ++i) {
    for (int j = i + 1; j < rank; ++j) {
      if (m[i][j] != kInfinity) N = std::lcm(N, 2 * m[i][j]);
    }
  }
  return N;
}

Alphabet CoxeterMatrix::alphabet() const { return Alphabet::indexed("r", rank); }

Presentation CoxeterMatrix::presentation() const {
  Presentation p;
  p.alphabet = alphabet();
  for (int i = 0; i < rank; ++i) p.relators.push_back(Word::gen(i, 2));
  std::vector<std::pair<int, int>> pairs;
  if (rank == 3) {
    pairs = {{0, 1}, {1, 2}, {2, 0}};
  } else {
    for (int i = 0; i < rank; ++i) {
      for (int j = i + 1; j < rank; ++j) pairs.emplace_back(i, j);
    }
  }
  for (auto [i, j] : pairs) {
    if (m[i][j] == kInfinity) continue;
    p.relators.push_back(Word{make_letter(i), make_letter(j)}.pow(m[i][j]));
  }
  return p;
}

TriangleType classify_triangle(int k, int n, int m) {
  if (k < 2 || n < 2 || m < 2) throw DomainError("triangle labels must be at least 2");
  mpq_class s = mpq_class(1, k) + mpq_class(1, n) + mpq_class(1, m);
  if (s > 1) return TriangleType::spherical;
  if (s == 1) return TriangleType::affine;
  return TriangleType::hyperbolic;
}

std::string_view triangle_type_name(TriangleType t) {
  switch (t) {
    case TriangleType::spherical: return "spherical";
    case TriangleType::affine: return "affine";
    case TriangleType::hyperbolic: return "hyperbolic";
  }
  return "?";
}

namespace {

std::vector<std::vector<Cyc>> gram_matrix(const CoxeterMatrix& cm) {
  const int N = cm.modulus();
  std::vector<std::vector<Cyc>> g(cm.rank, std::vector<Cyc>(cm.rank, Cyc::zero(N)));
  for (int s = 0; s < cm.rank; ++s) {
    for (int t = 0; t < cm.rank; ++t) {
      int l = cm.label(s, t);
      if (s == t) {
        g[s][t] = Cyc::one(N);
      } else if (l == kInfinity) {
        g[s][t] = Cyc(mpq_class(-1), N);
      } else {
        // -cos(pi/l) = -(z^(N/2l) + z^-(N/2l)) / 2
        g[s][t] = Cyc::two_cos(N, N / (2 * l)) * Cyc(mpq_class(-1, 2), N);
      }
    }
  }
  return g;
}

std::string root_key(const RootVec& v) {
  std::string k;
  for (const Cyc& c : v) k += c.key() + "|";
  return k;
}

}  // namespace

MinimalRootTable::MinimalRootTable(const CoxeterMatrix& cm) : cm_(cm), gram_(gram_matrix(cm)) {
  const int r = cm_.rank;
  const int N = cm_.modulus();
  std::unordered_map<std::string, int> ids;
  for (int s = 0; s < r; ++s) {
    RootVec e(r, Cyc::zero(N));
    e[s] = Cyc::one(N);
    ids.emplace(root_key(e), s);
    roots_.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    std::vector<int> row(r);
    for (int s = 0; s < r; ++s) {
      if (static_cast<int>(i) == s) {
        row[s] = kNegative;
        continue;
      }
      Cyc c = form(s, roots_[i]);
      if ((c + Cyc::one(N)).sign() <= 0) {
        row[s] = kElevated;
        continue;
      }
      RootVec v = reflect(s, roots_[i]);
      auto [it, fresh] = ids.emplace(root_key(v), static_cast<int>(roots_.size()));
      if (fresh) roots_.push_back(std::move(v));
      row[s] = it->second;
    }
    table_.push_back(std::move(row));
  }
}

Cyc MinimalRootTable::form(int s, const RootVec& v) const {
  Cyc acc = Cyc::zero(cm_.modulus());
  for (int t = 0; t < cm_.rank; ++t) {
    if (!v[t].is_zero() && !gram_[s][t].is_zero()) acc += gram_[s][t] * v[t];
  }
  return acc;
}

RootVec MinimalRootTable::reflect(int s, const RootVec& v) const {
  RootVec out = v;
  Cyc c = form(s, v);
  out[s] -= c + c;
  return out;
}

CoxeterGroup::CoxeterGroup(const CoxeterMatrix& cm)
    : table_(cm), alphabet_(cm.alphabet()), words_((table_.size() + 63) / 64) {
  for (int s = 0; s < cm.rank; ++s) root_id(table_.root(s));
}

int CoxeterGroup::root_id(const RootVec& v) const {
  std::string k = root_key(v);
  auto it = root_ids_.find(k);
  if (it != root_ids_.end()) return it->second;
  int id = static_cast<int>(roots_.size());
  roots_.push_back(v);
  reflections_.emplace_back(table_.rank(), -2);
  root_ids_.emplace(std::move(k), id);
  return id;
}

int CoxeterGroup::reflect_id(int id, int s) const {
  if (id == s) return -1;
  int& cached = reflections_[id][s];
  if (cached != -2) return cached;
  RootVec v = table_.reflect(s, roots_[id]);
  int r = root_id(v);
  reflections_[id][s] = r;  // reference may be stale after growth
  return r;
}

RootSet CoxeterGroup::initial_state() const { return RootSet(words_, 0); }

bool CoxeterGroup::contains(const RootSet& d, int root) const {
  return (d[root / 64] >> (root % 64)) & 1;
}

std::optional<RootSet> CoxeterGroup::step(const RootSet& d, int s) const {
  if (contains(d, s)) return std::nullopt;
  RootSet out(words_, 0);
  out[s / 64] |= std::uint64_t{1} << (s % 64);
  for (int b = 0; b < table_.size(); ++b) {
    if (!contains(d, b)) continue;
    int t = table_.act(b, s);
    if (t >= 0) out[t / 64] |= std::uint64_t{1} << (t % 64);
  }
  return out;
}

std::optional<RootSet> CoxeterGroup::step_shortlex(const RootSet& d, int s) const {
  auto out = step(d, s);
  if (!out) return out;
  for (int t = 0; t < s; ++t) {
    int r = table_.act(t, s);
    if (r >= 0) (*out)[r / 64] |= std::uint64_t{1} << (r % 64);
  }
  return out;
}

std::vector<int> CoxeterGroup::delete_exchange(const std::vector<int>& u, int s) const {
  std::lock_guard<std::mutex> lock(mu_);
  int gamma = s;
  for (int j = static_cast<int>(u.size()) - 1; j >= 0; --j) {
    if (gamma == u[j]) {
      std::vector<int> out = u;
      out.erase(out.begin() + j);
      return out;
    }
    gamma = reflect_id(gamma, u[j]);
  }
  throw Error("exchange letter not found (word not reduced)");
}

RootSet CoxeterGroup::state_of(const std::vector<int>& u) const {
  RootSet d = initial_state();
  for (int s : u) {
    auto next = step(d, s);
    if (!next) throw Error("word is not reduced");
    d = std::move(*next);
  }
  return d;
}

std::vector<int> CoxeterGroup::reduce_letters(const Word& w) const {
  std::vector<int> u;
  RootSet d = initial_state();
  for (Letter l : w) {
    int s = gen_of(l);
    if (s >= table_.rank()) throw UnknownGenerator("letter outside the Coxeter alphabet");
    if (auto next = step(d, s)) {
      d = std::move(*next);
      u.push_back(s);
    } else {
      u = delete_exchange(u, s);
      d = state_of(u);
    }
  }
  return u;
}

bool CoxeterGroup::is_reduced(const Word& w) const {
  RootSet d = initial_state();
  for (Letter l : w) {
    auto next = step(d, gen_of(l));
    if (!next) return false;
    d = std::move(*next);
  }
  return true;
}

bool CoxeterGroup::is_shortlex(const Word& w) const {
  RootSet d = initial_state();
  for (Letter l : w) {
    auto next = step_shortlex(d, gen_of(l));
    if (!next) return false;
    d = std::move(*next);
  }
  return true;
}

Word CoxeterGroup::reduced_word(const Word& w) const {
  Word out;
  for (int s : reduce_letters(w)) out.push_back(make_letter(s));
  return out;
}

Word CoxeterGroup::nf(const Word& w) const {
  std::vector<int> v = reduce_letters(w);
  std::reverse(v.begin(), v.end());  // reduced word of w^-1
  Word out;
  while (!v.empty()) {
    RootSet d = state_of(v);
    int s = 0;
    while (!contains(d, s)) ++s;
    out.push_back(make_letter(s));
    v = delete_exchange(v, s);
  }
  return out;
}

bool CoxeterGroup::equal(const Word& u, const Word& v) const {
  Word rev(std::vector<Letter>(v.letters().rbegin(), v.letters().rend()));
  return is_identity(u * rev);
}

std::optional<int> CoxeterGroup::order(const Word& w, int bound) const {
  Word p;
  for (int k = 1; k <= bound; ++k) {
    p *= w;
    p = reduced_word(p);
    if (p.empty()) return k;
  }
  return std::nullopt;
}

std::vector<std::uint64_t> CoxeterGroup::growth(int max_length) const {
  std::vector<std::uint64_t> out;
  std::map<RootSet, std::uint64_t> level{{initial_state(), 1}};
  for (int len = 0; len <= max_length; ++len) {
    std::uint64_t total = 0;
    std::map<RootSet, std::uint64_t> next;
    for (const auto& [d, count] : level) {
      total += count;
      if (len == max_length) continue;
      for (int s = 0; s < table_.rank(); ++s) {
        if (auto e = step_shortlex(d, s)) next[*e] += count;
      }
    }
    out.push_back(total);
    level = std::move(next);
  }
  return out;
}

Word nf(const CoxeterGroup& g, const Word& w) { return g.nf(w); }

Parity parity(const Word& w) { return w.size() % 2 == 0 ? Parity::even : Parity::odd; }

bool parabolic_is_finite(const CoxeterMatrix& cm, const std::vector<int>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (cm.label(gens[i], gens[j]) == kInfinity) return false;
    }
  }
  auto g = gram_matrix(cm);
  // Sylvester: every leading principal minor positive. Gaussian elimination
  // yields the minors as running products of pivots.
  const std::size_t k = gens.size();
  std::vector<std::vector<Cyc>> a(k, std::vector<Cyc>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = g[gens[i]][gens[j]];
  }
  for (std::size_t c = 0; c < k; ++c) {
    if (a[c][c].sign() <= 0) return false;
    Cyc inv = a[c][c].inverse();
    for (std::size_t r = c + 1; r < k; ++r) {
      if (a[r][c].is_zero()) continue;
      Cyc f = a[r][c] * inv;
      for (std::size_t j = c; j < k; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return true;
}

ParabolicReport maximal_finite_parabolics(const CoxeterMatrix& cm) {
  ParabolicReport rep;
  const int r = cm.rank;
  std::vector<int> masks(1 << r);
  std::iota(masks.begin(), masks.end(), 0);
  std::stable_sort(masks.begin(), masks.end(), [](int a, int b) {
    return std::popcount(static_cast<unsigned>(a)) < std::popcount(static_cast<unsigned>(b));
  });
  std::vector<bool> finite(1 << r, false);
  for (int mask : masks) {
    ParabolicReport::Subset s;
    for (int i = 0; i < r; ++i) {
      if (mask >> i & 1) s.gens.push_back(i);
    }
    s.finite = parabolic_is_finite(cm, s.gens);
    finite[mask] = s.finite;
    rep.subsets.push_back(std::move(s));
  }
  rep.whole_group_finite = finite[(1 << r) - 1];
  for (int mask : masks) {
    if (!finite[mask]) continue;
    bool maximal = true;
    for (int i = 0; i < r && maximal; ++i) {
      if (!(mask >> i & 1) && finite[mask | (1 << i)]) maximal = false;
    }
    if (!maximal) continue;
    std::vector<int> gens;
    for (int i = 0; i < r; ++i) {
      if (mask >> i & 1) gens.push_back(i);
    }
    if (gens.size() == 2) rep.rotation_orders.push_back(cm.label(gens[0], gens[1]));
    rep.maximal.push_back(std::move(gens));
  }
  return rep;
}

CenterReport center_check_plus(const CoxeterMatrix& cm, std::size_t max_order) {
  for (int i = 0; i < cm.rank; ++i) {
    for (int j = 0; j < cm.rank; ++j) {
      if (cm.label(i, j) == kInfinity) throw IncompleteError("infinite Coxeter system");
    }
  }
  EnumerationOptions opts;
  opts.max_cosets = max_order;
  CosetTable ct = todd_coxeter(cm.presentation(), {}, opts);
  if (!ct.complete()) throw IncompleteError("Coxeter group is infinite or beyond the brute-force bound");
  CayleyTable c(ct);
  CoxeterGroup g(cm);
  std::vector<int> gens, plus_gens;
  for (int i = 0; i < cm.rank; ++i) gens.push_back(c.gen(i));
  for (int i = 0; i < cm.rank; ++i) {
    for (int j = i + 1; j < cm.rank; ++j) plus_gens.push_back(c.mul(c.gen(i), c.gen(j)));
  }
  CenterReport rep;
  rep.order_w = c.size();
  std::vector<int> zw = c.centralizer(gens);
  std::vector<int> zplus;
  for (int e : c.centralizer(plus_gens)) {
    if (parity(c.word(e)) == Parity::even) zplus.push_back(e);
  }
  for (int e = 0; e < c.size(); ++e) rep.order_w_plus += parity(c.word(e)) == Parity::even;
  auto render = [&](int e) { return format_word(g.nf(c.word(e)), cm.alphabet()); };
  for (int e : zw) rep.center_w.push_back(render(e));
  for (int e : zplus) rep.center_w_plus.push_back(render(e));
  rep.contained = std::includes(zw.begin(), zw.end(), zplus.begin(), zplus.end());
  for (int e : zw) {
    if (e == 0) continue;
    if (parity(c.word(e)) == Parity::odd) rep.nontrivial_center_odd = true;
    if (std::find(gens.begin(), gens.end(), e) != gens.end()) rep.center_is_simple_reflection = true;
  }
  return rep;
}

}  // namespace toric
