#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace oracle {

using toric::Cyc;
using toric::CycMatrix2;

namespace {

std::string key2(const CycMatrix2& m) {
  return m.a.key() + "|" + m.b.key() + "|" + m.c.key() + "|" + m.d.key();
}

}  // namespace

std::optional<std::size_t> closure_order(const std::vector<CycMatrix2>& gens, std::size_t limit) {
  int N = 1;
  for (const auto& g : gens) N = std::lcm(N, g.a.modulus());
  std::unordered_set<std::string> seen;
  std::deque<CycMatrix2> queue;
  CycMatrix2 id = CycMatrix2::identity(N);
  seen.insert(key2(id));
  queue.push_back(id);
  while (!queue.empty()) {
    CycMatrix2 x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      CycMatrix2 y = x * g;
      if (seen.insert(key2(y)).second) {
        if (seen.size() > limit) return std::nullopt;
        queue.push_back(y);
      }
    }
  }
  return seen.size();
}

std::vector<CycMatrix2> toric_matrices(int k, int n, int m) {
  const int N = std::lcm(std::lcm(2 * k, 2 * n), 2 * m);
  auto z = [N](int a) { return Cyc::zeta(N, N / (2 * a)); };
  const Cyc th = z(k), ph = z(n), ps = z(m);
  const Cyc value = th * ph * (ps + ps.inverse()) - th * th - ph * ph;
  const Cyc q = value.is_zero() ? Cyc(1) : value;
  const Cyc r = value.is_zero() ? Cyc(0) : Cyc(1);
  const Cyc one = Cyc::one(N), zero = Cyc::zero(N);
  CycMatrix2 s{th * th, q, zero, one};
  CycMatrix2 t{one, zero, r, ph * ph};
  std::vector<CycMatrix2> xs;
  CycMatrix2 conj = CycMatrix2::identity(N);
  for (int i = 0; i < n; ++i) {
    xs.push_back(conj * s * conj.inverse());
    conj = conj * t;
  }
  return xs;
}

Mat3 Mat3::operator*(const Mat3& o) const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Cyc acc;
      for (int l = 0; l < 3; ++l) acc += v[i][l] * o.v[l][j];
      r.v[i][j] = acc;
    }
  return r;
}

std::string Mat3::key() const {
  std::string s;
  for (const auto& row : v)
    for (const auto& e : row) s += e.key() + "|";
  return s;
}

std::vector<Mat3> triangle_reflections(int k, int n, int m) {
  // labels: (r1,r2) = k, (r2,r3) = n, (r3,r1) = m
  int lab[3][3] = {{1, k, m}, {k, 1, n}, {m, n, 1}};
  const int N = std::lcm(std::lcm(2 * k, 2 * n), 2 * m);
  Cyc B[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // -cos(pi / l) = -(z^(N/2l) + z^-(N/2l)) / 2
      B[i][j] = i == j ? Cyc::one(N)
                       : Cyc::two_cos(N, N / (2 * lab[i][j])) * Cyc(mpq_class(-1, 2), 1);
    }
  std::vector<Mat3> out;
  for (int s = 0; s < 3; ++s) {
    // r_s(e_j) = e_j - 2 B(e_s, e_j) e_s; columns are images.
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.v[i][j] = Cyc::zero(N);
    for (int j = 0; j < 3; ++j) {
      r.v[j][j] += Cyc::one(N);
      r.v[s][j] -= B[s][j] * Cyc(2);
    }
    out.push_back(r);
  }
  return out;
}

std::optional<std::size_t> closure_order3(const std::vector<Mat3>& gens, std::size_t limit) {
  const int N = gens.empty() ? 1 : gens[0].v[0][0].modulus();
  Mat3 id;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) id.v[i][j] = i == j ? Cyc::one(N) : Cyc::zero(N);
  std::unordered_set<std::string> seen{id.key()};
  std::deque<Mat3> queue{id};
  while (!queue.empty()) {
    Mat3 x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Mat3 y = x * g;
      if (seen.insert(y.key()).second) {
        if (seen.size() > limit) return std::nullopt;
        queue.push_back(y);
      }
    }
  }
  return seen.size();
}

std::set<std::string> monoid_class(int n, int m, const std::string& w) {
  const std::string xn(n, 'x'), ym(m, 'y');
  std::set<std::string> seen{w};
  std::deque<std::string> queue{w};
  auto swap_all = [&](const std::string& cur, const std::string& from, const std::string& to) {
    for (std::size_t p = cur.find(from); p != std::string::npos; p = cur.find(from, p + 1)) {
      std::string next = cur.substr(0, p) + to + cur.substr(p + from.size());
      if (seen.insert(next).second) queue.push_back(next);
    }
  };
  while (!queue.empty()) {
    std::string cur = queue.front();
    queue.pop_front();
    swap_all(cur, xn, ym);
    swap_all(cur, ym, xn);
  }
  return seen;
}

}  // namespace oracle

#include "toric/schreier.hpp"
#include "toric/tietze.hpp"

namespace oracle {

using namespace toric;

bool matches_chain_display(const Presentation& p, int k, int n, int m, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  std::vector<std::string> have = p.alphabet.names();
  std::sort(have.begin(), have.end());
  std::vector<std::string> want = names;
  std::sort(want.begin(), want.end());
  if (have != want) return fail("generators are not x1..xn");
  auto x = [&](int i) { return make_letter(p.alphabet.index_of(names[((i % n) + n) % n])); };
  std::vector<Word> sides;
  for (int j = 0; j < n; ++j) {
    Word w;
    for (int i = 0; i < m; ++i) w.push_back(x(j + i));
    sides.push_back(w);
  }
  std::vector<bool> power(n, false);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  for (const Word& r : p.relators) {
    const Word c = cyclic_canonical(r);
    bool matched = false;
    for (int i = 0; i < n && !matched; ++i) {
      if (c == cyclic_canonical(Word::gen(gen_of(x(i)), k))) {
        power[i] = true;
        matched = true;
      }
    }
    for (int a = 0; a < n && !matched; ++a)
      for (int b = 0; b < n && !matched; ++b) {
        if (a != b && c == cyclic_canonical(sides[a] * invert(sides[b]))) {
          parent[find(a)] = find(b);
          matched = true;
        }
      }
    if (!matched) return fail("relator " + format_word(r, p.alphabet) + " is not of the displayed shape");
  }
  for (int i = 0; i < n; ++i) {
    if (!power[i]) return fail("missing " + names[i] + "^" + std::to_string(k));
    if (find(i) != find(0)) return fail("chain sides are not all connected");
  }
  return true;
}

std::pair<int, int> closed_form_mismatches(int k, int n, int m) {
  ToricRsResult rs = toric_rs(k, n, m);
  CosetTable full = todd_coxeter(rs.parent, {});
  CayleyTable G(full);
  auto value_of = [&](const std::string& label) -> std::optional<Word> {
    for (const SubgroupGenerator& g : rs.rs.generators)
      if (g.label == label) return g.value;
    return std::nullopt;
  };
  std::vector<Word> base;
  for (int j = 0; j < n; ++j) base.push_back(*value_of("s_0_" + std::to_string(j)));
  GenMap to_parent(closed_form_alphabet(n), rs.parent.alphabet, base);
  int mismatches = 0, compared = 0;
  for (char which : {'s', 'u'}) {
    const int pmax = which == 's' ? n : n - 1;
    for (int l = 0; l <= m - 1; ++l)
      for (int p = 1; p <= pmax; ++p) {
        Word closed = apply_map(to_parent, closed_form_generator(k, n, m, which, l, p));
        std::optional<Word> generic = value_of(closed_form_label(n, m, which, l, p));
        const int want = generic ? G.element(*generic) : 0;
        ++compared;
        if (G.element(closed) != want) ++mismatches;
      }
  }
  return {mismatches, compared};
}

}  // namespace oracle
