#include "toric/cosets.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace toric {

CosetTable::CosetTable(int num_gens, std::vector<std::int32_t> data, Status status,
                       std::size_t bound)
    : num_gens_(num_gens), data_(std::move(data)), status_(status), bound_(bound) {}

int CosetTable::trace(int coset, const Word& w) const {
  for (Letter l : w) {
    if (coset < 0) return -1;
    coset = act(coset, l);
  }
  return coset;
}

namespace {

// Working state of one enumeration. Rows are allocated sequentially; dead
// rows are reclaimed by compaction at safe points only.
class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgens,
             const EnumerationOptions& opts)
      : ncols_(2 * static_cast<int>(p.alphabet.size())), opts_(opts) {
    for (const Word& r : p.relators) {
      Word c = cyclically_reduce(r);
      if (!c.empty()) relators_.push_back(columns(c));
    }
    for (const Word& w : subgens) {
      Word c = free_reduce(w);
      if (!c.empty()) subgens_.push_back(columns(c));
    }
    if (opts_.strategy == Strategy::felsch) build_conjugates();
    new_row();
  }

  CosetTable run() {
    bool ok = opts_.strategy == Strategy::hlt ? run_hlt() : run_felsch();
    if (!ok) {
      CosetTable t(ncols_ / 2, {}, CosetTable::Status::overflow, opts_.max_cosets);
      t.max_active = max_active_;
      t.total_defined = total_defined_;
      return t;
    }
    CosetTable t = standardize();
    t.max_active = max_active_;
    t.total_defined = total_defined_;
    return t;
  }

 private:
  int ncols_;
  EnumerationOptions opts_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> subgens_;
  // Felsch: cyclic conjugates of relators and inverses, by first column.
  std::vector<std::vector<std::vector<int>>> conj_;

  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> forward_;  // forward_[c] == c iff c alive
  std::size_t active_ = 0;
  std::size_t max_active_ = 0;
  std::size_t total_defined_ = 0;
  bool overflow_ = false;
  std::vector<std::pair<int, int>> deductions_;
  std::vector<int> queue_;

  std::vector<int> columns(const Word& w) const {
    std::vector<int> out;
    out.reserve(w.size());
    for (Letter l : w) out.push_back(column_of(l));
    return out;
  }

  void build_conjugates() {
    conj_.assign(ncols_, {});
    std::set<std::vector<int>> seen;
    for (const auto& r : relators_) {
      const std::vector<int> inv = [&] {
        std::vector<int> v(r.rbegin(), r.rend());
        for (int& c : v) c ^= 1;
        return v;
      }();
      for (const auto* base : {&r, &inv}) {
        const std::size_t n = base->size();
        for (std::size_t s = 0; s < n; ++s) {
          std::vector<int> rot(n);
          for (std::size_t i = 0; i < n; ++i) rot[i] = (*base)[(s + i) % n];
          if (seen.insert(rot).second) conj_[rot[0]].push_back(std::move(rot));
        }
      }
    }
  }

  int rows() const { return static_cast<int>(forward_.size()); }
  std::int32_t& T(int c, int x) { return table_[static_cast<std::size_t>(c) * ncols_ + x]; }
  bool alive(int c) const { return forward_[c] == c; }

  int new_row() {
    int c = rows();
    forward_.push_back(c);
    table_.resize(table_.size() + ncols_, -1);
    ++active_;
    ++total_defined_;
    max_active_ = std::max(max_active_, active_);
    return c;
  }

  // New coset c·x; -1 and the overflow flag when the bound is reached.
  int define(int c, int x) {
    if (active_ >= opts_.max_cosets) {
      overflow_ = true;
      return -1;
    }
    int d = new_row();
    T(c, x) = d;
    T(d, x ^ 1) = c;
    deduce(c, x);
    return d;
  }

  void deduce(int c, int x) {
    if (opts_.strategy == Strategy::felsch) deductions_.emplace_back(c, x);
  }

  int rep(int c) {
    int r = c;
    while (forward_[r] != r) r = forward_[r];
    while (forward_[c] != r) {
      int next = forward_[c];
      forward_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    forward_[b] = a;
    queue_.push_back(b);
  }

  void coincidence(int a, int b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      int g = queue_[i];
      for (int x = 0; x < ncols_; ++x) {
        int d = T(g, x);
        if (d < 0) continue;
        T(d, x ^ 1) = -1;
        int mu = rep(g);
        int nu = rep(d);
        if (T(mu, x) >= 0) {
          merge(nu, T(mu, x));
        } else if (T(nu, x ^ 1) >= 0) {
          merge(mu, T(nu, x ^ 1));
        } else {
          T(mu, x) = nu;
          T(nu, x ^ 1) = mu;
          deduce(mu, x);
        }
      }
    }
    active_ -= queue_.size();
  }

  // Returns false on overflow.
  bool scan_and_fill(int alpha, const std::vector<int>& w) {
    int f = alpha;
    int b = alpha;
    int i = 0;
    int j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && T(f, w[i]) >= 0) f = T(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && T(b, w[j] ^ 1) >= 0) b = T(b, w[j--] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        T(f, w[i]) = b;
        T(b, w[i] ^ 1) = f;
        deduce(f, w[i]);
        return true;
      }
      if (define(f, w[i]) < 0) return false;
    }
  }

  void scan(int alpha, const std::vector<int>& w) {
    int f = alpha;
    int b = alpha;
    int i = 0;
    int j = static_cast<int>(w.size()) - 1;
    while (i <= j && T(f, w[i]) >= 0) f = T(f, w[i++]);
    if (i > j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j >= i && T(b, w[j] ^ 1) >= 0) b = T(b, w[j--] ^ 1);
    if (j < i) {
      coincidence(f, b);
    } else if (i == j) {
      T(f, w[i]) = b;
      T(b, w[i] ^ 1) = f;
      deduce(f, w[i]);
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!alive(c)) continue;
      for (const auto& w : conj_[x]) {
        scan(c, w);
        if (!alive(c)) break;
      }
      if (!alive(c)) continue;
      int d = T(c, x);
      if (d < 0) continue;
      for (const auto& w : conj_[x ^ 1]) {
        scan(d, w);
        if (!alive(d)) break;
      }
    }
  }

  // Renumbers live rows in increasing order; returns the new index of the
  // first live row at or after `pos`.
  int compact(int pos) {
    std::vector<std::int32_t> map(rows(), -1);
    int next = 0;
    for (int c = 0; c < rows(); ++c) {
      if (alive(c)) map[c] = next++;
    }
    int new_pos = next;
    for (int c = rows() - 1; c >= 0; --c) {
      if (c >= pos && alive(c)) new_pos = map[c];
    }
    std::vector<std::int32_t> table(static_cast<std::size_t>(next) * ncols_);
    for (int c = 0; c < rows(); ++c) {
      if (!alive(c)) continue;
      for (int x = 0; x < ncols_; ++x) {
        int d = T(c, x);
        table[static_cast<std::size_t>(map[c]) * ncols_ + x] = d < 0 ? -1 : map[d];
      }
    }
    table_ = std::move(table);
    forward_.resize(next);
    std::iota(forward_.begin(), forward_.end(), 0);
    deductions_.clear();
    return new_pos;
  }

  bool wants_compaction() const {
    std::size_t dead = forward_.size() - active_;
    return dead > 4096 && dead > active_;
  }

  void lookahead() {
    for (int c = 0; c < rows(); ++c) {
      for (const auto& r : relators_) {
        if (!alive(c)) break;
        scan(c, r);
      }
    }
  }

  bool run_hlt() {
    bool lookahead_used = false;
    for (const auto& w : subgens_) {
      if (!scan_and_fill(0, w)) return false;
    }
    int alpha = 0;
    while (alpha < rows()) {
      if (alive(alpha)) {
        bool ok = true;
        for (const auto& r : relators_) {
          if (!alive(alpha)) break;
          if (!(ok = scan_and_fill(alpha, r))) break;
        }
        for (int x = 0; ok && x < ncols_ && alive(alpha); ++x) {
          if (T(alpha, x) < 0) ok = define(alpha, x) >= 0;
        }
        if (!ok) {
          if (!opts_.lookahead || lookahead_used) return false;
          lookahead_used = true;
          overflow_ = false;
          std::size_t before = active_;
          lookahead();
          alpha = compact(alpha);
          if (active_ == before) return false;
          continue;
        }
      }
      ++alpha;
      if (wants_compaction()) alpha = compact(alpha);
    }
    deductions_.clear();
    return true;
  }

  bool run_felsch() {
    for (const auto& w : subgens_) {
      if (!scan_and_fill(0, w)) return false;
      process_deductions();
    }
    while (true) {
      int alpha = 0;
      while (alpha < rows()) {
        for (int x = 0; x < ncols_ && alive(alpha); ++x) {
          if (T(alpha, x) >= 0) continue;
          if (define(alpha, x) < 0) return false;
          process_deductions();
        }
        ++alpha;
        if (wants_compaction()) alpha = compact(alpha);
      }
      // Final check: every relator closes at every live coset.
      std::size_t before = total_defined_;
      std::size_t active_before = active_;
      for (int c = 0; c < rows(); ++c) {
        for (const auto& r : relators_) {
          if (!alive(c)) break;
          if (!scan_and_fill(c, r)) return false;
        }
      }
      process_deductions();
      if (total_defined_ == before && active_ == active_before && complete()) return true;
    }
  }

  bool complete() {
    for (int c = 0; c < rows(); ++c) {
      if (!alive(c)) continue;
      for (int x = 0; x < ncols_; ++x) {
        if (T(c, x) < 0) return false;
      }
    }
    return true;
  }

  CosetTable standardize() {
    const int n = rows();
    std::vector<std::int32_t> map(n, -1);
    std::vector<int> order;
    int start = rep(0);
    map[start] = 0;
    order.push_back(start);
    for (std::size_t i = 0; i < order.size(); ++i) {
      int c = order[i];
      for (int x = 0; x < ncols_; ++x) {
        int d = T(c, x);
        if (map[d] < 0) {
          map[d] = static_cast<int>(order.size());
          order.push_back(d);
        }
      }
    }
    std::vector<std::int32_t> data(order.size() * ncols_);
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (int x = 0; x < ncols_; ++x) data[i * ncols_ + x] = map[T(order[i], x)];
    }
    return CosetTable(ncols_ / 2, std::move(data), CosetTable::Status::complete,
                      opts_.max_cosets);
  }
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgens,
                        const EnumerationOptions& opts) {
  const int ngens = static_cast<int>(p.alphabet.size());
  for (const Word& w : subgens) {
    if (max_generator(w) > ngens) throw UnknownGenerator("subgroup generator outside the alphabet");
  }
  if (ngens == 0) return CosetTable(0, {}, CosetTable::Status::complete, opts.max_cosets);
  return Enumerator(p, subgens, opts).run();
}

std::optional<std::size_t> group_order(const Presentation& p, std::size_t max_cosets) {
  EnumerationOptions opts;
  opts.max_cosets = max_cosets;
  CosetTable t = todd_coxeter(p, {}, opts);
  if (!t.complete()) return std::nullopt;
  return static_cast<std::size_t>(t.size());
}

NormalClosureResult normal_closure(const Presentation& p, std::vector<Word> gens,
                                   const EnumerationOptions& opts, int max_rounds) {
  NormalClosureResult out;
  const int ngens = static_cast<int>(p.alphabet.size());
  std::set<Word> have;
  for (Word& g : gens) {
    g = free_reduce(g);
    have.insert(g);
  }
  for (out.rounds = 1;; ++out.rounds) {
    out.table = todd_coxeter(p, gens, opts);
    if (!out.table.complete() || out.rounds >= max_rounds) break;
    std::vector<Word> added;
    const std::size_t base = gens.size();
    for (std::size_t i = 0; i < base; ++i) {
      for (int x = 0; x < ngens; ++x) {
        for (bool inv : {false, true}) {
          Word xl = Word{make_letter(x, inv)};
          Word c = free_reduce(invert(xl) * gens[i] * xl);
          if (out.table.trace(0, c) == 0) continue;
          if (have.insert(c).second) added.push_back(std::move(c));
        }
      }
    }
    if (added.empty()) break;
    for (Word& w : added) gens.push_back(std::move(w));
  }
  out.generators = std::move(gens);
  return out;
}

SpanningTree spanning_tree(const CosetTable& ct, const std::vector<int>& gen_order) {
  if (!ct.complete()) throw IncompleteError("spanning tree needs a complete coset table");
  const int n = ct.size();
  SpanningTree t;
  t.parent.assign(n, -1);
  t.via_gen.assign(n, -1);
  t.words.assign(n, Word{});
  std::vector<bool> seen(n, false);
  seen[0] = true;
  t.bfs_order.push_back(0);
  for (std::size_t i = 0; i < t.bfs_order.size(); ++i) {
    int c = t.bfs_order[i];
    for (int g : gen_order) {
      int d = ct.entry(c, 2 * g);
      if (seen[d]) continue;
      seen[d] = true;
      t.parent[d] = c;
      t.via_gen[d] = g;
      t.words[d] = t.words[c] * Word{make_letter(g)};
      t.bfs_order.push_back(d);
    }
  }
  if (static_cast<int>(t.bfs_order.size()) != n) {
    throw DomainError("positive generator columns do not reach every coset");
  }
  return t;
}

CayleyTable::CayleyTable(const CosetTable& ct) {
  if (!ct.complete()) throw IncompleteError("Cayley table needs a complete coset table");
  n_ = ct.size();
  gens_ = ct.num_gens();
  std::vector<int> order(gens_);
  std::iota(order.begin(), order.end(), 0);
  // Words via the full column set so inverse-only reachability is covered too.
  words_.assign(n_, Word{});
  std::vector<int> parent(n_, -1);
  std::vector<int> col(n_, -1);
  std::vector<int> bfs{0};
  std::vector<bool> seen(n_, false);
  seen[0] = true;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    int c = bfs[i];
    for (int x = 0; x < ct.num_cols(); ++x) {
      int d = ct.entry(c, x);
      if (seen[d]) continue;
      seen[d] = true;
      parent[d] = c;
      col[d] = x;
      words_[d] = words_[c] * Word{make_letter(x / 2, x % 2 == 1)};
      bfs.push_back(d);
    }
  }
  if (static_cast<int>(bfs.size()) != n_) throw DomainError("coset table is not transitive");
  // mult[g][h] = act(mult[g][parent(h)], col(h)), filled in BFS order of h.
  mult_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (int g = 0; g < n_; ++g) {
    std::int32_t* row = &mult_[static_cast<std::size_t>(g) * n_];
    row[0] = g;
    for (std::size_t i = 1; i < bfs.size(); ++i) {
      int h = bfs[i];
      row[h] = ct.entry(row[parent[h]], col[h]);
    }
  }
  inv_.assign(n_, -1);
  for (int g = 0; g < n_; ++g) {
    const std::int32_t* row = &mult_[static_cast<std::size_t>(g) * n_];
    for (int h = 0; h < n_; ++h) {
      if (row[h] == 0) {
        inv_[g] = h;
        break;
      }
    }
  }
  for (int g = 0; g < gens_; ++g) {
    gen_elem_.push_back(ct.entry(0, 2 * g));
    gen_inv_elem_.push_back(ct.entry(0, 2 * g + 1));
  }
}

int CayleyTable::element(const Word& w) const {
  int e = 0;
  for (Letter l : w) {
    int g = gen_of(l);
    if (g >= gens_) throw UnknownGenerator("letter outside the Cayley table's alphabet");
    e = mul(e, is_inverse(l) ? gen_inv_elem_[g] : gen_elem_[g]);
  }
  return e;
}

int CayleyTable::order(int e) const {
  int k = 1;
  for (int x = e; x != 0; x = mul(x, e)) ++k;
  return k;
}

int CayleyTable::power(int e, int k) const {
  if (k < 0) {
    e = inv(e);
    k = -k;
  }
  int r = 0;
  for (int i = 0; i < k; ++i) r = mul(r, e);
  return r;
}

const std::vector<int>& CayleyTable::conjugacy_classes() const {
  if (num_classes_ >= 0) return classes_;
  classes_.assign(n_, -1);
  int id = 0;
  for (int e = 0; e < n_; ++e) {
    if (classes_[e] >= 0) continue;
    std::vector<int> stack{e};
    classes_[e] = id;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int g = 0; g < gens_; ++g) {
        int b = conjugate(a, gen_elem_[g]);
        if (classes_[b] < 0) {
          classes_[b] = id;
          stack.push_back(b);
        }
      }
    }
    ++id;
  }
  num_classes_ = id;
  return classes_;
}

int CayleyTable::num_classes() const {
  conjugacy_classes();
  return num_classes_;
}

std::vector<int> CayleyTable::subgroup(const std::vector<int>& generators) const {
  std::vector<bool> in(n_, false);
  std::vector<int> elems{0};
  in[0] = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (int g : generators) {
      int p = mul(elems[i], g);
      if (!in[p]) {
        in[p] = true;
        elems.push_back(p);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<int> CayleyTable::centralizer(const std::vector<int>& with) const {
  std::vector<int> out;
  for (int e = 0; e < n_; ++e) {
    bool ok = std::all_of(with.begin(), with.end(), [&](int w) { return commute(e, w); });
    if (ok) out.push_back(e);
  }
  return out;
}

bool CayleyTable::check_axioms(int samples) const {
  for (int e = 0; e < n_; ++e) {
    if (mul(0, e) != e || mul(e, 0) != e) return false;
    if (inv_[e] < 0 || mul(e, inv_[e]) != 0 || mul(inv_[e], e) != 0) return false;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> pick(0, n_ - 1);
  for (int i = 0; i < samples; ++i) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  }
  return true;
}

int element_order(const CayleyTable& c, const Word& w) { return c.order(c.element(w)); }

int reflection_class_count(const FamilyParams& p, const CayleyTable& c) {
  std::vector<int> designated;
  switch (p.family) {
    case Family::toric:
    case Family::alt_toric:
      for (int i = 0; i < c.num_gens(); ++i) designated.push_back(i);
      break;
    case Family::j_parent:
      designated = {0, 1, 2};
      break;
    default:
      throw DomainError("reflection classes are defined for toric and j-parent families");
  }
  const auto& cls = c.conjugacy_classes();
  std::set<int> hit;
  for (int g : designated) {
    int e = c.gen(g);
    for (int x = e; x != 0; x = c.mul(x, e)) hit.insert(cls[x]);
  }
  return static_cast<int>(hit.size());
}

}  // namespace toric
