#include "toric/schreier.hpp"

#include <functional>
#include <numeric>

namespace toric {

TransversalOptions toric_transversal_preset() {
  TransversalOptions o;
  o.column_order = {2, 1, 0};
  o.labels = LabelStyle::toric;
  return o;
}

Transversal schreier_transversal(const CosetTable& ct, const Presentation& p,
                                 const TransversalOptions& opts) {
  if (!ct.complete()) throw IncompleteError("transversal needs a complete coset table");
  std::vector<int> order = opts.column_order;
  if (order.empty()) {
    order.resize(p.alphabet.size());
    std::iota(order.begin(), order.end(), 0);
  }
  Transversal tr;
  tr.tree = spanning_tree(ct, order);
  tr.labels = opts.labels;
  if (opts.labels == LabelStyle::toric) {
    auto t = p.alphabet.find("t");
    auto u = p.alphabet.find("u");
    if (!t || !u || p.alphabet.size() != 3) {
      throw DomainError("toric labels need the j-parent alphabet s, t, u");
    }
    for (const Word& w : tr.tree.words) {
      int i = 0, j = 0;
      for (Letter l : w) {
        if (gen_of(l) == *u) ++i;
        if (gen_of(l) == *t) ++j;
      }
      tr.coordinates.emplace_back(i, j);
    }
  }
  return tr;
}

namespace {

std::string generator_label(const Presentation& p, const Transversal& tr, int coset,
                            int gen) {
  const std::string& name = p.alphabet.name(gen);
  if (tr.labels == LabelStyle::toric) {
    auto [i, j] = tr.coordinates[coset];
    return name + "_" + std::to_string(i) + "_" + std::to_string(j);
  }
  return name + "_" + std::to_string(coset);
}

// Index of the Schreier generator per (coset, gen); -1 on tree edges.
std::vector<std::vector<int>> index_table(const RsResult& rs, int cosets, int gens) {
  std::vector<std::vector<int>> idx(cosets, std::vector<int>(gens, -1));
  for (std::size_t i = 0; i < rs.generators.size(); ++i) {
    idx[rs.generators[i].coset][rs.generators[i].gen] = static_cast<int>(i);
  }
  return idx;
}

Word rewrite_from(const std::vector<std::vector<int>>& idx, const CosetTable& ct,
                  int coset, const Word& w, int* end) {
  Word out;
  int d = coset;
  for (Letter l : w) {
    int g = gen_of(l);
    if (!is_inverse(l)) {
      if (idx[d][g] >= 0) out.push_back(make_letter(idx[d][g]));
      d = ct.act(d, l);
    } else {
      d = ct.act(d, l);
      if (idx[d][g] >= 0) out.push_back(make_letter(idx[d][g], true));
    }
  }
  if (end) *end = d;
  return free_reduce(out);
}

}  // namespace

RsResult rs_presentation(const Presentation& p, const CosetTable& ct,
                         const Transversal& tr) {
  if (!ct.complete()) throw IncompleteError("rewriting needs a complete coset table");
  const int ngens = static_cast<int>(p.alphabet.size());
  const int n = ct.size();
  RsResult rs;
  rs.label_of.assign(n, std::vector<std::string>(ngens));
  std::vector<std::string> names;
  for (int c : tr.tree.bfs_order) {
    for (int g = 0; g < ngens; ++g) {
      int d = ct.entry(c, 2 * g);
      if (tr.tree.parent[d] == c && tr.tree.via_gen[d] == g) continue;
      SubgroupGenerator sg;
      sg.label = generator_label(p, tr, c, g);
      sg.coset = c;
      sg.gen = g;
      sg.value = free_reduce(tr.rep(c) * Word{make_letter(g)} * invert(tr.rep(d)));
      rs.label_of[c][g] = sg.label;
      names.push_back(sg.label);
      rs.generators.push_back(std::move(sg));
    }
  }
  rs.presentation.alphabet = Alphabet(names);
  auto idx = index_table(rs, n, ngens);
  for (const Word& r : p.relators) {
    for (int c = 0; c < n; ++c) {
      Word w = rewrite_from(idx, ct, c, r, nullptr);
      if (!w.empty()) rs.presentation.relators.push_back(std::move(w));
    }
  }
  return rs;
}

Word rs_rewrite(const RsResult& rs, const CosetTable& ct, const Word& w) {
  auto idx = index_table(rs, ct.size(), ct.num_gens());
  int end = 0;
  Word out = rewrite_from(idx, ct, 0, w, &end);
  if (end != 0) throw DomainError("word does not lie in the subgroup");
  return out;
}

Alphabet closed_form_alphabet(int n) { return Alphabet::indexed("s", n, 0); }

Word closed_form_generator(int k, int n, int m, char which, int l, int p) {
  (void)k;
  if (n < 1 || m < 1 || l < 0 || l > m - 1) throw DomainError("closed form: l out of range");
  if (which == 's') {
    if (p < 1 || p > n) throw DomainError("closed form: p out of range");
  } else if (which == 'u') {
    if (p < 1 || p > n - 1) throw DomainError("closed form: p out of range");
  } else {
    throw DomainError("closed form: which must be 's' or 'u'");
  }
  auto s = [n](int i) { return ((i % n) + n) % n; };
  Word w;
  for (int i = 0; i <= l; ++i) w.push_back(make_letter(s(i)));
  const int top = which == 's' ? l : l - 1;
  w.push_back(make_letter(s(p + l), which == 'u'));
  for (int i = top; i >= 0; --i) w.push_back(make_letter(s(i), true));
  return w;
}

std::string closed_form_label(int n, int m, char which, int l, int p) {
  (void)n;
  int i = m - 1 - l;
  int j = which == 's' ? p - 1 : p;
  return std::string(1, which) + "_" + std::to_string(i) + "_" + std::to_string(j);
}

EquivalenceWitness relation_equivalence(int n, int m) {
  EquivalenceWitness w;
  auto x = [n](int i) { return make_letter(((i - 1) % n + n) % n); };  // x_i, 1-based
  auto run = [&](int from, int len) {
    Word r;
    for (int i = 0; i < len; ++i) r.push_back(x(from + i));
    return r;
  };
  const Word delta = run(1, m);
  std::vector<std::size_t> A(n + 1), C(n + 1);
  for (int i = 1; i <= n; ++i) {
    A[i] = w.relations.add("A" + std::to_string(i), Word{x(i)} * delta,
                           delta * Word{x(i + m)});
  }
  for (int j = 2; j <= n; ++j) {
    C[j] = w.relations.add("C" + std::to_string(j), delta, run(j, m));
  }

  // C_j from A_{j-1} and C_{j-1}.
  for (int j = 2; j <= n; ++j) {
    DerivationBuilder b(w.relations, delta);
    b.insert_pair(0, inverse_of(x(j - 1)));
    b.apply(A[j - 1], 1);
    if (j > 2) b.apply(C[j - 1], 1);
    b.reduce();
    w.chain_from_shift.push_back(std::move(b).finish());
  }

  // A_i from C_{i+1} and C_i (C_1 and C_{n+1} are trivial).
  for (int i = 1; i <= n; ++i) {
    DerivationBuilder b(w.relations, Word{x(i)} * delta);
    int next = (i % n) + 1;
    if (next != 1) b.apply(C[next], 1);
    if (i != 1) b.apply(C[i], 0, false);
    w.shift_from_chain.push_back(std::move(b).finish());
  }
  return w;
}

namespace {

// Rejects steps citing a relation outside `allowed` (no circular proofs).
CheckResult uses_only(const RelationSet& rels, const Derivation& d,
                      const std::function<bool(const std::string&)>& allowed) {
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const Step& s = d.steps[i];
    if (s.kind == StepKind::apply && !allowed(rels[s.relation].name)) {
      return {false, i, "cites " + rels[s.relation].name};
    }
  }
  return {};
}

}  // namespace

CheckResult check_equivalence(const EquivalenceWitness& w, int n) {
  for (int j = 2; j <= n; ++j) {
    const std::string name = "C" + std::to_string(j);
    const Relation& c = w.relations[*w.relations.find(name)];
    const Derivation& d = w.chain_from_shift[j - 2];
    CheckResult r = check_proof(w.relations, d, c.lhs, c.rhs);
    if (r.ok) {
      r = uses_only(w.relations, d, [j](const std::string& s) {
        return s[0] == 'A' || std::stoi(s.substr(1)) < j;
      });
    }
    if (!r.ok) return {false, r.failed_step, name + ": " + r.message};
  }
  for (int i = 1; i <= n; ++i) {
    const std::string name = "A" + std::to_string(i);
    const Relation& a = w.relations[*w.relations.find(name)];
    const Derivation& d = w.shift_from_chain[i - 1];
    CheckResult r = check_proof(w.relations, d, a.lhs, a.rhs);
    if (r.ok) {
      r = uses_only(w.relations, d, [](const std::string& s) { return s[0] == 'C'; });
    }
    if (!r.ok) return {false, r.failed_step, name + ": " + r.message};
  }
  return {};
}

ToricRsResult toric_rs(int k, int n, int m, const EnumerationOptions& opts,
                       std::size_t budget) {
  ToricRsResult out;
  out.parent = j_parent_presentation(k, n, m);
  out.closure = normal_closure(out.parent, {Word{make_letter(0)}}, opts);
  if (!out.closure.table.complete()) {
    throw IncompleteError("normal closure of s overflowed at " + std::to_string(opts.max_cosets) +
                          " cosets");
  }
  out.transversal = schreier_transversal(out.closure.table, out.parent, toric_transversal_preset());
  out.rs = rs_presentation(out.parent, out.closure.table, out.transversal);
  TietzeOptions to;
  to.budget = budget;
  for (int j = 0; j < n; ++j) to.keep.push_back("s_0_" + std::to_string(j));
  out.simplified = tietze_simplify(out.rs.presentation, to);
  std::vector<std::string> names = out.simplified.presentation.alphabet.names();
  for (std::string& name : names) {
    if (name.rfind("s_0_", 0) == 0) name = "x" + std::to_string(std::stoi(name.substr(4)) + 1);
  }
  out.relabeled = Presentation{Alphabet(names), out.simplified.presentation.relators};
  return out;
}

}  // namespace toric
