#include "toric/maps.hpp"

#include <numeric>
#include <set>

#include "toric/classify.hpp"

namespace toric {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

Verdict WordOracle::equal(const Word& u, const Word& v) const {
  return is_identity(free_reduce(u * invert(v)));
}

CoxeterOracle::CoxeterOracle(const CoxeterMatrix& cm) : group_(cm) {}

Verdict CoxeterOracle::is_identity(const Word& w) const {
  return group_.is_identity(w) ? Verdict::yes : Verdict::no;
}

CayleyOracle::CayleyOracle(Presentation p, std::size_t max_cosets)
    : presentation_(std::move(p)), bound_(max_cosets) {
  EnumerationOptions opts;
  opts.max_cosets = max_cosets;
  CosetTable ct = todd_coxeter(presentation_, {}, opts);
  if (ct.complete()) table_ = std::make_shared<CayleyTable>(ct);
}

const CayleyTable& CayleyOracle::table() const {
  if (!table_) {
    throw IncompleteError("enumeration overflowed at " + std::to_string(bound_) + " cosets");
  }
  return *table_;
}

Verdict CayleyOracle::is_identity(const Word& w) const {
  if (!table_) return Verdict::unknown;
  return table_->element(w) == 0 ? Verdict::yes : Verdict::no;
}

PullbackOracle::PullbackOracle(GenMap f, OraclePtr inner, std::string name)
    : f_(std::move(f)), inner_(std::move(inner)), name_(std::move(name)) {}

Verdict PullbackOracle::is_identity(const Word& w) const {
  return inner_->is_identity(apply_map(f_, w));
}

HomCheck check_hom(const Hom& h) {
  if (!h.target) throw IncompleteError("no word-problem oracle for the target of " + h.name);
  HomCheck out;
  for (std::size_t i = 0; i < h.source.relators.size(); ++i) {
    const Word& r = h.source.relators[i];
    Verdict v = h.target->is_identity(apply_map(h.map, r));
    ++out.checked;
    if (v == Verdict::yes) continue;
    out.verdict = v;
    out.failing_relator = i;
    out.failing_text = format_word(r, h.source.alphabet);
    break;
  }
  return out;
}

PsiParams psi_params(int n, int m) {
  if (n < 2 || m < 2 || std::gcd(n, m) != 1) throw DomainError("psi needs coprime n, m >= 2");
  PsiParams p;
  p.q = m / n;
  p.r = m % n;
  for (int l = 1; l <= n; ++l) {
    if ((p.r * l) % n == 1 % n) {
      p.l = l;
      break;
    }
  }
  return p;
}

namespace {

void require_coprime(int k, int n, int m) {
  if (k < 2 || n < 2 || m < 2) throw DomainError("k, n, m must be at least 2");
  if (std::gcd(n, m) != 1) throw DomainError("gcd(n, m) must be 1");
}

Word letters(std::initializer_list<int> gens) {
  Word w;
  for (int g : gens) w.push_back(make_letter(g));
  return w;
}

}  // namespace

Word cyclic_run(int n, int from, int len) {
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(make_letter(((from - 1 + i) % n + n) % n));
  return w;
}

Word central_element(int n, int m) { return cyclic_run(n, 1, n).pow(m); }

Hom build_phi(int k, int n, int m) {
  require_coprime(k, n, m);
  const CoxeterMatrix cm = CoxeterMatrix::triangle(k, n, m);
  const Word a = letters({0, 1});      // r1 r2
  const Word b_inv = letters({1, 2});  // r2 r3 = (r3 r2)^-1 as involutions
  const Word b = letters({2, 1});
  std::vector<Word> images;
  for (int i = 1; i <= n; ++i) images.push_back(b_inv.pow(i - 1) * a * b.pow(i - 1));
  Hom h;
  h.name = "phi";
  h.source = toric_presentation(k, n, m, false);
  h.map = GenMap(h.source.alphabet, cm.alphabet(), std::move(images));
  h.target = std::make_shared<CoxeterOracle>(cm);
  return h;
}

GenMap alt_plus_inclusion() {
  return GenMap(Alphabet({"a", "b"}), Alphabet::indexed("r", 3),
                {letters({0, 1}), letters({2, 1})});
}

PsiHom build_psi(int k, int n, int m) {
  require_coprime(k, n, m);
  PsiHom out;
  out.params = psi_params(n, m);
  Hom phi = build_phi(k, n, m);
  const Alphabet xs = Alphabet::indexed("x", n);
  out.hom.name = "psi";
  out.hom.source = alt_plus_presentation(k, n, m);
  out.hom.map = GenMap(out.hom.source.alphabet, xs,
                       {Word{make_letter(0)}, cyclic_run(n, 1, m).pow(out.params.l)});
  out.hom.target = std::make_shared<PullbackOracle>(phi.map, phi.target, "coxeter-nf via phi");
  return out;
}

Hom build_embedding(int k, int n, int m, std::size_t max_cosets) {
  require_coprime(k, n, m);
  Hom h;
  h.name = "embedding";
  h.source = toric_presentation(k, n, m, false);
  const Presentation parent = j_parent_presentation(k, n, m);
  std::vector<Word> images;
  const Word s{make_letter(0)};
  const Word t{make_letter(1)};
  for (int i = 1; i <= n; ++i) images.push_back(t.pow(i - 1) * s * t.pow(1 - i));
  h.map = GenMap(h.source.alphabet, parent.alphabet, std::move(images));
  h.target = std::make_shared<CayleyOracle>(parent, max_cosets);
  return h;
}

Hom build_projection(int k, int n, int m) {
  require_coprime(k, n, m);
  const CoxeterMatrix cm = CoxeterMatrix::triangle(k, n, m);
  Hom h;
  h.name = "projection";
  h.source = j_parent_presentation(k, n, m);
  h.map = GenMap(h.source.alphabet, cm.alphabet(),
                 {letters({0, 1}), letters({1, 2}), letters({2, 0})});
  h.target = std::make_shared<CoxeterOracle>(cm);
  return h;
}

CentralityWitness centrality_witness(int n, int m) {
  if (n < 2 || m < 2 || std::gcd(n, m) != 1) throw DomainError("witness needs coprime n, m >= 2");
  CentralityWitness w;
  w.n = n;
  w.m = m;
  w.r = m % n;
  w.delta = cyclic_run(n, 1, m);
  w.c = central_element(n, m);
  std::vector<std::size_t> C(n + 1);
  for (int j = 2; j <= n; ++j) {
    C[j] = w.relations.add("C" + std::to_string(j), w.delta, cyclic_run(n, j, m));
  }
  auto idx = [n](int i) { return ((i - 1) % n + n) % n + 1; };

  // Moves x_a at `pos` (followed by delta) past it: x_a delta -> delta x_(a+m).
  auto shift = [&](DerivationBuilder& b, std::size_t pos, int a) {
    const int next = idx(a + 1);
    if (next != 1) b.apply(C[next], pos + 1);
    if (a != 1) b.apply(C[a], pos, false);
  };
  // The k-th block of m letters of c is x_(km+1) ... = C_j's right side.
  auto block = [&](DerivationBuilder& b, std::size_t offset, bool to_delta) {
    for (int k = 1; k < n; ++k) {
      const int j = idx(k * m + 1);
      b.apply(C[j], offset + static_cast<std::size_t>(k * m), !to_delta);
    }
  };

  for (int i = 1; i <= n; ++i) {
    DerivationBuilder b(w.relations, Word{make_letter(i - 1)} * w.delta);
    shift(b, 0, i);
    w.shift.push_back(std::move(b).finish());
  }
  {
    DerivationBuilder b(w.relations, w.c);
    block(b, 0, true);
    w.c_to_delta = std::move(b).finish();
  }
  for (int i = 1; i <= n; ++i) {
    DerivationBuilder b(w.relations, Word{make_letter(i - 1)} * w.c);
    block(b, 1, true);
    int a = i;
    for (int t = 0; t < n; ++t) {
      shift(b, static_cast<std::size_t>(t * m), a);
      a = idx(a + m);
    }
    block(b, 0, false);
    w.central.push_back(std::move(b).finish());
  }
  return w;
}

CheckResult check_centrality(const CentralityWitness& w) {
  const int n = w.n;
  auto x = [n](int i) { return Word{make_letter(((i - 1) % n + n) % n)}; };
  for (int i = 1; i <= n; ++i) {
    CheckResult r = check_proof(w.relations, w.shift[i - 1], x(i) * w.delta,
                                w.delta * x(i + w.m));
    if (!r.ok) return {false, r.failed_step, "shift " + std::to_string(i) + ": " + r.message};
  }
  CheckResult r = check_proof(w.relations, w.c_to_delta, w.c, w.delta.pow(n));
  if (!r.ok) return {false, r.failed_step, "c to delta^n: " + r.message};
  for (int i = 1; i <= n; ++i) {
    r = check_proof(w.relations, w.central[i - 1], x(i) * w.c, w.c * x(i));
    if (!r.ok) return {false, r.failed_step, "central " + std::to_string(i) + ": " + r.message};
  }
  return {};
}

Verdict check_image_chain(const Hom& h, const Derivation& d) {
  const Word start = apply_map(h.map, d.start);
  Verdict out = Verdict::yes;
  for (const Step& s : d.steps) {
    Verdict v = h.target->equal(apply_map(h.map, s.result), start);
    if (v == Verdict::no) return v;
    if (v == Verdict::unknown) out = v;
  }
  return out;
}

ExactSequenceReport exact_sequence_check(int k, int n, int m, std::size_t max_cosets) {
  require_coprime(k, n, m);
  const CayleyOracle toric(toric_presentation(k, n, m, false), max_cosets);
  const CoxeterMatrix cm = CoxeterMatrix::triangle(k, n, m);
  const CayleyOracle tri(cm.presentation(), max_cosets);
  const CayleyTable& W = toric.table();
  const CayleyTable& T = tri.table();
  const Hom phi = build_phi(k, n, m);

  ExactSequenceReport rep;
  rep.order_w = W.size();
  const int c = W.element(central_element(n, m));
  rep.order_c = W.order(c);
  rep.order_w_plus = T.subgroup({T.element(letters({0, 1})), T.element(letters({1, 2}))}).size();
  std::set<int> image;
  std::set<int> kernel;
  for (int e = 0; e < W.size(); ++e) {
    int img = T.element(apply_map(phi.map, W.word(e)));
    image.insert(img);
    if (img == 0) kernel.insert(e);
  }
  rep.image_size = image.size();
  rep.kernel_size = kernel.size();
  std::vector<int> wplus =
      T.subgroup({T.element(letters({0, 1})), T.element(letters({1, 2}))});
  rep.onto = std::vector<int>(image.begin(), image.end()) == wplus;
  std::vector<int> cpow = W.subgroup({c});
  rep.kernel_is_c = std::vector<int>(kernel.begin(), kernel.end()) == cpow;
  rep.c_central = true;
  for (int g = 0; g < W.num_gens(); ++g) rep.c_central = rep.c_central && W.commute(c, W.gen(g));
  return rep;
}

bool stu_power_is_c(int k, int n, int m, std::size_t max_cosets) {
  const Hom emb = build_embedding(k, n, m, max_cosets);
  const auto& oracle = static_cast<const CayleyOracle&>(*emb.target);
  const CayleyTable& G = oracle.table();
  const Word stu = letters({0, 1, 2}).pow(n * m);
  return G.element(stu) == G.element(apply_map(emb.map, central_element(n, m)));
}

ToricWordResult toric_word_problem(int k, int n, int m, const Word& w, std::size_t max_cosets) {
  require_coprime(k, n, m);
  ToricWordResult out;
  const Presentation p = toric_presentation(k, n, m, false);
  if (max_generator(w) > n) throw UnknownGenerator("word uses a generator outside x1..x" + std::to_string(n));
  const Word rw = free_reduce(w);
  if (rw.empty()) {
    out.identity = Verdict::yes;
    out.method = "free reduction";
    return out;
  }
  CayleyOracle full(p, max_cosets);
  if (full.complete()) {
    out.identity = full.is_identity(rw);
    out.method = "cayley-table";
    out.evidence.push_back("enumerated order " + std::to_string(full.table().size()));
    return out;
  }
  out.evidence.push_back("enumeration overflowed at " + std::to_string(max_cosets) + " cosets");
  const Hom phi = build_phi(k, n, m);
  if (phi.target->is_identity(apply_map(phi.map, rw)) == Verdict::no) {
    out.identity = Verdict::no;
    out.method = "image under phi is nontrivial (coxeter nf)";
    return out;
  }
  out.evidence.push_back("image under phi is trivial: w lies in the center <c>");
  for (int kk = 2; kk < k; ++kk) {
    if (k % kk != 0 || !finite_toric_row(kk, n, m)) continue;
    CayleyOracle q(toric_presentation(kk, n, m, false), max_cosets);
    if (q.is_identity(rw) == Verdict::no) {
      out.identity = Verdict::no;
      out.method = "separated in the finite quotient W(" + std::to_string(kk) + "," +
                   std::to_string(n) + "," + std::to_string(m) + ")";
      return out;
    }
    out.evidence.push_back("not separated in W(" + std::to_string(kk) + "," + std::to_string(n) +
                           "," + std::to_string(m) + ")");
  }
  out.identity = Verdict::unknown;
  out.method = "center coset not decided";
  return out;
}

ToricWordResult classical_separation(int n, int m, const Word& u, const Word& v) {
  if (n < 2 || m < 2 || std::gcd(n, m) != 1) throw DomainError("needs coprime n, m >= 2");
  ToricWordResult out;
  const Word d = free_reduce(u * invert(v));
  if (d.empty()) {
    out.identity = Verdict::yes;
    out.method = "free reduction";
    return out;
  }
  for (const FiniteRow& row : finite_toric_rows(std::max(n, m))) {
    if (!((row.n == n && row.m == m) || (row.n == m && row.m == n))) continue;
    CayleyOracle q(toric_presentation(row.k, n, m, false), 1'000'000);
    const std::string name = "W(" + std::to_string(row.k) + "," + std::to_string(n) + "," +
                             std::to_string(m) + ")";
    if (q.is_identity(d) == Verdict::no) {
      out.identity = Verdict::no;
      out.method = "separated in " + name;
      return out;
    }
    out.evidence.push_back("not separated in " + name);
  }
  out.identity = Verdict::unknown;
  out.method = "not separated by any finite toric quotient";
  return out;
}

}  // namespace toric
