// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "toric/classify.hpp"
#include "toric/cosets.hpp"
#include "toric/coxeter.hpp"
#include "toric/garside.hpp"
#include "toric/maps.hpp"
#include "toric/reps.hpp"
#include "toric/schreier.hpp"

using namespace toric;

namespace {

struct Triple {
  int k, n, m;
};

std::string str(const Triple& t) {
  return "(" + std::to_string(t.k) + "," + std::to_string(t.n) + "," + std::to_string(t.m) + ")";
}

// Finite rows with orders frozen from the matrix-closure oracle and W+ orders
// of the triangle group's alternating subgroup.
struct FiniteCase {
  Triple t;
  std::size_t order;
  std::size_t w_plus;
};
const std::vector<FiniteCase> kFinite = {
    {{2, 3, 4}, 48, 24},  {{2, 3, 5}, 240, 60}, {{3, 2, 3}, 24, 12}, {{4, 2, 3}, 96, 24},
    {{5, 2, 3}, 600, 60}, {{3, 2, 5}, 360, 60}, {{2, 2, 3}, 6, 6},   {{2, 2, 5}, 10, 10},
    {{2, 2, 7}, 14, 14},  {{2, 2, 9}, 18, 18}};
const std::vector<Triple> kOverflow = {{6, 2, 3}, {2, 3, 7}, {3, 4, 5}};

// Collects failure notes for one criterion.
struct Log {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  int checks = 0;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Word random_word(std::mt19937& rng, int gens, int len, bool inverses) {
  Word w;
  for (int i = 0; i < len; ++i)
    w.push_back(make_letter(static_cast<int>(rng() % gens), inverses && rng() % 2 == 1));
  return w;
}

// ---------------------------------------------------------------------------

void finiteness(Log& log) {
  for (const FiniteCase& c : kFinite) {
    auto oracle = oracle::closure_order(oracle::toric_matrices(c.t.k, c.t.n, c.t.m), 10000);
    auto order = group_order(toric_presentation(c.t.k, c.t.n, c.t.m));
    log.expect(oracle == c.order, str(c.t) + " oracle order");
    log.expect(order == c.order, str(c.t) + " enumerated order");
  }
  for (const Triple& t : kOverflow) {
    EnumerationOptions o;
    o.max_cosets = 100000;
    CosetTable ct = todd_coxeter(toric_presentation(t.k, t.n, t.m), {}, o);
    log.expect(ct.status() == CosetTable::Status::overflow, str(t) + " overflows at 1e5");
  }
}

void index_law(Log& log) {
  for (const Triple& t : {Triple{2, 3, 3}, {2, 3, 4}, {2, 3, 5}}) {
    Presentation p = j_parent_presentation(t.k, t.n, t.m);
    NormalClosureResult nc = normal_closure(p, {parse_word("s", p.alphabet)});
    log.expect(nc.table.complete() && nc.table.size() == t.n * t.m, str(t) + " index b*c");
  }
}

void rs_round_trip(Log& log) {
  for (const FiniteCase& c : kFinite) {
    ToricRsResult r = toric_rs(c.t.k, c.t.n, c.t.m);
    log.expect(static_cast<int>(r.relabeled.alphabet.size()) == c.t.n, str(c.t) + " n generators");
    log.expect(group_order(r.relabeled) == group_order(toric_presentation(c.t.k, c.t.n, c.t.m)),
               str(c.t) + " order preserved");
    // Exact chain shape is only claimed for (2,3,4); elsewhere the restricted
    // Tietze moves can leave a redundant conjugate of a power relator.
    std::string why;
    if (!oracle::matches_chain_display(r.relabeled, c.t.k, c.t.n, c.t.m, &why))
      log.notes.push_back(str(c.t) + ": " + why);
  }
  ToricRsResult r = toric_rs(2, 3, 4);
  std::string why;
  const bool shape = oracle::matches_chain_display(r.relabeled, 2, 3, 4, &why);
  log.expect(shape, "(2,3,4) chain shape: " + why);
  log.expect(serialize(r.relabeled) == slurp(std::string(TORIC_GOLDEN_DIR) + "/rs_2_3_4.txt"),
             "(2,3,4) golden file");
}

void closed_forms(Log& log) {
  for (const Triple& t : {Triple{2, 3, 4}, {3, 2, 3}, {2, 3, 5}}) {
    auto [bad, total] = oracle::closed_form_mismatches(t.k, t.n, t.m);
    log.expect(bad == 0 && total == t.n * t.m + (t.n - 1) * t.m,
               str(t) + " " + std::to_string(bad) + "/" + std::to_string(total) + " mismatches");
  }
}

void reflection_classes(Log& log) {
  for (const FiniteCase& c : kFinite) {
    const FamilyParams fp{Family::toric, c.t.k, c.t.n, c.t.m};
    CayleyTable table(todd_coxeter(build(fp), {}));
    const int got = reflection_class_count(fp, table);
    log.expect(got == c.t.k - 1, str(c.t) + " gave " + std::to_string(got));
  }
  const FamilyParams j{Family::j_parent, 2, 3, 3};
  CayleyTable table(todd_coxeter(build(j), {}));
  const int got = reflection_class_count(j, table);
  log.expect(got == 2 + 3 + 3 - 3, "J(2,3,3) gave " + std::to_string(got));
}

void coxeter_equivalence(Log& log) {
  auto exhaustive = [&](const Triple& t) {
    CoxeterMatrix cm = CoxeterMatrix::triangle(t.k, t.n, t.m);
    CoxeterGroup g(cm);
    CayleyTable c(todd_coxeter(cm.presentation(), {}));
    // nf of every product word, against the table's product.
    std::map<Word, int> seen;
    bool ok = true;
    for (int a = 0; a < c.size(); ++a)
      for (int b = 0; b < c.size(); ++b) {
        const int e = c.mul(a, b);
        auto [it, fresh] = seen.emplace(g.nf(c.word(a) * c.word(b)), e);
        ok = ok && it->second == e;
      }
    log.expect(ok && static_cast<int>(seen.size()) == c.size(), str(t) + " all pairs");
  };
  exhaustive({3, 2, 3});
  exhaustive({2, 2, 5});

  auto sampled = [&](const Triple& t) {
    CoxeterMatrix cm = CoxeterMatrix::triangle(t.k, t.n, t.m);
    CoxeterGroup g(cm);
    CayleyTable c(todd_coxeter(cm.presentation(), {}));
    std::mt19937 rng(20240601);
    int disagreements = 0;
    for (int i = 0; i < 10000; ++i) {
      Word u = random_word(rng, 3, 4 + static_cast<int>(rng() % 20), false);
      // half the pairs name the same element by a different word
      Word v = i % 2 ? c.word(c.element(u)) : random_word(rng, 3, 4 + static_cast<int>(rng() % 20), false);
      if ((g.nf(u) == g.nf(v)) != (c.element(u) == c.element(v))) ++disagreements;
    }
    log.expect(disagreements == 0, str(t) + " sampled pairs: " + std::to_string(disagreements));
  };
  sampled({4, 2, 3});
  sampled({2, 3, 5});

  for (const Triple& t : {Triple{3, 2, 3}, {2, 2, 5}, {4, 2, 3}, {2, 3, 5}, {2, 3, 4}, {6, 2, 3},
                          {2, 3, 7}, {4, 2, 5}, {3, 4, 5}, {2, 2, 9}}) {
    CoxeterGroup g(CoxeterMatrix::triangle(t.k, t.n, t.m));
    log.expect(g.order(parse_word("r1 r3", g.alphabet()), 50) == t.m, str(t) + " order of r1 r3");
  }
}

void homomorphisms(Log& log) {
  std::vector<Triple> sweep;
  for (const FiniteCase& c : kFinite) sweep.push_back(c.t);
  for (const Triple& t : {Triple{6, 2, 3}, {2, 3, 7}, {4, 2, 5}}) sweep.push_back(t);
  for (const Triple& t : sweep) {
    Hom phi = build_phi(t.k, t.n, t.m);
    log.expect(check_hom(phi).verdict == Verdict::yes, str(t) + " phi well defined");
    log.expect(phi.target->is_identity(apply_map(phi.map, central_element(t.n, t.m))) == Verdict::yes,
               str(t) + " phi(c) = 1");
    PsiHom psi = build_psi(t.k, t.n, t.m);
    log.expect(check_hom(psi.hom).verdict == Verdict::yes, str(t) + " psi well defined");
    GenMap inc = alt_plus_inclusion();
    for (int g = 0; g < 2; ++g)
      log.expect(phi.target->equal(apply_map(phi.map, psi.hom.map.image(g)), inc.image(g)) == Verdict::yes,
                 str(t) + " phi psi fixes generator " + std::to_string(g));
  }
  for (const FiniteCase& c : kFinite) {
    ExactSequenceReport e = exact_sequence_check(c.t.k, c.t.n, c.t.m);
    auto triangle = oracle::closure_order3(oracle::triangle_reflections(c.t.k, c.t.n, c.t.m), 10000);
    log.expect(e.order_w_plus == c.w_plus, str(c.t) + " |W+| = " + std::to_string(e.order_w_plus));
    log.expect(triangle && *triangle == 2 * c.w_plus, str(c.t) + " |W+| against matrix closure");
    log.expect(e.order_w == e.order_c * e.order_w_plus, str(c.t) + " |W| = |<c>| |W+|");
    log.expect(e.onto && e.kernel_is_c && e.c_central, str(c.t) + " exact sequence");
  }
}

void representation(Log& log) {
  for (const Triple& t : {Triple{2, 3, 4}, {2, 3, 5}, {3, 2, 3}, {6, 2, 3}, {2, 3, 7}}) {
    for (const QrPreset& p : qr_presets(t.k, t.n, t.m)) {
      Rep rep = build_rho(t.k, t.n, t.m, p.q, p.r);
      log.expect(verify_relations(rep).all(), str(t) + " relations under " + p.name);
    }
  }
  UnfaithfulnessReport w = unfaithfulness_witness();
  log.expect(w.constraint == "0", "constraint vanishes for (6,2,3)");
  log.expect(w.cases.size() == 2, "two presets");
  for (const WitnessCase& c : w.cases) {
    log.expect(c.image_is_identity, c.preset + ": rho((x1 x2)^3) = Id");
    log.expect(c.stu_is_minus_id && c.stu_order == 2, c.preset + ": rho(stu) = -Id");
    log.expect(c.ms_mt_commute == (c.preset == "zero"), c.preset + ": commutation");
  }
  log.expect(w.order_in_quotient == 6, "x1 x2 has order 6 in W(3,2,3)");
  log.expect(w.conclusion, "unfaithful");
}

void garside(Log& log) {
  std::mt19937 rng(1234);
  for (auto [n, m] : {std::pair{2, 3}, {3, 4}, {2, 5}, {3, 5}}) {
    GarsideGroup g(n, m);
    const std::string nm = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
    const NormalForm d{1, {}};
    log.expect(g.gnf(Word::gen(0, n)) == d && g.gnf(Word::gen(1, m)) == d, nm + " x^n = y^m = D");
    const Word rel = Word::gen(0, n) * Word::gen(1, -m);
    int changed = 0;
    for (int t = 0; t < 1000; ++t) {
      Word w = random_word(rng, 2, 6 + static_cast<int>(rng() % 15), true);
      Word c = random_word(rng, 2, static_cast<int>(rng() % 6), true);
      Word r = rng() % 2 ? rel : invert(rel);
      const std::size_t pos = rng() % (w.size() + 1);
      Word v = w.subword(0, pos) * c * r * invert(c) * w.subword(pos, w.size() - pos);
      if (!(g.gnf(v) == g.gnf(w))) ++changed;
    }
    log.expect(changed == 0, nm + " relator insertion changed " + std::to_string(changed) + " forms");
    int central = 0;
    for (int t = 0; t < 200; ++t) {
      Word w = random_word(rng, 2, 12, true);
      central += g.equal(w * g.delta(), g.delta() * w);
    }
    log.expect(central == 200, nm + " D central");
  }
  int violations = 0, conjugate_fail = 0;
  for (const FiniteCase& c : kFinite) {
    const auto [k, n, m] = c.t;
    CayleyTable table(todd_coxeter(toric_presentation(k, n, m), {}));
    GarsideGroup g(n, m);
    GenMap s = sigma(n, m);
    for (int t = 0; t < 300; ++t) {
      Word w = random_word(rng, 2, 14, true);
      Word v = g.to_word(g.gnf(w));
      if (table.element(apply_map(s, w)) != table.element(apply_map(s, v))) ++violations;
    }
    // a n - b m = 1 with 0 < a < m
    long a = 1;
    while ((a * n - 1) % m != 0) ++a;
    const int mer = table.element(apply_map(s, meridian(n, m, a, (a * n - 1) / m)));
    std::set<int> targets;
    for (int i = 0; i < n; ++i) {
      targets.insert(table.gen(i));
      targets.insert(table.inv(table.gen(i)));
    }
    bool found = false;
    for (int h = 0; h < table.size() && !found; ++h) found = targets.count(table.conjugate(mer, h)) > 0;
    if (!found) ++conjugate_fail;
  }
  log.expect(violations == 0, "quotient consistency violations: " + std::to_string(violations));
  log.expect(conjugate_fail == 0, "meridians conjugate to x_i^(+-1)");
}

void classification(Log& log) {
  std::map<std::vector<long>, std::string> seen;
  int cases = 0;
  for (int k = 2; k <= 6; ++k)
    for (int m = 3; m <= 7; ++m)
      for (int n = 2; n < m; ++n) {
        if (std::gcd(n, m) != 1) continue;
        ClassifyReport r = classify(k, n, m);
        ++cases;
        const std::string name = str({k, n, m});
        log.expect(r.reflection_classes == k - 1, name + " reflection classes");
        if (!r.finite) {
          std::vector<int> want{k, n, m};
          std::sort(want.begin(), want.end());
          log.expect(r.maximal_finite_cyclic == want, name + " maximal finite cyclic orders");
        }
        auto [it, fresh] = seen.emplace(r.invariants(), name);
        log.expect(fresh, name + " collides with " + it->second);
      }
  log.expect(cases == 5 * 11, "sweep size " + std::to_string(cases));
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    std::function<void(Log&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "finiteness table reproduction", finiteness},
      {2, "index of the normal closure of s", index_law},
      {3, "Reidemeister-Schreier round trip", rs_round_trip},
      {4, "closed-form Schreier generators", closed_forms},
      {5, "reflection class counts", reflection_classes},
      {6, "Coxeter normal form against Cayley tables", coxeter_equivalence},
      {7, "homomorphism suite", homomorphisms},
      {8, "representation suite", representation},
      {9, "Garside suite", garside},
      {10, "classification invariants", classification},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Log log;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(log);
    } catch (const std::exception& e) {
      log.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = log.failures.empty();
    failed += !ok;
    std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title << " ("
              << log.checks << " checks, " << std::fixed;
    std::cout.precision(1);
    std::cout << secs << "s)\n";
    for (const std::string& f : log.failures) std::cout << "    failed: " << f << "\n";
    for (const std::string& n : log.notes) std::cout << "    note: " << n << "\n";
  }
  return failed == 0 ? 0 : 1;
}
