#include "toric/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <functional>
#include <numeric>
#include <set>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "toric/classify.hpp"
#include "toric/coxeter.hpp"
#include "toric/garside.hpp"
#include "toric/maps.hpp"
#include "toric/presentation.hpp"
#include "toric/reps.hpp"
#include "toric/schreier.hpp"

namespace toric {

namespace {

using json = nlohmann::ordered_json;

// Bad command-line input (exit code 2).
class InputError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string command;
  std::size_t max_cosets = 1'000'000;
  std::size_t budget = 100000;
  std::string format = "text";
  std::uint64_t seed = 0;
  std::string qr;
};

struct Report {
  json params = json::object();
  json result = json::object();
  std::string status = "ok";
  std::vector<std::string> evidence;
};

int to_int(const std::string& s, const char* what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw InputError(std::string("expected an integer for ") + what + ", got '" + s + "'");
  }
  return v;
}

// "6,2,3" or three separate arguments starting at args[from].
std::vector<int> ints(const std::vector<std::string>& args, std::size_t from, std::size_t count,
                      std::size_t* used = nullptr) {
  std::vector<int> out;
  if (from < args.size() && args[from].find(',') != std::string::npos) {
    std::string item;
    std::string s = args[from] + ",";
    for (char ch : s) {
      if (ch == ',') {
        out.push_back(to_int(item, "parameter"));
        item.clear();
      } else {
        item += ch;
      }
    }
    if (used) *used = 1;
  } else {
    for (std::size_t i = 0; i < count && from + i < args.size(); ++i) {
      out.push_back(to_int(args[from + i], "parameter"));
    }
    if (used) *used = out.size();
  }
  if (out.size() != count) {
    throw InputError("expected " + std::to_string(count) + " integer parameters");
  }
  return out;
}

std::string join(const std::vector<std::string>& args, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < args.size(); ++i) out += (i == from ? "" : " ") + args[i];
  return out;
}

std::string status_of(Verdict v) { return v == Verdict::unknown ? "unknown" : "ok"; }

json verdict_json(Verdict v) {
  if (v == Verdict::unknown) return nullptr;
  return v == Verdict::yes;
}

std::size_t family_arity(Family f) {
  return (f == Family::torus_standard || f == Family::torus_classical ||
          f == Family::torus_dual)
             ? 2
             : 3;
}

FamilyParams family_params(const std::vector<std::string>& args, bool normalize) {
  if (args.empty()) throw InputError("missing family");
  FamilyParams fp;
  fp.family = parse_family(args[0]);
  fp.normalize = normalize;
  const std::size_t arity = family_arity(fp.family);
  std::vector<int> v = ints(args, 1, arity);
  if (arity == 2) {
    fp.n = v[0];
    fp.m = v[1];
  } else {
    fp.k = v[0];
    fp.n = v[1];
    fp.m = v[2];
  }
  return fp;
}

json family_json(const FamilyParams& fp) {
  json j;
  j["family"] = std::string(family_name(fp.family));
  if (family_arity(fp.family) == 3) j["k"] = fp.k;
  j["n"] = fp.n;
  j["m"] = fp.m;
  return j;
}

json words_json(const std::vector<Word>& ws, const Alphabet& a) {
  json out = json::array();
  for (const Word& w : ws) out.push_back(format_word(w, a));
  return out;
}

// ----------------------------------------------------------------- present

Report cmd_present(const std::vector<std::string>& args, bool normalize) {
  FamilyParams fp = family_params(args, normalize);
  Presentation p = build(fp);
  Report r;
  r.params = family_json(fp);
  r.result["generators"] = p.alphabet.names();
  r.result["relators"] = words_json(p.relators, p.alphabet);
  r.result["text"] = display(fp);
  return r;
}

// ---------------------------------------------------------------- classify

json classify_json(const ClassifyReport& c) {
  json j;
  j["finite"] = c.finite;
  j["order"] = c.enumerated_order ? json(*c.enumerated_order) : json(nullptr);
  j["shephard_todd"] = c.row ? json(c.row->name) : json(nullptr);
  j["center_quotient"] = c.row ? json(c.row->center_quotient) : json(nullptr);
  j["w_plus_order"] = c.row ? json(c.row->w_plus_order) : json(nullptr);
  j["triangle"] = std::string(triangle_type_name(c.triangle));
  j["reflection_classes"] = c.reflection_classes;
  j["reflection_method"] = c.reflection_method;
  j["maximal_finite_cyclic"] = c.maximal_finite_cyclic;
  j["braid_group"] = c.braid_group;
  j["invariants"] = c.invariants();
  return j;
}

Report cmd_classify(const RunConfig& cfg, const std::vector<std::string>& args) {
  std::vector<int> v = ints(args, 0, 3);
  ClassifyReport c = classify(v[0], v[1], v[2], cfg.max_cosets);
  Report r;
  r.params = {{"k", v[0]}, {"n", v[1]}, {"m", v[2]}};
  r.result = classify_json(c);
  r.evidence = c.evidence;
  if (c.enumeration_overflow) r.status = "overflow";
  return r;
}

Report cmd_sweep(const RunConfig& cfg, int kmax, int mmax, unsigned threads) {
  std::vector<std::array<int, 3>> grid;
  for (int k = 2; k <= kmax; ++k) {
    for (int m = 3; m <= mmax; ++m) {
      for (int n = 2; n < m; ++n) {
        if (std::gcd(n, m) == 1) grid.push_back({k, n, m});
      }
    }
  }
  std::vector<std::optional<ClassifyReport>> out(grid.size());
  std::vector<std::string> errors(grid.size());
  std::atomic<std::size_t> next{0};
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(grid.size(), 1)));
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        out[i] = classify(grid[i][0], grid[i][1], grid[i][2], cfg.max_cosets);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  Report r;
  r.params = {{"kmax", kmax}, {"mmax", mmax}};
  json rows = json::array();
  std::set<std::vector<long>> seen;
  bool distinct = true;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    json row = {{"k", grid[i][0]}, {"n", grid[i][1]}, {"m", grid[i][2]}};
    if (out[i]) {
      row["classification"] = classify_json(*out[i]);
      if (!seen.insert(out[i]->invariants()).second) distinct = false;
      if (out[i]->enumeration_overflow) r.status = "overflow";
    } else {
      row["error"] = errors[i];
      r.status = "error";
    }
    rows.push_back(std::move(row));
  }
  r.result["rows"] = std::move(rows);
  r.result["count"] = grid.size();
  r.result["invariants_distinct"] = distinct;
  r.evidence.push_back("invariant tuples compared across " + std::to_string(grid.size()) +
                       " parameter triples");
  return r;
}

// --------------------------------------------------------------- enumerate

Report cmd_enumerate(const RunConfig& cfg, const std::vector<std::string>& args,
                     const std::string& strategy, const std::vector<std::string>& subgroup,
                     bool normalize) {
  FamilyParams fp = family_params(args, normalize);
  Presentation p = build(fp);
  EnumerationOptions opts;
  opts.max_cosets = cfg.max_cosets;
  if (strategy == "felsch") {
    opts.strategy = Strategy::felsch;
  } else if (strategy != "hlt") {
    throw InputError("strategy must be hlt or felsch");
  }
  std::vector<Word> subgens;
  for (const std::string& s : subgroup) subgens.push_back(parse_word(s, p.alphabet));
  CosetTable ct = todd_coxeter(p, subgens, opts);
  Report r;
  r.params = family_json(fp);
  r.params["strategy"] = strategy;
  r.params["subgroup"] = subgroup;
  r.result["complete"] = ct.complete();
  r.result["index"] = ct.complete() ? json(ct.size()) : json(nullptr);
  r.result["max_active"] = ct.max_active;
  r.result["total_defined"] = ct.total_defined;
  if (!ct.complete()) {
    r.status = "overflow";
    r.evidence.push_back("active cosets would exceed " + std::to_string(cfg.max_cosets));
  } else {
    r.evidence.push_back("coset table closed with " + std::to_string(ct.size()) + " cosets");
  }
  return r;
}

// ---------------------------------------------------------------------- wp

Report cmd_wp(const RunConfig& cfg, const std::vector<std::string>& args) {
  if (args.size() < 3) throw InputError("usage: wp SYSTEM PARAMS WORD [WORD]");
  const std::string& system = args[0];
  Report r;
  r.params["system"] = system;
  const bool pair = args.size() >= 4;
  const std::string key = pair ? "equal" : "identity";
  auto word_args = [&](const Alphabet& a) {
    Word u = parse_word(args[2], a);
    Word v = pair ? parse_word(args[3], a) : Word{};
    r.params["words"] = pair ? json{args[2], args[3]} : json{args[2]};
    return std::pair{u, v};
  };

  if (system == "coxeter") {
    std::vector<int> v = ints(args, 1, 3);
    r.params["labels"] = v;
    CoxeterGroup g(CoxeterMatrix::triangle(v[0], v[1], v[2]));
    auto [u, w] = word_args(g.alphabet());
    r.result[key] = g.equal(u, w);
    r.result["nf"] = format_word(g.nf(u), g.alphabet());
    if (pair) r.result["nf_second"] = format_word(g.nf(w), g.alphabet());
    r.result["length"] = g.length(u);
    r.evidence.push_back("ShortLex normal forms from the minimal-root automaton");
  } else if (system == "garside") {
    std::vector<int> v = ints(args, 1, 2);
    r.params["n"] = v[0];
    r.params["m"] = v[1];
    GarsideGroup g(v[0], v[1]);
    auto [u, w] = word_args(g.alphabet());
    r.result[key] = g.equal(u, w);
    r.result["nf"] = g.render(g.gnf(u));
    if (pair) r.result["nf_second"] = g.render(g.gnf(w));
    r.evidence.push_back("greedy normal form in G(n,m)");
  } else if (system == "toric" || system == "classical") {
    const bool toric = system == "toric";
    std::vector<int> v = ints(args, 1, toric ? 3 : 2);
    const int n = toric ? v[1] : v[0], m = toric ? v[2] : v[1];
    r.params[toric ? "k" : "n"] = v[0];
    r.params[toric ? "n" : "m"] = v[1];
    if (toric) r.params["m"] = v[2];
    auto [u, w] = word_args(Alphabet::indexed("x", n));
    ToricWordResult res = toric ? toric_word_problem(v[0], n, m, free_reduce(u * invert(w)),
                                                     cfg.max_cosets)
                                : classical_separation(n, m, u, w);
    r.result[key] = verdict_json(res.identity);
    r.result["method"] = res.method;
    r.evidence = res.evidence;
    r.status = status_of(res.identity);
  } else if (system == "j-parent") {
    std::vector<int> v = ints(args, 1, 3);
    r.params["labels"] = v;
    CayleyOracle o(j_parent_presentation(v[0], v[1], v[2]), cfg.max_cosets);
    auto [u, w] = word_args(o.alphabet());
    Verdict res = o.equal(u, w);
    r.result[key] = verdict_json(res);
    r.result["method"] = "cayley-table";
    if (!o.complete()) r.evidence.push_back("enumeration overflowed");
    r.status = status_of(res);
  } else {
    throw InputError("unknown system '" + system +
                     "' (coxeter, garside, toric, classical, j-parent)");
  }
  return r;
}

// ------------------------------------------------------------------ derive

json derivation_json(const RelationSet& rels, const Derivation& d, const Alphabet& a) {
  json steps = json::array();
  for (const Step& s : d.steps) {
    json j;
    switch (s.kind) {
      case StepKind::apply:
        j["rule"] = rels[s.relation].name + (s.forward ? "" : "^-1");
        j["position"] = s.position;
        break;
      case StepKind::insert_pair:
        j["rule"] = "insert";
        j["position"] = s.position;
        break;
      case StepKind::reduce:
        j["rule"] = "reduce";
        break;
    }
    j["result"] = format_word(s.result, a);
    steps.push_back(std::move(j));
  }
  return {{"start", format_word(d.start, a)}, {"steps", std::move(steps)}};
}

Report cmd_derive(const RunConfig& cfg, const std::vector<std::string>& args) {
  if (args.empty()) throw InputError("usage: derive rs|centrality|equivalence PARAMS");
  Report r;
  r.params["what"] = args[0];
  if (args[0] == "rs") {
    std::vector<int> v = ints(args, 1, 3);
    r.params["k"] = v[0];
    r.params["n"] = v[1];
    r.params["m"] = v[2];
    EnumerationOptions opts;
    opts.max_cosets = cfg.max_cosets;
    ToricRsResult rs;
    try {
      rs = toric_rs(v[0], v[1], v[2], opts, cfg.budget);
    } catch (const IncompleteError& e) {
      r.status = "overflow";
      r.evidence.push_back(e.what());
      return r;
    }
    r.result["index"] = rs.closure.table.size();
    r.result["closure_rounds"] = rs.closure.rounds;
    json reps = json::array();
    for (std::size_t c = 0; c < rs.transversal.size(); ++c) {
      reps.push_back(format_word(rs.transversal.rep(static_cast<int>(c)), rs.parent.alphabet));
    }
    r.result["transversal"] = std::move(reps);
    r.result["schreier_generators"] = rs.rs.presentation.alphabet.size();
    r.result["schreier_relators"] = rs.rs.presentation.relators.size();
    r.result["budget_exceeded"] = rs.simplified.budget_exceeded;
    json elim = json::array();
    for (const Elimination& e : rs.simplified.eliminated) {
      elim.push_back(e.generator + " = " + format_word(e.value, rs.relabeled.alphabet));
    }
    r.result["eliminations"] = std::move(elim);
    r.result["presentation"] = serialize(rs.relabeled);
    std::optional<std::size_t> order = group_order(rs.relabeled, cfg.max_cosets);
    r.result["order"] = order ? json(*order) : json(nullptr);
    r.evidence.push_back("normal closure of s has index " + std::to_string(rs.closure.table.size()));
    if (rs.simplified.budget_exceeded) r.status = "budget-exceeded";
  } else if (args[0] == "centrality") {
    std::vector<int> v = ints(args, 1, 2);
    r.params["n"] = v[0];
    r.params["m"] = v[1];
    CentralityWitness w = centrality_witness(v[0], v[1]);
    const Alphabet a = Alphabet::indexed("x", v[0]);
    CheckResult ok = check_centrality(w);
    r.result["checked"] = ok.ok;
    if (!ok.ok) r.result["failure"] = ok.message;
    r.result["r"] = w.r;
    json rels = json::array();
    for (std::size_t i = 0; i < w.relations.size(); ++i) {
      rels.push_back(w.relations[i].name + ": " + format_word(w.relations[i].lhs, a) + " = " +
                     format_word(w.relations[i].rhs, a));
    }
    r.result["relations"] = std::move(rels);
    json shifts = json::array(), central = json::array();
    for (const Derivation& d : w.shift) shifts.push_back(derivation_json(w.relations, d, a));
    for (const Derivation& d : w.central) central.push_back(derivation_json(w.relations, d, a));
    r.result["shift"] = std::move(shifts);
    r.result["c_to_delta"] = derivation_json(w.relations, w.c_to_delta, a);
    r.result["central"] = std::move(central);
    r.evidence.push_back("every step replayed against the chain relations");
  } else if (args[0] == "equivalence") {
    std::vector<int> v = ints(args, 1, 2);
    r.params["n"] = v[0];
    r.params["m"] = v[1];
    EquivalenceWitness w = relation_equivalence(v[0], v[1]);
    const Alphabet a = Alphabet::indexed("x", v[0]);
    CheckResult ok = check_equivalence(w, v[0]);
    r.result["checked"] = ok.ok;
    if (!ok.ok) r.result["failure"] = ok.message;
    json a1 = json::array(), a2 = json::array();
    for (const Derivation& d : w.chain_from_shift) a1.push_back(derivation_json(w.relations, d, a));
    for (const Derivation& d : w.shift_from_chain) a2.push_back(derivation_json(w.relations, d, a));
    r.result["chain_from_shift"] = std::move(a1);
    r.result["shift_from_chain"] = std::move(a2);
  } else {
    throw InputError("unknown derivation '" + args[0] + "' (rs, centrality, equivalence)");
  }
  return r;
}

// --------------------------------------------------------------------- hom

Report cmd_hom(const RunConfig& cfg, const std::vector<std::string>& args) {
  std::vector<int> v = ints(args, 0, 3);
  const int k = v[0], n = v[1], m = v[2];
  Report r;
  r.params = {{"k", k}, {"n", n}, {"m", m}};
  auto record = [&](const std::string& name, const HomCheck& h) {
    json j = {{"well_defined", verdict_json(h.verdict)}, {"relators_checked", h.checked}};
    if (h.failing_relator) j["failing_relator"] = h.failing_text;
    r.result[name] = std::move(j);
    if (h.verdict == Verdict::unknown) r.status = "unknown";
  };
  Hom phi = build_phi(k, n, m);
  record("phi", check_hom(phi));
  PsiHom psi = build_psi(k, n, m);
  record("psi", check_hom(psi.hom));
  r.result["psi_params"] = {{"q", psi.params.q}, {"r", psi.params.r}, {"l", psi.params.l}};
  record("projection", check_hom(build_projection(k, n, m)));
  const Word c = central_element(n, m);
  r.result["c"] = format_word(c, phi.source.alphabet);
  r.result["phi_c_trivial"] = verdict_json(phi.target->is_identity(apply_map(phi.map, c)));
  const GenMap fix = compose(phi.map, psi.hom.map);
  const GenMap inc = alt_plus_inclusion();
  bool fixes = true;
  for (int g = 0; g < 2; ++g) {
    fixes = fixes && phi.target->equal(fix.image(g), inc.image(g)) == Verdict::yes;
  }
  r.result["phi_psi_fixes_generators"] = fixes;
  if (finite_toric_row(k, n, m)) {
    try {
      ExactSequenceReport es = exact_sequence_check(k, n, m, cfg.max_cosets);
      r.result["exact_sequence"] = {{"order_w", es.order_w},
                                    {"order_c", es.order_c},
                                    {"order_w_plus", es.order_w_plus},
                                    {"onto", es.onto},
                                    {"kernel_is_c", es.kernel_is_c},
                                    {"c_central", es.c_central}};
      r.evidence.push_back("short exact sequence checked on full Cayley tables");
    } catch (const IncompleteError& e) {
      r.evidence.push_back(e.what());
      r.status = "overflow";
    }
  } else {
    r.result["order_c"] = nullptr;
    r.evidence.push_back("W(k,n,m) infinite: the order of c is not decided");
  }
  return r;
}

// --------------------------------------------------------------------- rep

json matrix_json(const CycMatrix2& m) { return json{{m.a.str(), m.b.str()}, {m.c.str(), m.d.str()}}; }

Report cmd_rep(const RunConfig& cfg, const std::vector<std::string>& args) {
  if (args.empty()) throw InputError("usage: rep witness | rep verify A B C | rep eval A B C WORD");
  Report r;
  r.params["what"] = args[0];
  if (args[0] == "witness") {
    UnfaithfulnessReport w = unfaithfulness_witness();
    r.params["labels"] = {w.a, w.b, w.c};
    r.result["constraint"] = w.constraint;
    json cases = json::array();
    for (const WitnessCase& c : w.cases) {
      cases.push_back({{"preset", c.preset},
                       {"rho_x1x2_cubed_is_identity", c.image_is_identity},
                       {"rho_stu_is_minus_identity", c.stu_is_minus_id},
                       {"rho_stu_order", c.stu_order ? json(*c.stu_order) : json(nullptr)},
                       {"ms_mt_commute", c.ms_mt_commute},
                       {"relations_hold", c.relations}});
    }
    r.result["cases"] = std::move(cases);
    r.result["order_x1x2_in_W323"] = w.order_in_quotient;
    r.result["unfaithful"] = w.conclusion;
    r.evidence.push_back("W(3,2,3) is a quotient of W(6,2,3) in which (x1 x2)^3 is nontrivial");
    return r;
  }
  if (args[0] != "verify" && args[0] != "eval") {
    throw InputError("unknown rep command '" + args[0] + "' (witness, verify, eval)");
  }
  std::size_t used = 0;
  std::vector<int> v = ints(args, 1, 3, &used);
  r.params["labels"] = v;
  const std::string preset = cfg.qr.empty() ? qr_presets(v[0], v[1], v[2]).front().name : cfg.qr;
  QrPreset qr = qr_preset(v[0], v[1], v[2], preset);
  r.params["qr"] = preset;
  Rep rho = build_rho(v[0], v[1], v[2], qr.q, qr.r);
  r.result["modulus"] = rho.modulus;
  r.result["q"] = rho.q.str();
  r.result["r"] = rho.r.str();
  if (args[0] == "verify") {
    RelationReport rel = verify_relations(rho);
    r.result["M_s"] = matrix_json(rho.ms);
    r.result["M_t"] = matrix_json(rho.mt);
    r.result["M_u"] = matrix_json(rho.mu);
    r.result["relations"] = {{"s_order", rel.s_order}, {"t_order", rel.t_order},
                             {"u_order", rel.u_order}, {"braid", rel.braid},
                             {"scalar", rel.scalar},   {"det_s", rel.det_s},
                             {"det_t", rel.det_t}};
    r.result["all_hold"] = rel.all();
  } else {
    const std::string text = join(args, 1 + used);
    const Alphabet stu({"s", "t", "u"});
    CycMatrix2 m;
    try {
      m = rho_eval(rho, parse_word(text, stu));
    } catch (const UnknownGenerator&) {
      m = rho_eval_toric(rho, parse_word(text, Alphabet::indexed("x", v[1])));
    }
    r.params["word"] = text;
    r.result["matrix"] = matrix_json(m);
    r.result["is_identity"] = m == CycMatrix2::identity(rho.modulus);
    r.result["is_scalar"] = m.is_scalar();
  }
  r.evidence.push_back("exact arithmetic in Q(z), z = exp(2 pi i / " + std::to_string(rho.modulus) + ")");
  return r;
}

// ------------------------------------------------------------------ output

void text_value(std::ostream& out, const std::string& indent, const std::string& key,
                const json& v) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.find('\n') != std::string::npos) {
      out << indent << key << ":\n";
      std::size_t start = 0;
      while (start < s.size()) {
        std::size_t end = s.find('\n', start);
        if (end == std::string::npos) end = s.size();
        out << indent << "  " << s.substr(start, end - start) << "\n";
        start = end + 1;
      }
    } else {
      out << indent << key << ": " << s << "\n";
    }
  } else if (v.is_object()) {
    out << indent << key << ":\n";
    for (auto it = v.begin(); it != v.end(); ++it) text_value(out, indent + "  ", it.key(), *it);
  } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_string())) {
    out << indent << key << ":\n";
    for (const json& e : v) {
      if (e.is_string()) {
        out << indent << "  - " << e.get<std::string>() << "\n";
      } else {
        out << indent << "  -\n";
        for (auto it = e.begin(); it != e.end(); ++it) text_value(out, indent + "    ", it.key(), *it);
      }
    }
  } else {
    out << indent << key << ": " << v.dump() << "\n";
  }
}

void emit(std::ostream& out, const RunConfig& cfg, const Report& r) {
  if (cfg.format == "json") {
    json j;
    j["command"] = cfg.command;
    j["params"] = r.params;
    j["bounds"] = {{"max_cosets", cfg.max_cosets}, {"budget", cfg.budget}, {"seed", cfg.seed}};
    j["result"] = r.result;
    j["status"] = r.status;
    j["evidence"] = r.evidence;
    out << j.dump(2) << "\n";
    return;
  }
  if (cfg.command == "present") {
    out << r.result["text"].get<std::string>();
    return;
  }
  for (auto it = r.result.begin(); it != r.result.end(); ++it) text_value(out, "", it.key(), *it);
  out << "status: " << r.status << "\n";
  for (const std::string& e : r.evidence) out << "evidence: " << e << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toric reflection groups: presentations, enumeration, word problems"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--max-cosets", cfg.max_cosets, "Coset enumeration bound")->capture_default_str();
  app.add_option("--budget", cfg.budget, "Tietze elimination budget")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--qr", cfg.qr, "(q,r) preset for rep: zero, q-one, q-const, r-const");

  std::vector<std::string> pos;
  bool no_normalize = false;
  std::string strategy = "hlt";
  std::vector<std::string> subgroup;
  int kmax = 6, mmax = 7;
  unsigned threads = 0;

  auto positional = [&](CLI::App* sub, const char* help) {
    sub->add_option("args", pos, help)->required();
    sub->allow_extras(false);
    sub->positionals_at_end(false);
  };
  auto* present = app.add_subcommand("present", "Print a family's presentation");
  positional(present, "FAMILY PARAMS...");
  present->add_flag("--no-normalize", no_normalize, "Keep n > m as given");
  auto* classify_cmd = app.add_subcommand("classify", "Classification report for W(k,n,m)");
  positional(classify_cmd, "K N M");
  auto* wp = app.add_subcommand("wp", "Word problem: identity or equality of words");
  positional(wp, "SYSTEM PARAMS WORD [WORD]");
  auto* derive = app.add_subcommand("derive", "Derivations: rs, centrality, equivalence");
  positional(derive, "WHAT PARAMS");
  auto* rep = app.add_subcommand("rep", "Matrix representation: witness, verify, eval");
  positional(rep, "witness | verify A B C | eval A B C WORD");
  auto* enumerate = app.add_subcommand("enumerate", "Coset enumeration");
  positional(enumerate, "FAMILY PARAMS...");
  enumerate->add_option("--strategy", strategy, "hlt or felsch")->capture_default_str();
  enumerate->add_option("--subgroup", subgroup, "Subgroup generator words");
  enumerate->add_flag("--no-normalize", no_normalize, "Keep n > m as given");
  auto* hom = app.add_subcommand("hom", "Check phi, psi, projection and the central extension");
  positional(hom, "K N M");
  auto* sweep = app.add_subcommand("sweep", "Classify every (k,n,m) with k <= kmax, n < m <= mmax");
  sweep->add_option("--kmax", kmax)->capture_default_str();
  sweep->add_option("--mmax", mmax)->capture_default_str();
  sweep->add_option("--threads", threads, "0 = hardware concurrency")->capture_default_str();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Report r;
    if (present->parsed()) {
      cfg.command = "present";
      r = cmd_present(pos, !no_normalize);
    } else if (classify_cmd->parsed()) {
      cfg.command = "classify";
      r = cmd_classify(cfg, pos);
    } else if (wp->parsed()) {
      cfg.command = "wp";
      r = cmd_wp(cfg, pos);
    } else if (derive->parsed()) {
      cfg.command = "derive";
      r = cmd_derive(cfg, pos);
    } else if (rep->parsed()) {
      cfg.command = "rep";
      r = cmd_rep(cfg, pos);
    } else if (enumerate->parsed()) {
      cfg.command = "enumerate";
      r = cmd_enumerate(cfg, pos, strategy, subgroup, !no_normalize);
    } else if (hom->parsed()) {
      cfg.command = "hom";
      r = cmd_hom(cfg, pos);
    } else if (sweep->parsed()) {
      cfg.command = "sweep";
      if (kmax < 2 || mmax < 3) throw InputError("sweep needs kmax >= 2 and mmax >= 3");
      r = cmd_sweep(cfg, kmax, mmax, threads);
    }
    emit(out, cfg, r);
    return 0;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownGenerator& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace toric
