#include "toric/reps.hpp"

#include <numeric>

#include "toric/cosets.hpp"
#include "toric/presentation.hpp"

namespace toric {

namespace {

int rep_modulus(int a, int b, int c) {
  if (a < 2 || b < 2 || c < 2) throw DomainError("labels must be at least 2");
  return std::lcm(std::lcm(2 * a, 2 * b), 2 * c);
}

Cyc pi_over(int N, int a) { return Cyc::zeta(N, N / (2 * a)); }

}  // namespace

Cyc rho_constraint(int a, int b, int c) {
  const int N = rep_modulus(a, b, c);
  const Cyc th = pi_over(N, a), ph = pi_over(N, b), ps = pi_over(N, c);
  return th * ph * (ps + ps.inverse()) - th * th - ph * ph;
}

Rep build_rho(int a, int b, int c, const Cyc& q, const Cyc& r) {
  Rep rep;
  rep.a = a;
  rep.b = b;
  rep.c = c;
  rep.modulus = rep_modulus(a, b, c);
  const int N = rep.modulus;
  rep.theta = pi_over(N, a);
  rep.phi = pi_over(N, b);
  rep.psi = pi_over(N, c);
  const Cyc want = rho_constraint(a, b, c);
  const Cyc have = q * r;
  if (have != want) throw ConstraintViolation(have.str(), want.str());
  rep.q = q.embed(std::lcm(q.modulus(), N));
  rep.r = r.embed(std::lcm(r.modulus(), N));
  const Cyc one = Cyc::one(N), zero = Cyc::zero(N);
  rep.ms = {rep.theta * rep.theta, rep.q, zero, one};
  rep.mt = {one, zero, rep.r, rep.phi * rep.phi};
  rep.mu = (rep.mt.inverse() * rep.ms.inverse()).scaled(rep.theta * rep.phi * rep.psi);
  return rep;
}

std::vector<QrPreset> qr_presets(int a, int b, int c) {
  const Cyc v = rho_constraint(a, b, c);
  if (v.is_zero()) return {{"zero", Cyc(0), Cyc(0)}, {"q-one", Cyc(1), Cyc(0)}};
  return {{"q-const", v, Cyc(1)}, {"r-const", Cyc(1), v}};
}

QrPreset qr_preset(int a, int b, int c, const std::string& name) {
  std::string offered;
  for (QrPreset& p : qr_presets(a, b, c)) {
    if (p.name == name) return p;
    offered += (offered.empty() ? "" : ", ") + p.name;
  }
  throw DomainError("unknown (q,r) preset '" + name + "'; offered: " + offered);
}

CycMatrix2 rho_eval(const Rep& rep, const Word& w) {
  const CycMatrix2 mats[3] = {rep.ms, rep.mt, rep.mu};
  const CycMatrix2 invs[3] = {rep.ms.inverse(), rep.mt.inverse(), rep.mu.inverse()};
  CycMatrix2 out = CycMatrix2::identity(rep.modulus);
  for (Letter l : w) {
    const int g = gen_of(l);
    if (g > 2) throw UnknownGenerator("representation words use s, t, u");
    out = out * (is_inverse(l) ? invs[g] : mats[g]);
  }
  return out;
}

CycMatrix2 rho_eval_toric(const Rep& rep, const Word& w) {
  Word image;
  const Word s{make_letter(0)};
  const Word t{make_letter(1)};
  for (Letter l : w) {
    const int i = gen_of(l) + 1;
    if (i > rep.b) throw UnknownGenerator("toric word uses x" + std::to_string(i));
    Word x = t.pow(i - 1) * s * t.pow(1 - i);
    image *= is_inverse(l) ? invert(x) : x;
  }
  return rho_eval(rep, image);
}

RelationReport verify_relations(const Rep& rep) {
  const CycMatrix2 id = CycMatrix2::identity(rep.modulus);
  RelationReport r;
  r.s_order = rep.ms.pow(rep.a) == id;
  r.t_order = rep.mt.pow(rep.b) == id;
  r.u_order = rep.mu.pow(rep.c) == id;
  const CycMatrix2 stu = rep.ms * rep.mt * rep.mu;
  r.braid = stu == rep.mt * rep.mu * rep.ms && stu == rep.mu * rep.ms * rep.mt;
  r.scalar = stu == CycMatrix2::scalar(rep.theta * rep.phi * rep.psi);
  r.det_s = rep.ms.det() == rep.theta * rep.theta;
  r.det_t = rep.mt.det() == rep.phi * rep.phi;
  return r;
}

std::optional<int> matrix_order(const CycMatrix2& m, int bound) {
  int N = std::lcm(std::lcm(m.a.modulus(), m.b.modulus()), std::lcm(m.c.modulus(), m.d.modulus()));
  const CycMatrix2 id = CycMatrix2::identity(N);
  CycMatrix2 p = m;
  for (int k = 1; k <= bound; ++k) {
    if (p == id) return k;
    p = p * m;
  }
  return std::nullopt;
}

UnfaithfulnessReport unfaithfulness_witness() {
  UnfaithfulnessReport rep;
  rep.constraint = rho_constraint(rep.a, rep.b, rep.c).str();
  const Word x1x2 = Word{make_letter(0), make_letter(1)};
  const Word target = x1x2.pow(3);
  for (const QrPreset& p : qr_presets(rep.a, rep.b, rep.c)) {
    Rep rho = build_rho(rep.a, rep.b, rep.c, p.q, p.r);
    WitnessCase wc;
    wc.preset = p.name;
    wc.image_is_identity = rho_eval_toric(rho, target) == CycMatrix2::identity(rho.modulus);
    const CycMatrix2 stu = rho.ms * rho.mt * rho.mu;
    wc.stu_is_minus_id = stu == CycMatrix2::scalar(Cyc::one(rho.modulus)).scaled(Cyc(-1));
    wc.stu_order = matrix_order(stu, 64);
    wc.ms_mt_commute = rho.ms * rho.mt == rho.mt * rho.ms;
    wc.relations = verify_relations(rho).all();
    rep.cases.push_back(std::move(wc));
  }
  // W(3,2,3) is a quotient of W(6,2,3) (x_i^6 = 1 follows from x_i^3 = 1).
  CosetTable ct = todd_coxeter(toric_presentation(3, 2, 3), {}, {});
  CayleyTable q(ct);
  rep.order_in_quotient = element_order(q, x1x2);
  bool all_identity = !rep.cases.empty();
  for (const WitnessCase& wc : rep.cases) all_identity = all_identity && wc.image_is_identity;
  rep.conclusion = all_identity && q.power(q.element(x1x2), 3) != 0;
  return rep;
}

}  // namespace toric
