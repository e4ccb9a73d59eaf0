#pragma once

// The 2x2 representation of the parent J-group <s,t,u | s^a, t^b, u^c,
// stu = tus = ust> over a cyclotomic field.

#include <optional>
#include <string>
#include <vector>

#include "toric/cyclotomic.hpp"
#include "toric/words.hpp"

namespace toric {

class ConstraintViolation : public DomainError {
 public:
  ConstraintViolation(std::string lhs, std::string rhs)
      : DomainError("q r = " + lhs + " but the constraint requires " + rhs),
        lhs_(std::move(lhs)),
        rhs_(std::move(rhs)) {}
  const std::string& lhs() const noexcept { return lhs_; }
  const std::string& rhs() const noexcept { return rhs_; }

 private:
  std::string lhs_;
  std::string rhs_;
};

struct Rep {
  int a = 0, b = 0, c = 0;
  int modulus = 0;  // lcm(2a, 2b, 2c)
  Cyc theta, phi, psi;  // exp(i pi / a), exp(i pi / b), exp(i pi / c)
  Cyc q, r;
  CycMatrix2 ms, mt, mu;
};

// theta phi (psi + psi^-1) - theta^2 - phi^2.
Cyc rho_constraint(int a, int b, int c);

// Throws ConstraintViolation unless q r equals the constraint exactly, and
// DomainError for labels < 2.
Rep build_rho(int a, int b, int c, const Cyc& q, const Cyc& r);

struct QrPreset {
  std::string name;
  Cyc q, r;
};
// Constraint value v != 0: "q-const" (v, 1) and "r-const" (1, v).
// v = 0: "zero" (0, 0) and "q-one" (1, 0).
std::vector<QrPreset> qr_presets(int a, int b, int c);
// Throws DomainError for a name not offered for (a, b, c).
QrPreset qr_preset(int a, int b, int c, const std::string& name);

// Product of the matrices of a word over s, t, u.
CycMatrix2 rho_eval(const Rep& rep, const Word& w);
// Word over x1..x_b, through x_i = t^(i-1) s t^(1-i).
CycMatrix2 rho_eval_toric(const Rep& rep, const Word& w);

struct RelationReport {
  bool s_order = false;    // M_s^a = Id
  bool t_order = false;    // M_t^b = Id
  bool u_order = false;    // M_u^c = Id
  bool braid = false;      // M_s M_t M_u = M_t M_u M_s = M_u M_s M_t
  bool scalar = false;     // M_s M_t M_u = theta phi psi Id
  bool det_s = false;      // det M_s = theta^2
  bool det_t = false;      // det M_t = phi^2
  bool all() const { return s_order && t_order && u_order && braid && scalar && det_s && det_t; }
};
RelationReport verify_relations(const Rep& rep);

// Least p >= 1 with M^p = Id, or nullopt up to bound.
std::optional<int> matrix_order(const CycMatrix2& m, int bound);

struct WitnessCase {
  std::string preset;
  bool image_is_identity = false;  // rho((x1 x2)^3) = Id
  bool stu_is_minus_id = false;
  std::optional<int> stu_order;
  bool ms_mt_commute = false;
  bool relations = false;
};

struct UnfaithfulnessReport {
  int a = 6, b = 2, c = 3;
  std::string constraint;  // rendered constraint value
  std::vector<WitnessCase> cases;
  int order_in_quotient = 0;  // order of x1 x2 in W(3,2,3)
  bool conclusion = false;    // (x1 x2)^3 != 1 in W(6,2,3) yet maps to Id
};

UnfaithfulnessReport unfaithfulness_witness();

}  // namespace toric
