#pragma once

// Homomorphisms between the families: phi from W(k,n,m) onto the alternating
// subgroup of the triangle Coxeter group, psi back from its two-generator
// presentation, the embedding into the parent J-group, and the central
// element c. Targets carry a word-problem oracle so relators can be checked.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toric/cosets.hpp"
#include "toric/coxeter.hpp"
#include "toric/derivation.hpp"
#include "toric/garside.hpp"
#include "toric/presentation.hpp"

namespace toric {

enum class Verdict { yes, no, unknown };
std::string_view verdict_name(Verdict v);

class WordOracle {
 public:
  virtual ~WordOracle() = default;
  virtual const Alphabet& alphabet() const = 0;
  virtual std::string name() const = 0;
  virtual Verdict is_identity(const Word& w) const = 0;
  Verdict equal(const Word& u, const Word& v) const;
};

using OraclePtr = std::shared_ptr<const WordOracle>;

class CoxeterOracle final : public WordOracle {
 public:
  explicit CoxeterOracle(const CoxeterMatrix& cm);
  const Alphabet& alphabet() const override { return group_.alphabet(); }
  std::string name() const override { return "coxeter-nf"; }
  Verdict is_identity(const Word& w) const override;
  const CoxeterGroup& group() const noexcept { return group_; }

 private:
  CoxeterGroup group_;
};

// Finite group by coset enumeration; every answer is unknown on overflow.
class CayleyOracle final : public WordOracle {
 public:
  CayleyOracle(Presentation p, std::size_t max_cosets);
  const Alphabet& alphabet() const override { return presentation_.alphabet; }
  std::string name() const override { return "cayley-table"; }
  Verdict is_identity(const Word& w) const override;
  bool complete() const noexcept { return table_ != nullptr; }
  // Throws IncompleteError on overflow.
  const CayleyTable& table() const;
  std::size_t bound() const noexcept { return bound_; }

 private:
  Presentation presentation_;
  std::size_t bound_;
  std::shared_ptr<CayleyTable> table_;
};

class GarsideOracle final : public WordOracle {
 public:
  GarsideOracle(int n, int m) : group_(n, m) {}
  const Alphabet& alphabet() const override { return group_.alphabet(); }
  std::string name() const override { return "garside-nf"; }
  Verdict is_identity(const Word& w) const override {
    return group_.is_identity(w) ? Verdict::yes : Verdict::no;
  }

 private:
  GarsideGroup group_;
};

// Identity of f(w) under `inner`; decides the source group when f is injective.
class PullbackOracle final : public WordOracle {
 public:
  PullbackOracle(GenMap f, OraclePtr inner, std::string name);
  const Alphabet& alphabet() const override { return f_.source(); }
  std::string name() const override { return name_; }
  Verdict is_identity(const Word& w) const override;

 private:
  GenMap f_;
  OraclePtr inner_;
  std::string name_;
};

struct Hom {
  std::string name;
  GenMap map;
  Presentation source;
  OraclePtr target;
};

struct HomCheck {
  Verdict verdict = Verdict::yes;  // yes: every relator maps to the identity
  std::size_t checked = 0;
  std::optional<std::size_t> failing_relator;  // first relator with verdict no/unknown
  std::string failing_text;
};

// Throws IncompleteError when the Hom has no target oracle.
HomCheck check_hom(const Hom& h);

struct PsiParams {
  int q = 0;
  int r = 0;
  int l = 0;  // least l >= 1 with r l = 1 mod n
};
PsiParams psi_params(int n, int m);

// x_i -> (r3 r2)^(1-i) (r1 r2) (r3 r2)^(i-1); target coxeter nf on the triangle.
Hom build_phi(int k, int n, int m);

struct PsiHom {
  Hom hom;
  PsiParams params;
};
// a -> x1, b -> (x1 ... x_m)^l. The target decides identity through phi.
PsiHom build_psi(int k, int n, int m);

// a -> r1 r2, b -> r3 r2 (the alternating subgroup generators).
GenMap alt_plus_inclusion();

// x_i -> t^(i-1) s t^(1-i); target Cayley table of the parent J-group.
Hom build_embedding(int k, int n, int m, std::size_t max_cosets = 1'000'000);

// s -> r1 r2, t -> r2 r3, u -> r3 r1.
Hom build_projection(int k, int n, int m);

// (x1 ... xn)^m.
Word central_element(int n, int m);
// x_j x_(j+1) ... for len letters, indices mod n (1-based j).
Word cyclic_run(int n, int from, int len);

// Chain relations C_j: x1...x_m = x_j...x_(j+m-1), j = 2..n.
struct CentralityWitness {
  int n = 0;
  int m = 0;
  int r = 0;  // m mod n
  RelationSet relations;
  Word delta;  // x1 ... x_m
  Word c;
  std::vector<Derivation> shift;    // x_i delta -> delta x_(i+r)
  Derivation c_to_delta;            // c -> delta^n
  std::vector<Derivation> central;  // x_i c -> c x_i
};

CentralityWitness centrality_witness(int n, int m);
CheckResult check_centrality(const CentralityWitness& w);
// Every intermediate word of d has the same image under h (as a target element).
Verdict check_image_chain(const Hom& h, const Derivation& d);

struct ExactSequenceReport {
  std::size_t order_w = 0;       // |W(k,n,m)|
  std::size_t order_c = 0;       // |<c>|
  std::size_t order_w_plus = 0;  // |W+| in the triangle group
  std::size_t image_size = 0;    // |phi(W(k,n,m))|
  std::size_t kernel_size = 0;
  bool onto = false;
  bool kernel_is_c = false;  // ker phi = <c>
  bool c_central = false;
};

// Full Cayley computation; throws IncompleteError when either group overflows.
ExactSequenceReport exact_sequence_check(int k, int n, int m,
                                         std::size_t max_cosets = 1'000'000);

// (stu)^(nm) equals the image of c in the parent J-group. Throws
// IncompleteError when the parent overflows.
bool stu_power_is_c(int k, int n, int m, std::size_t max_cosets = 1'000'000);

// Partial word problem in W(k,n,m): exact when the group enumerates, "no"
// when phi or a finite toric quotient separates w from 1, unknown otherwise.
struct ToricWordResult {
  Verdict identity = Verdict::unknown;
  std::string method;
  std::vector<std::string> evidence;
};
ToricWordResult toric_word_problem(int k, int n, int m, const Word& w,
                                   std::size_t max_cosets = 1'000'000);

// Classical words (x1..xn) compared in the finite toric quotients W(k,n,m)
// of the finiteness table: "no" on any separation, unknown otherwise.
ToricWordResult classical_separation(int n, int m, const Word& u, const Word& v);

}  // namespace toric
