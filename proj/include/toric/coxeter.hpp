#pragma once

// Coxeter systems: geometric representation over exact cyclotomic numbers,
// the minimal-root automaton, ShortLex normal forms, and parabolic structure.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "toric/cosets.hpp"
#include "toric/cyclotomic.hpp"
#include "toric/presentation.hpp"

namespace toric {

constexpr int kInfinity = 0;  // label m(s,t) = infinity

struct CoxeterMatrix {
  int rank = 0;
  std::vector<std::vector<int>> m;  // diagonal 1, kInfinity for infinity

  // Throws DomainError on asymmetry, diagonal != 1, or labels < 2.
  static CoxeterMatrix from_labels(std::vector<std::vector<int>> m);
  // m(r1,r2) = k, m(r2,r3) = n, m(r3,r1) = m.
  static CoxeterMatrix triangle(int k, int n, int m);

  int label(int s, int t) const { return m[s][t]; }
  // lcm of 2*label over finite labels; every B(a_s, a_t) lives in Q(zeta_N).
  int modulus() const;
  Alphabet alphabet() const;  // r1 ... r_rank
  Presentation presentation() const;
};

enum class TriangleType { spherical, affine, hyperbolic };
TriangleType classify_triangle(int k, int n, int m);
std::string_view triangle_type_name(TriangleType t);

using RootVec = std::vector<Cyc>;

// Minimal (elementary) roots with the action of the simple reflections.
class MinimalRootTable {
 public:
  static constexpr int kNegative = -1;  // s(a_s) = -a_s
  static constexpr int kElevated = -2;  // s(b) positive but not minimal

  explicit MinimalRootTable(const CoxeterMatrix& cm);

  const CoxeterMatrix& matrix() const noexcept { return cm_; }
  int size() const noexcept { return static_cast<int>(roots_.size()); }
  int rank() const noexcept { return cm_.rank; }
  // Roots 0 .. rank-1 are the simple roots.
  const RootVec& root(int i) const { return roots_[i]; }
  int act(int root, int s) const { return table_[root][s]; }
  // B(a_s, a_t) = -cos(pi / m(s,t)), -1 for infinity.
  const Cyc& form(int s, int t) const { return gram_[s][t]; }
  // B(a_s, v).
  Cyc form(int s, const RootVec& v) const;
  // s(v) = v - 2 B(a_s, v) a_s.
  RootVec reflect(int s, const RootVec& v) const;

 private:
  CoxeterMatrix cm_;
  std::vector<std::vector<Cyc>> gram_;
  std::vector<RootVec> roots_;
  std::vector<std::vector<int>> table_;
};

// Subset of minimal roots, one bit per root.
using RootSet = std::vector<std::uint64_t>;

// Word problem for a Coxeter system. Letters are generator indices; an
// inverse letter stands for the same involution.
class CoxeterGroup {
 public:
  explicit CoxeterGroup(const CoxeterMatrix& cm);

  const MinimalRootTable& table() const noexcept { return table_; }
  const CoxeterMatrix& matrix() const noexcept { return table_.matrix(); }
  const Alphabet& alphabet() const noexcept { return alphabet_; }

  // Automaton states over the minimal roots.
  RootSet initial_state() const;
  // nullopt when w s is not reduced.
  std::optional<RootSet> step(const RootSet& d, int s) const;
  // ShortLex variant: nullopt when w s is not the ShortLex form.
  std::optional<RootSet> step_shortlex(const RootSet& d, int s) const;
  bool contains(const RootSet& d, int root) const;

  bool is_reduced(const Word& w) const;
  bool is_shortlex(const Word& w) const;
  // Some reduced word for w.
  Word reduced_word(const Word& w) const;
  int length(const Word& w) const { return static_cast<int>(reduced_word(w).size()); }
  // ShortLex-least reduced word, r1 < r2 < ...
  Word nf(const Word& w) const;
  bool is_identity(const Word& w) const { return reduced_word(w).empty(); }
  bool equal(const Word& u, const Word& v) const;
  // Least p >= 1 with w^p = 1, or nullopt if none up to `bound`.
  std::optional<int> order(const Word& w, int bound) const;
  // Number of elements of each length 0..max_length.
  std::vector<std::uint64_t> growth(int max_length) const;

 private:
  MinimalRootTable table_;
  Alphabet alphabet_;
  int words_ = 1;

  // Positive roots met while locating exchanges, with cached reflections.
  mutable std::mutex mu_;
  mutable std::vector<RootVec> roots_;
  mutable std::unordered_map<std::string, int> root_ids_;
  mutable std::vector<std::vector<int>> reflections_;

  int root_id(const RootVec& v) const;
  int reflect_id(int id, int s) const;
  // Removes the letter of the reduced word u exchanged by appending s
  // (requires u s < u).
  std::vector<int> delete_exchange(const std::vector<int>& u, int s) const;
  RootSet state_of(const std::vector<int>& u) const;
  std::vector<int> reduce_letters(const Word& w) const;
};

Word nf(const CoxeterGroup& g, const Word& w);

enum class Parity { even, odd };
Parity parity(const Word& w);

struct ParabolicReport {
  struct Subset {
    std::vector<int> gens;  // generator indices
    bool finite = false;
  };
  std::vector<Subset> subsets;           // all subsets, by size then lexicographic
  std::vector<std::vector<int>> maximal; // M_W
  // For rank-2 members of M_W: order of the rotation subgroup (= label).
  std::vector<int> rotation_orders;
  bool whole_group_finite = false;
};

// Finiteness of W_J is decided by positive definiteness of its Gram matrix.
bool parabolic_is_finite(const CoxeterMatrix& cm, const std::vector<int>& gens);
ParabolicReport maximal_finite_parabolics(const CoxeterMatrix& cm);

struct CenterReport {
  int order_w = 0;
  int order_w_plus = 0;
  std::vector<std::string> center_w;       // elements as ShortLex words
  std::vector<std::string> center_w_plus;
  bool contained = false;                  // Z(W+) in Z(W)
  bool nontrivial_center_odd = false;      // a nontrivial central element has odd length
  bool center_is_simple_reflection = false;
};

// Brute force on the Cayley table; throws IncompleteError when W is infinite
// or larger than max_order.
CenterReport center_check_plus(const CoxeterMatrix& cm, std::size_t max_order = 100000);

}  // namespace toric
