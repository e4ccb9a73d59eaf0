#pragma once

// Todd-Coxeter coset enumeration and the finite-group utilities built on a
// complete table (Cayley tables, element orders, conjugacy classes).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "toric/presentation.hpp"

namespace toric {

enum class Strategy { hlt, felsch };

struct EnumerationOptions {
  std::size_t max_cosets = 1'000'000;
  Strategy strategy = Strategy::hlt;
  // HLT only: on hitting the bound, scan all relators without defining new
  // cosets and retry once before giving up.
  bool lookahead = true;
};

// Column of a letter: 2g for g, 2g+1 for g^-1.
constexpr int column_of(Letter l) { return 2 * gen_of(l) + (is_inverse(l) ? 1 : 0); }

class CosetTable {
 public:
  enum class Status { complete, overflow };

  CosetTable() = default;
  CosetTable(int num_gens, std::vector<std::int32_t> data, Status status,
             std::size_t bound);

  Status status() const noexcept { return status_; }
  bool complete() const noexcept { return status_ == Status::complete; }
  std::size_t bound() const noexcept { return bound_; }
  int num_gens() const noexcept { return num_gens_; }
  int num_cols() const noexcept { return 2 * num_gens_; }
  // Rows; for a complete table this is the index of the subgroup.
  int size() const noexcept {
    return num_gens_ == 0 ? 1 : static_cast<int>(data_.size() / num_cols());
  }

  // -1 when undefined.
  int act(int coset, Letter l) const { return entry(coset, column_of(l)); }
  int entry(int coset, int col) const { return data_[coset * num_cols() + col]; }
  // Image of a coset under a word; -1 if the trace runs off the table.
  int trace(int coset, const Word& w) const;

  // Statistics from the enumeration run.
  std::size_t max_active = 0;
  std::size_t total_defined = 0;

 private:
  int num_gens_ = 0;
  std::vector<std::int32_t> data_;
  Status status_ = Status::complete;
  std::size_t bound_ = 0;
};

// Enumerates the right cosets of the subgroup generated by `subgens`. Cosets
// of a complete table are numbered in breadth-first order from coset 0 with
// columns taken in order, so the result does not depend on the strategy.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgens,
                        const EnumerationOptions& opts = {});

// Order of the group, or nullopt when the enumeration overflows.
std::optional<std::size_t> group_order(const Presentation& p,
                                       std::size_t max_cosets = 1'000'000);

struct NormalClosureResult {
  CosetTable table;
  std::vector<Word> generators;  // final generating list (conjugates added)
  int rounds = 0;
};

// Enumerates the normal closure of `gens`: starts from the plain subgroup and
// adds the conjugates x^-1 h x, x h x^-1 that escape it until the subgroup is
// normal. Overflow of any round is reported in the table status.
NormalClosureResult normal_closure(const Presentation& p, std::vector<Word> gens,
                                   const EnumerationOptions& opts = {},
                                   int max_rounds = 64);

// Breadth-first spanning tree of a complete table over positive generator
// columns taken in `gen_order`; parent coset and incoming generator per coset.
struct SpanningTree {
  std::vector<int> parent;     // -1 for coset 0
  std::vector<int> via_gen;    // generator index of the tree edge, -1 for 0
  std::vector<Word> words;     // representative word of each coset
  std::vector<int> bfs_order;  // cosets in discovery order
};
SpanningTree spanning_tree(const CosetTable& ct, const std::vector<int>& gen_order);

// Finite group given by the regular coset table (trivial subgroup). Elements
// are numbered as the cosets; 0 is the identity.
class CayleyTable {
 public:
  // Throws IncompleteError unless ct is complete.
  explicit CayleyTable(const CosetTable& ct);

  int size() const noexcept { return n_; }
  int num_gens() const noexcept { return gens_; }
  int identity() const noexcept { return 0; }
  int mul(int a, int b) const { return mult_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int gen(int g) const { return gen_elem_[g]; }
  // Evaluates a word over the presentation's alphabet.
  int element(const Word& w) const;
  const Word& word(int e) const { return words_[e]; }
  int order(int e) const;
  int power(int e, int k) const;
  bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }
  int conjugate(int a, int by) const { return mul(mul(inv(by), a), by); }

  // Class id per element; ids numbered by first element of each class.
  const std::vector<int>& conjugacy_classes() const;
  int num_classes() const;
  // Subgroup generated by the given elements, as a sorted element list.
  std::vector<int> subgroup(const std::vector<int>& generators) const;
  // Elements commuting with every element of `with`.
  std::vector<int> centralizer(const std::vector<int>& with) const;

  // Identity, inverses, and associativity on `samples` pseudo-random
  // triples (deterministic).
  bool check_axioms(int samples = 2000) const;

 private:
  int n_ = 0;
  int gens_ = 0;
  std::vector<std::int32_t> mult_;
  std::vector<int> inv_;
  std::vector<int> gen_elem_;
  std::vector<int> gen_inv_elem_;
  std::vector<Word> words_;
  mutable std::vector<int> classes_;
  mutable int num_classes_ = -1;
};

int element_order(const CayleyTable& c, const Word& w);

// Number of conjugacy classes meeting the set of conjugates of nontrivial
// powers of the designated generators (x_i for toric, s, t, u for j-parent).
int reflection_class_count(const FamilyParams& p, const CayleyTable& c);

}  // namespace toric
