#pragma once

// Reidemeister-Schreier rewriting over a complete coset table.

#include <string>
#include <vector>

#include "toric/cosets.hpp"
#include "toric/derivation.hpp"
#include "toric/tietze.hpp"

namespace toric {

// Labeling of the Schreier generators.
enum class LabelStyle {
  coset,  // <gen>_<coset index>
  toric,  // <gen>_<i>_<j> for the coset of u^i t^j (j-parent alphabet s,t,u)
};

struct TransversalOptions {
  // Generator indices in BFS exploration order; empty = alphabet order.
  std::vector<int> column_order;
  LabelStyle labels = LabelStyle::coset;
};

// Column order u, t, s over the j-parent alphabet, which yields the
// representatives u^i t^j, together with the matching labels.
TransversalOptions toric_transversal_preset();

struct Transversal {
  SpanningTree tree;
  // toric labels only: (i, j) with the coset's representative u^i t^j.
  std::vector<std::pair<int, int>> coordinates;
  LabelStyle labels = LabelStyle::coset;

  const Word& rep(int coset) const { return tree.words[coset]; }
  std::size_t size() const { return tree.words.size(); }
};

// Throws IncompleteError unless ct is complete.
Transversal schreier_transversal(const CosetTable& ct, const Presentation& p,
                                 const TransversalOptions& opts = {});

struct SubgroupGenerator {
  std::string label;
  int coset = 0;
  int gen = 0;
  // k x (rep of kx)^-1 over the ambient alphabet, freely reduced.
  Word value;
};

struct RsResult {
  Presentation presentation;
  // One per nontrivial Schreier generator, in presentation order.
  std::vector<SubgroupGenerator> generators;
  // Label of the Schreier generator for each (coset, gen); tree edges carry
  // an empty label.
  std::vector<std::vector<std::string>> label_of;
};

// Generators ordered by coset in transversal order, then by generator index;
// relators are each ambient relator traced from every coset, cosets taken
// in index order.
RsResult rs_presentation(const Presentation& p, const CosetTable& ct,
                         const Transversal& tr);

// Rewrites a word lying in the subgroup as a word over the Schreier
// generators. Throws DomainError when w does not fix coset 0.
Word rs_rewrite(const RsResult& rs, const CosetTable& ct, const Word& w);

// s_{m-1-l, p-1} (which = 's') or u_{m-1-l, p} (which = 'u') as a word over
// s0 ... s_{n-1} (indices mod n). Throws DomainError out of range.
Word closed_form_generator(int k, int n, int m, char which, int l, int p);
// Alphabet s0 ... s_{n-1} used by closed_form_generator.
Alphabet closed_form_alphabet(int n);

// Label of the RS generator that closed_form_generator(k,n,m,which,l,p) names.
std::string closed_form_label(int n, int m, char which, int l, int p);

// The relations x_i x_1...x_m = x_1...x_m x_{i+m}, 1 <= i <= n, and the chain
// relations x_1...x_m = x_j...x_{j+m-1}, 2 <= j <= n, over x1..xn.
struct EquivalenceWitness {
  RelationSet relations;  // "A<i>" then "C<j>"
  // C_j derived from the A's (and earlier C's), j = 2..n.
  std::vector<Derivation> chain_from_shift;
  // A_i derived from the C's, i = 1..n.
  std::vector<Derivation> shift_from_chain;
};
EquivalenceWitness relation_equivalence(int n, int m);

// Every derivation replays and proves its relation.
CheckResult check_equivalence(const EquivalenceWitness& w, int n);

// The full pipeline for W(k,n,m) inside its parent J(k,n,m): normal closure
// of s, toric transversal, rewriting, and Tietze simplification keeping
// s_0_0 ... s_0_(n-1), which are then renamed x1 ... xn.
struct ToricRsResult {
  Presentation parent;
  NormalClosureResult closure;
  Transversal transversal;
  RsResult rs;
  TietzeResult simplified;
  Presentation relabeled;
};
// Throws IncompleteError when the closure enumeration overflows.
ToricRsResult toric_rs(int k, int n, int m, const EnumerationOptions& opts = {},
                       std::size_t budget = 100000);

}  // namespace toric
