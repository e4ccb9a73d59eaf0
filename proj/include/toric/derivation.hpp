#pragma once

// Machine-checkable equational derivations: a start word and a sequence of
// rewriting steps, each justified by a relation of a RelationSet or by a
// free-group move.

#include <optional>
#include <string>
#include <vector>

#include "toric/words.hpp"

namespace toric {

struct Relation {
  std::string name;
  Word lhs;
  Word rhs;
};

class RelationSet {
 public:
  std::size_t add(std::string name, Word lhs, Word rhs);
  const Relation& operator[](std::size_t i) const { return relations_.at(i); }
  std::size_t size() const noexcept { return relations_.size(); }
  std::optional<std::size_t> find(const std::string& name) const;

 private:
  std::vector<Relation> relations_;
};

enum class StepKind {
  apply,        // replace an occurrence of one side of a relation by the other
  insert_pair,  // insert letter, letter^-1 at a position
  reduce,       // full free reduction
};

struct Step {
  StepKind kind = StepKind::apply;
  std::size_t relation = 0;
  bool forward = true;  // lhs -> rhs
  std::size_t position = 0;
  Letter letter = 0;
  Word result;
};

struct Derivation {
  Word start;
  std::vector<Step> steps;

  const Word& end() const { return steps.empty() ? start : steps.back().result; }
};

// Builds a derivation while recording the justification of each step.
class DerivationBuilder {
 public:
  DerivationBuilder(const RelationSet& relations, Word start);

  const Word& current() const { return d_.end(); }

  // Rewrites the occurrence of the chosen side starting at `position`.
  // Throws Error if the side does not occur there.
  DerivationBuilder& apply(std::size_t relation, std::size_t position,
                           bool forward = true);
  // Rewrites the leftmost occurrence at or after `from`.
  DerivationBuilder& apply_first(std::size_t relation, bool forward = true,
                                 std::size_t from = 0);
  DerivationBuilder& insert_pair(std::size_t position, Letter letter);
  DerivationBuilder& reduce();

  Derivation finish() && { return std::move(d_); }
  const Derivation& derivation() const { return d_; }

 private:
  const RelationSet& relations_;
  Derivation d_;
};

struct CheckResult {
  bool ok = true;
  std::size_t failed_step = 0;
  std::string message;
};

// Replays every step independently of how it was built.
CheckResult check_derivation(const RelationSet& relations, const Derivation& d);

// Also requires start == lhs and end == rhs.
CheckResult check_proof(const RelationSet& relations, const Derivation& d,
                        const Word& lhs, const Word& rhs);

std::string render_derivation(const RelationSet& relations, const Derivation& d,
                              const Alphabet& alphabet);

}  // namespace toric
