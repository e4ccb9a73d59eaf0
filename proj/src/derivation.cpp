#include "toric/derivation.hpp"

#include <algorithm>

namespace toric {

std::size_t RelationSet::add(std::string name, Word lhs, Word rhs) {
  relations_.push_back({std::move(name), std::move(lhs), std::move(rhs)});
  return relations_.size() - 1;
}

std::optional<std::size_t> RelationSet::find(const std::string& name) const {
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    if (relations_[i].name == name) return i;
  }
  return std::nullopt;
}

namespace {

bool occurs_at(const Word& w, const Word& pattern, std::size_t pos) {
  if (pos + pattern.size() > w.size()) return false;
  return std::equal(pattern.begin(), pattern.end(), w.begin() + pos);
}

Word replace_at(const Word& w, std::size_t pos, std::size_t len,
                const Word& replacement) {
  Word out = w.subword(0, pos);
  out *= replacement;
  out *= w.subword(pos + len, w.size() - pos - len);
  return out;
}

std::optional<Word> replay(const RelationSet& relations, const Word& prev,
                           const Step& s, std::string* why) {
  switch (s.kind) {
    case StepKind::apply: {
      if (s.relation >= relations.size()) {
        *why = "unknown relation";
        return std::nullopt;
      }
      const Relation& r = relations[s.relation];
      const Word& from = s.forward ? r.lhs : r.rhs;
      const Word& to = s.forward ? r.rhs : r.lhs;
      if (!occurs_at(prev, from, s.position)) {
        *why = "relation side '" + r.name + "' does not occur at position " +
               std::to_string(s.position);
        return std::nullopt;
      }
      return replace_at(prev, s.position, from.size(), to);
    }
    case StepKind::insert_pair: {
      if (s.position > prev.size() || s.letter == 0) {
        *why = "bad insertion";
        return std::nullopt;
      }
      return replace_at(prev, s.position, 0, Word{s.letter, inverse_of(s.letter)});
    }
    case StepKind::reduce:
      return free_reduce(prev);
  }
  return std::nullopt;
}

}  // namespace

DerivationBuilder::DerivationBuilder(const RelationSet& relations, Word start)
    : relations_(relations) {
  d_.start = std::move(start);
}

DerivationBuilder& DerivationBuilder::apply(std::size_t relation,
                                            std::size_t position, bool forward) {
  Step s;
  s.kind = StepKind::apply;
  s.relation = relation;
  s.forward = forward;
  s.position = position;
  std::string why;
  auto next = replay(relations_, current(), s, &why);
  if (!next) throw Error("derivation step rejected: " + why);
  s.result = std::move(*next);
  d_.steps.push_back(std::move(s));
  return *this;
}

DerivationBuilder& DerivationBuilder::apply_first(std::size_t relation,
                                                  bool forward, std::size_t from) {
  const Relation& r = relations_[relation];
  const Word& side = forward ? r.lhs : r.rhs;
  const Word& w = current();
  for (std::size_t pos = from; pos + side.size() <= w.size(); ++pos) {
    if (occurs_at(w, side, pos)) return apply(relation, pos, forward);
  }
  throw Error("derivation step rejected: relation '" + r.name + "' not found");
}

DerivationBuilder& DerivationBuilder::insert_pair(std::size_t position,
                                                  Letter letter) {
  Step s;
  s.kind = StepKind::insert_pair;
  s.position = position;
  s.letter = letter;
  std::string why;
  auto next = replay(relations_, current(), s, &why);
  if (!next) throw Error("derivation step rejected: " + why);
  s.result = std::move(*next);
  d_.steps.push_back(std::move(s));
  return *this;
}

DerivationBuilder& DerivationBuilder::reduce() {
  Step s;
  s.kind = StepKind::reduce;
  s.result = free_reduce(current());
  d_.steps.push_back(std::move(s));
  return *this;
}

CheckResult check_derivation(const RelationSet& relations, const Derivation& d) {
  Word w = d.start;
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    std::string why;
    auto next = replay(relations, w, d.steps[i], &why);
    if (!next) return {false, i, why};
    if (*next != d.steps[i].result) {
      return {false, i, "recorded result does not match the replayed step"};
    }
    w = std::move(*next);
  }
  return {};
}

CheckResult check_proof(const RelationSet& relations, const Derivation& d,
                        const Word& lhs, const Word& rhs) {
  if (d.start != lhs) return {false, 0, "derivation does not start at the lhs"};
  CheckResult r = check_derivation(relations, d);
  if (!r.ok) return r;
  if (d.end() != rhs) {
    return {false, d.steps.size(), "derivation does not end at the rhs"};
  }
  return r;
}

std::string render_derivation(const RelationSet& relations, const Derivation& d,
                              const Alphabet& alphabet) {
  std::string out = "  " + format_word(d.start, alphabet) + "\n";
  for (const Step& s : d.steps) {
    out += "= " + format_word(s.result, alphabet) + "   [";
    switch (s.kind) {
      case StepKind::apply:
        out += relations[s.relation].name + (s.forward ? "" : " reversed") +
               " at " + std::to_string(s.position);
        break;
      case StepKind::insert_pair:
        out += "insert pair at " + std::to_string(s.position);
        break;
      case StepKind::reduce:
        out += "free reduction";
        break;
    }
    out += "]\n";
  }
  return out;
}

}  // namespace toric
