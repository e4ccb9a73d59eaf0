#include "toric/tietze.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric {

Word cyclic_canonical(const Word& w) {
  Word r = cyclically_reduce(w);
  if (r.empty()) return r;
  Word best = r;
  for (const Word& base : {r, invert(r)}) {
    const auto& l = base.letters();
    std::size_t n = l.size();
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<Letter> rot(n);
      for (std::size_t i = 0; i < n; ++i) rot[i] = l[(s + i) % n];
      Word candidate(std::move(rot));
      if (candidate < best) best = std::move(candidate);
    }
  }
  return best;
}

namespace {

// Relators over the original generator indices; eliminated generators never
// occur again once removed.
struct State {
  std::vector<Word> relators;
  std::vector<bool> alive;
  std::vector<bool> keep;
};

void normalize(State& st) {
  std::vector<Word> out;
  std::set<Word> seen;
  for (const Word& r : st.relators) {
    Word c = cyclically_reduce(r);
    if (c.empty()) continue;
    if (!seen.insert(cyclic_canonical(c)).second) continue;
    out.push_back(std::move(c));
  }
  st.relators = std::move(out);
}

int occurrences(const Word& w, int g) {
  int count = 0;
  for (Letter l : w) count += gen_of(l) == g;
  return count;
}

Word substitute(const Word& w, int g, const Word& value) {
  Word out;
  Word value_inv = invert(value);
  for (Letter l : w) {
    if (gen_of(l) == g) {
      out *= is_inverse(l) ? value_inv : value;
    } else {
      out.push_back(l);
    }
  }
  return free_reduce(out);
}

}  // namespace

TietzeResult tietze_simplify(const Presentation& p, const TietzeOptions& opts) {
  const int ngens = static_cast<int>(p.alphabet.size());
  State st;
  st.relators = p.relators;
  st.alive.assign(ngens, true);
  st.keep.assign(ngens, false);
  for (const auto& name : opts.keep) st.keep[p.alphabet.index_of(name)] = true;

  TietzeResult result;
  std::vector<std::pair<int, Word>> definitions;  // original indices
  normalize(st);

  while (true) {
    int chosen_gen = -1;
    std::size_t chosen_rel = 0;
    for (int g = 0; g < ngens && chosen_gen < 0; ++g) {
      if (!st.alive[g] || st.keep[g]) continue;
      for (std::size_t i = 0; i < st.relators.size(); ++i) {
        if (occurrences(st.relators[i], g) != 1) continue;
        if (chosen_gen < 0 ||
            st.relators[i].size() < st.relators[chosen_rel].size()) {
          chosen_gen = g;
          chosen_rel = i;
        }
      }
    }
    if (chosen_gen < 0) break;
    if (result.eliminations >= opts.budget) {
      result.budget_exceeded = true;
      break;
    }

    // R = A g^e B  =>  g^e = A^-1 B^-1  =>  g = (B A)^-1 for e = +1.
    const Word& rel = st.relators[chosen_rel];
    std::size_t pos = 0;
    while (gen_of(rel[pos]) != chosen_gen) ++pos;
    Word a = rel.subword(0, pos);
    Word b = rel.subword(pos + 1, rel.size() - pos - 1);
    Word ba = free_reduce(b * a);
    Word value = is_inverse(rel[pos]) ? ba : invert(ba);

    std::vector<Word> next;
    for (std::size_t i = 0; i < st.relators.size(); ++i) {
      if (i == chosen_rel) continue;
      next.push_back(substitute(st.relators[i], chosen_gen, value));
    }
    st.relators = std::move(next);
    st.alive[chosen_gen] = false;
    definitions.emplace_back(chosen_gen, value);
    ++result.eliminations;
    normalize(st);
  }

  // Re-index survivors.
  std::vector<int> new_index(ngens, -1);
  std::vector<std::string> names;
  for (int g = 0; g < ngens; ++g) {
    if (st.alive[g]) {
      new_index[g] = static_cast<int>(names.size());
      names.push_back(p.alphabet.name(g));
    }
  }
  auto reindex = [&](const Word& w) {
    Word out;
    for (Letter l : w) out.push_back(make_letter(new_index[gen_of(l)], is_inverse(l)));
    return out;
  };
  result.presentation.alphabet = Alphabet(names);
  for (const Word& r : st.relators) result.presentation.relators.push_back(reindex(r));

  // Express every eliminated generator over the survivors; later eliminations
  // are expanded first.
  std::map<int, Word> expanded;
  for (auto it = definitions.rbegin(); it != definitions.rend(); ++it) {
    Word w = it->second;
    for (const auto& [g, val] : expanded) w = substitute(w, g, val);
    expanded[it->first] = w;
  }
  for (const auto& [g, def] : definitions) {
    (void)def;
    result.eliminated.push_back({p.alphabet.name(g), reindex(expanded[g])});
  }
  return result;
}

}  // namespace toric
