#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "toric/presentation.hpp"

namespace toric {

struct TietzeOptions {
  // Maximum number of generator eliminations.
  std::size_t budget = 100000;
  // Generator names that must survive.
  std::vector<std::string> keep;
};

struct Elimination {
  std::string generator;
  // The generator as a word over the surviving generators of the result.
  Word value;
};

struct TietzeResult {
  Presentation presentation;
  bool budget_exceeded = false;
  std::size_t eliminations = 0;
  // In elimination order.
  std::vector<Elimination> eliminated;
};

// Canonical representative of the cyclic word class of w up to rotation and
// inversion: the lexicographically least rotation of w or w^-1 after cyclic
// reduction.
Word cyclic_canonical(const Word& w);

// Simplifies p using only: free and cyclic reduction of relators, deletion of
// trivial and repeated (up to rotation and inversion) relators, and
// elimination of a generator occurring exactly once in some relator with
// substitution elsewhere. Generators are eliminated lowest index first, ties
// broken by the shortest defining relator. Deterministic.
TietzeResult tietze_simplify(const Presentation& p, const TietzeOptions& opts = {});

}  // namespace toric
