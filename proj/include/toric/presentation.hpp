#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "toric/words.hpp"

namespace toric {

struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;

  bool operator==(const Presentation&) const = default;
};

enum class Family {
  torus_standard,   // <x, y | x^n = y^m>
  torus_classical,  // x1..xn, m-factor chain
  torus_dual,       // y1..ym, n-factor chain
  toric,            // classical plus x_i^k
  j_parent,         // <s,t,u | s^a, t^b, u^c, stu = tus = ust>
  coxeter_triangle, // rank-3 Coxeter group with labels k, n, m
  alt_plus,         // <a, b | a^k, b^n, (b a^-1)^m>
  alt_toric,        // toric plus (x1...xn)^m
};

std::string_view family_name(Family f);
// Throws DomainError for an unknown name.
Family parse_family(std::string_view name);

struct FamilyParams {
  Family family = Family::toric;
  // (k, n, m), or (a, b, c) for j_parent; torus families ignore k.
  int k = 2;
  int n = 2;
  int m = 3;
  // toric/alt_toric with n > m are rewritten as (k, m, n) unless disabled.
  bool normalize = true;
};

// The displayed presentation for the family. Throws DomainError when a label
// is < 2 or when a torus/toric family has gcd(n, m) != 1.
Presentation build(const FamilyParams& p);

// Convenience wrappers.
Presentation toric_presentation(int k, int n, int m, bool normalize = true);
Presentation j_parent_presentation(int a, int b, int c);
Presentation triangle_presentation(int k, int n, int m);
Presentation alt_plus_presentation(int k, int n, int m);

// "a1 = a2 = ... = ap" as the p-1 relators a1 a_i^-1, each freely reduced.
std::vector<Word> chain_relators(const std::vector<Word>& sides);

// File format:
//   gens: g1 g2 ...
//   rel: w            or   rel: w1 = w2 = ...
// with '#' comments. Throws ParseError carrying line and column.
Presentation parse_presentation(std::string_view text);
std::string serialize(const Presentation& p);
// The family's presentation in the same file format with chains kept as
// "rel: a = b = ..." lines, as it is usually displayed.
std::string display(const FamilyParams& p);

}  // namespace toric
