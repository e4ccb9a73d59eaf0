#pragma once

// Greedy normal forms in the torus knot group G(n,m) = <x, y | x^n = y^m>,
// the group of fractions of the Garside monoid with Garside element
// D = x^n = y^m.

#include <cstdint>
#include <string>
#include <vector>

#include "toric/words.hpp"

namespace toric {

struct Simple {
  enum class Kind : std::uint8_t { x, y };
  Kind kind = Kind::x;
  int exponent = 0;  // 0 < exponent < n (x) or < m (y)

  bool operator==(const Simple&) const = default;
};

struct NormalForm {
  std::int64_t infimum = 0;  // power of D
  std::vector<Simple> factors;

  bool operator==(const NormalForm&) const = default;
};

// Alphabet {x, y}.
Alphabet garside_alphabet();

class GarsideGroup {
 public:
  // Throws DomainError unless n, m >= 2 and gcd(n, m) = 1.
  GarsideGroup(int n, int m);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }

  NormalForm gnf(const Word& w) const;
  bool equal(const Word& u, const Word& v) const { return gnf(u) == gnf(v); }
  bool is_identity(const Word& w) const;

  // D^p followed by the factors; D^p is written x^(n p).
  Word to_word(const NormalForm& f) const;
  // "D^p · x^i | y^j"; "D^0" with no factors for the identity.
  std::string render(const NormalForm& f) const;
  Word delta() const { return Word::gen(0, n_); }
  // Image in Z under x -> m/g, y -> n/g.
  std::int64_t abelianization(const Word& w) const;

 private:
  int n_;
  int m_;
  Alphabet alphabet_;
};

NormalForm gnf(int n, int m, const Word& w);
bool gnf_equal(int n, int m, const Word& u, const Word& v);

// Standard to classical: x -> x1 x2 ... x_m, y -> x1 ... x_n (indices mod n).
GenMap sigma(int n, int m);

// y^a x^-b; throws DomainError unless a n - b m = 1.
Word meridian(int n, int m, long a, long b);

}  // namespace toric
