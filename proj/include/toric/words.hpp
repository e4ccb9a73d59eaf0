#pragma once

// Free-group words over named generator alphabets.
//
// A letter is a signed generator index: +(g+1) stands for generator g and
// -(g+1) for its inverse. Exponents other than +-1 never survive parsing.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "toric/error.hpp"

namespace toric {

using Letter = std::int32_t;

constexpr Letter make_letter(int gen, bool inverse = false) {
  return inverse ? -(gen + 1) : gen + 1;
}
constexpr int gen_of(Letter l) { return (l > 0 ? l : -l) - 1; }
constexpr bool is_inverse(Letter l) { return l < 0; }
constexpr Letter inverse_of(Letter l) { return -l; }

struct Gen {
  std::string name;
  int index = 0;
};

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  // prefix1, prefix2, ... (or starting from `first`).
  static Alphabet indexed(std::string_view prefix, int count, int first = 1);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(int index) const { return names_.at(index); }
  Gen gen(int index) const { return Gen{name(index), index}; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<int> find(std::string_view name) const;
  // Throws UnknownGenerator.
  int index_of(std::string_view name) const;

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> lookup_;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  static Word gen(int g, int exponent = 1);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::span<const Letter> view() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  void push_back(Letter l) { letters_.push_back(l); }
  Word& operator*=(const Word& other);
  // Concatenation without reduction.
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  // Concatenation of |e| copies of *this or of its inverse; not reduced.
  Word pow(int e) const;

  Word subword(std::size_t pos, std::size_t len) const;

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

Word free_reduce(const Word& w);
Word invert(const Word& w);
bool is_reduced(const Word& w);
// Free reduction followed by cancellation of inverse pairs across the ends.
Word cyclically_reduce(const Word& w);

// Largest generator index + 1 occurring in w (0 for the empty word).
int max_generator(const Word& w);

// Word text syntax: whitespace separated tokens name, name^-1, name^K;
// "1" is the identity.
Word parse_word(std::string_view text, const Alphabet& alphabet);
// Compact rendering with runs collapsed to name^K; "1" for the empty word.
std::string format_word(const Word& w, const Alphabet& alphabet);

// A homomorphism of free groups given by the images of the source generators.
class GenMap {
 public:
  GenMap() = default;
  GenMap(Alphabet source, Alphabet target, std::vector<Word> images);

  const Alphabet& source() const noexcept { return source_; }
  const Alphabet& target() const noexcept { return target_; }
  const Word& image(int g) const { return images_.at(g); }
  const std::vector<Word>& images() const noexcept { return images_; }

  static GenMap identity(const Alphabet& alphabet);

 private:
  Alphabet source_;
  Alphabet target_;
  std::vector<Word> images_;
};

// Letter-wise substitution followed by free reduction. Throws
// UnknownGenerator when w uses a generator outside f's source alphabet.
Word apply_map(const GenMap& f, const Word& w);

// (g o f)(w) = g(f(w)); requires f.target() == g.source().
GenMap compose(const GenMap& g, const GenMap& f);

}  // namespace toric
