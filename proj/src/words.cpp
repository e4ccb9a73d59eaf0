#include "toric/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace toric {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    if (!lookup_.emplace(names_[i], i).second) {
      throw DomainError("duplicate generator name '" + names_[i] + "'");
    }
  }
}

Alphabet Alphabet::indexed(std::string_view prefix, int count, int first) {
  std::vector<std::string> names;
  names.reserve(count);
  for (int i = 0; i < count; ++i) {
    names.push_back(std::string(prefix) + std::to_string(first + i));
  }
  return Alphabet(std::move(names));
}

std::optional<int> Alphabet::find(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

int Alphabet::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UnknownGenerator("unknown generator '" + std::string(name) + "'");
}

Word Word::gen(int g, int exponent) {
  Word w;
  Letter l = make_letter(g, exponent < 0);
  for (int i = 0; i < std::abs(exponent); ++i) w.letters_.push_back(l);
  return w;
}

Word& Word::operator*=(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

Word Word::pow(int e) const {
  Word base = e < 0 ? invert(*this) : *this;
  Word out;
  out.letters_.reserve(base.size() * std::abs(e));
  for (int i = 0; i < std::abs(e); ++i) out *= base;
  return out;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::vector<Letter>(letters_.begin() + pos,
                                  letters_.begin() + pos + len));
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && stack.back() == -l) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(-*it);
  }
  return Word(std::move(out));
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == -w[i - 1]) return false;
  }
  return true;
}

Word cyclically_reduce(const Word& w) {
  Word r = free_reduce(w);
  const auto& l = r.letters();
  std::size_t lo = 0, hi = l.size();
  while (hi - lo >= 2 && l[lo] == -l[hi - 1]) {
    ++lo;
    --hi;
  }
  return r.subword(lo, hi - lo);
}

int max_generator(const Word& w) {
  int m = 0;
  for (Letter l : w) m = std::max(m, gen_of(l) + 1);
  return m;
}

namespace {

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  Word w;
  std::size_t i = 0;
  auto column = [&](std::size_t pos) { return static_cast<int>(pos) + 1; };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (text[i] == '1' &&
        (i + 1 == text.size() ||
         std::isspace(static_cast<unsigned char>(text[i + 1])))) {
      ++i;
      continue;
    }
    if (!is_name_start(text[i])) {
      throw ParseError("expected generator name", 1, column(i));
    }
    while (i < text.size() && is_name_char(text[i])) ++i;
    std::string_view name = text.substr(start, i - start);
    auto g = alphabet.find(name);
    if (!g) {
      throw ParseError("unknown generator '" + std::string(name) + "'", 1,
                       column(start));
    }
    int exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t estart = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      std::string_view digits = text.substr(estart, i - estart);
      if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
      auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
      if (ec != std::errc() || ptr != digits.data() + digits.size() ||
          digits.empty()) {
        throw ParseError("malformed exponent", 1, column(estart));
      }
      if (exponent == 0) {
        throw ParseError("exponent must be nonzero", 1, column(estart));
      }
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      throw ParseError("unexpected character '" + std::string(1, text[i]) + "'",
                       1, column(i));
    }
    w *= Word::gen(*g, exponent);
  }
  return w;
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    int run = static_cast<int>(j - i);
    if (!out.empty()) out += ' ';
    out += alphabet.name(gen_of(w[i]));
    int e = is_inverse(w[i]) ? -run : run;
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

GenMap::GenMap(Alphabet source, Alphabet target, std::vector<Word> images)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)) {
  if (images_.size() != source_.size()) {
    throw DomainError("generator map must give one image per source generator");
  }
  for (const Word& img : images_) {
    if (max_generator(img) > static_cast<int>(target_.size())) {
      throw UnknownGenerator("image uses a generator outside the target alphabet");
    }
  }
}

GenMap GenMap::identity(const Alphabet& alphabet) {
  std::vector<Word> images;
  for (int g = 0; g < static_cast<int>(alphabet.size()); ++g) {
    images.push_back(Word::gen(g));
  }
  return GenMap(alphabet, alphabet, std::move(images));
}

Word apply_map(const GenMap& f, const Word& w) {
  Word out;
  for (Letter l : w) {
    int g = gen_of(l);
    if (g >= static_cast<int>(f.source().size())) {
      throw UnknownGenerator("letter outside the source alphabet of the map");
    }
    out *= is_inverse(l) ? invert(f.image(g)) : f.image(g);
  }
  return free_reduce(out);
}

GenMap compose(const GenMap& g, const GenMap& f) {
  if (!(f.target() == g.source())) {
    throw DomainError("cannot compose maps: alphabets do not match");
  }
  std::vector<Word> images;
  for (const Word& img : f.images()) images.push_back(apply_map(g, img));
  return GenMap(f.source(), g.target(), std::move(images));
}

}  // namespace toric
