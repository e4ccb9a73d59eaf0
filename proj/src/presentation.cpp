#include "toric/presentation.hpp"

#include <array>
#include <cctype>
#include <numeric>
#include <sstream>
#include <utility>

namespace toric {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 8> kFamilyNames{{
    {Family::torus_standard, "torus-standard"},
    {Family::torus_classical, "torus-classical"},
    {Family::torus_dual, "torus-dual"},
    {Family::toric, "toric"},
    {Family::j_parent, "j-parent"},
    {Family::coxeter_triangle, "coxeter-triangle"},
    {Family::alt_plus, "alt-plus"},
    {Family::alt_toric, "alt-toric"},
}};

void require_label(int v, const char* what) {
  if (v < 2) {
    throw DomainError(std::string("label ") + what + " = " + std::to_string(v) +
                      " must be at least 2");
  }
}

void require_coprime(int n, int m) {
  if (std::gcd(n, m) != 1) {
    throw DomainError("gcd(" + std::to_string(n) + ", " + std::to_string(m) +
                      ") != 1");
  }
}

// x_{start} x_{start+1} ... with `length` factors, indices mod n (0-based).
Word cyclic_product(int start, int length, int n) {
  Word w;
  for (int i = 0; i < length; ++i) w.push_back(make_letter((start + i) % n));
  return w;
}

std::vector<Word> chain_sides(int n, int m) {
  std::vector<Word> sides;
  for (int i = 0; i < n; ++i) sides.push_back(cyclic_product(i, m, n));
  return sides;
}

}  // namespace

std::string_view family_name(Family f) {
  for (auto [fam, name] : kFamilyNames) {
    if (fam == f) return name;
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (auto [fam, n] : kFamilyNames) {
    if (n == name) return fam;
  }
  throw DomainError("unknown family '" + std::string(name) + "'");
}

std::vector<Word> chain_relators(const std::vector<Word>& sides) {
  std::vector<Word> out;
  for (std::size_t i = 1; i < sides.size(); ++i) {
    out.push_back(free_reduce(sides[0] * invert(sides[i])));
  }
  return out;
}

Presentation build(const FamilyParams& p) {
  int k = p.k, n = p.n, m = p.m;
  Presentation out;
  switch (p.family) {
    case Family::torus_standard: {
      require_label(n, "n");
      require_label(m, "m");
      require_coprime(n, m);
      out.alphabet = Alphabet({"x", "y"});
      out.relators.push_back(Word::gen(0, n) * Word::gen(1, -m));
      break;
    }
    case Family::torus_classical: {
      require_label(n, "n");
      require_label(m, "m");
      require_coprime(n, m);
      out.alphabet = Alphabet::indexed("x", n);
      out.relators = chain_relators(chain_sides(n, m));
      break;
    }
    case Family::torus_dual: {
      require_label(n, "n");
      require_label(m, "m");
      require_coprime(n, m);
      out.alphabet = Alphabet::indexed("y", m);
      out.relators = chain_relators(chain_sides(m, n));
      break;
    }
    case Family::toric:
    case Family::alt_toric: {
      require_label(k, "k");
      require_label(n, "n");
      require_label(m, "m");
      require_coprime(n, m);
      if (p.normalize && n > m) std::swap(n, m);
      out.alphabet = Alphabet::indexed("x", n);
      for (int i = 0; i < n; ++i) out.relators.push_back(Word::gen(i, k));
      for (Word& w : chain_relators(chain_sides(n, m))) {
        out.relators.push_back(std::move(w));
      }
      if (p.family == Family::alt_toric) {
        out.relators.push_back(cyclic_product(0, n, n).pow(m));
      }
      break;
    }
    case Family::j_parent: {
      require_label(k, "a");
      require_label(n, "b");
      require_label(m, "c");
      out.alphabet = Alphabet({"s", "t", "u"});
      out.relators = {Word::gen(0, k), Word::gen(1, n), Word::gen(2, m)};
      Word stu{make_letter(0), make_letter(1), make_letter(2)};
      Word tus{make_letter(1), make_letter(2), make_letter(0)};
      Word ust{make_letter(2), make_letter(0), make_letter(1)};
      for (Word& w : chain_relators({stu, tus, ust})) {
        out.relators.push_back(std::move(w));
      }
      break;
    }
    case Family::coxeter_triangle: {
      require_label(k, "k");
      require_label(n, "n");
      require_label(m, "m");
      out.alphabet = Alphabet::indexed("r", 3);
      for (int i = 0; i < 3; ++i) out.relators.push_back(Word::gen(i, 2));
      out.relators.push_back(Word{make_letter(0), make_letter(1)}.pow(k));
      out.relators.push_back(Word{make_letter(1), make_letter(2)}.pow(n));
      out.relators.push_back(Word{make_letter(2), make_letter(0)}.pow(m));
      break;
    }
    case Family::alt_plus: {
      require_label(k, "k");
      require_label(n, "n");
      require_label(m, "m");
      out.alphabet = Alphabet({"a", "b"});
      out.relators = {Word::gen(0, k), Word::gen(1, n),
                      Word{make_letter(1), make_letter(0, true)}.pow(m)};
      break;
    }
  }
  return out;
}

Presentation toric_presentation(int k, int n, int m, bool normalize) {
  return build({Family::toric, k, n, m, normalize});
}
Presentation j_parent_presentation(int a, int b, int c) {
  return build({Family::j_parent, a, b, c});
}
Presentation triangle_presentation(int k, int n, int m) {
  return build({Family::coxeter_triangle, k, n, m});
}
Presentation alt_plus_presentation(int k, int n, int m) {
  return build({Family::alt_plus, k, n, m});
}

namespace {

std::string_view trim(std::string_view s, int* offset) {
  std::size_t a = 0;
  while (a < s.size() && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  std::size_t b = s.size();
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  if (offset) *offset += static_cast<int>(a);
  return s.substr(a, b - a);
}

Word parse_word_at(std::string_view text, const Alphabet& alphabet, int line,
                   int column_offset) {
  try {
    return parse_word(text, alphabet);
  } catch (const ParseError& e) {
    std::string msg = e.what();
    // Strip the "line 1, column c: " prefix of the word-level error.
    auto pos = msg.find(": ");
    throw ParseError(pos == std::string::npos ? msg : msg.substr(pos + 2), line,
                     column_offset + e.column());
  }
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_gens = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    int col = 0;
    std::string_view body = trim(line, &col);
    if (body.empty()) {
      if (eol == text.size()) break;
      continue;
    }
    auto colon = body.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("expected 'gens:' or 'rel:'", line_no, col + 1);
    }
    std::string_view key = body.substr(0, colon);
    int rest_col = col + static_cast<int>(colon) + 1;
    std::string_view rest = body.substr(colon + 1);
    if (key == "gens") {
      if (have_gens) throw ParseError("duplicate 'gens:' line", line_no, col + 1);
      std::vector<std::string> names;
      std::size_t i = 0;
      while (i < rest.size()) {
        if (std::isspace(static_cast<unsigned char>(rest[i]))) {
          ++i;
          continue;
        }
        std::size_t s = i;
        while (i < rest.size() && !std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
        std::string name(rest.substr(s, i - s));
        bool ok = std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_';
        for (char c : name) {
          ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
        }
        if (!ok) {
          throw ParseError("invalid generator name '" + name + "'", line_no,
                           rest_col + static_cast<int>(s) + 1);
        }
        names.push_back(std::move(name));
      }
      try {
        p.alphabet = Alphabet(std::move(names));
      } catch (const DomainError& e) {
        throw ParseError(e.what(), line_no, rest_col + 1);
      }
      have_gens = true;
    } else if (key == "rel") {
      if (!have_gens) throw ParseError("'rel:' before 'gens:'", line_no, col + 1);
      std::vector<Word> sides;
      std::size_t start = 0;
      while (true) {
        std::size_t eq = rest.find('=', start);
        std::size_t end = eq == std::string_view::npos ? rest.size() : eq;
        std::string_view side = rest.substr(start, end - start);
        int side_col = rest_col + static_cast<int>(start);
        int lead = 0;
        if (trim(side, &lead).empty()) {
          throw ParseError("empty side in relation", line_no,
                           side_col + lead + 1);
        }
        sides.push_back(parse_word_at(side, p.alphabet, line_no, side_col));
        if (eq == std::string_view::npos) break;
        start = eq + 1;
      }
      if (sides.size() == 1) {
        p.relators.push_back(free_reduce(sides[0]));
      } else {
        for (Word& w : chain_relators(sides)) p.relators.push_back(std::move(w));
      }
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", line_no, col + 1);
    }
    if (eol == text.size()) break;
  }
  if (!have_gens) throw ParseError("missing 'gens:' line", line_no, 1);
  return p;
}

std::string serialize(const Presentation& p) {
  std::string out = "gens:";
  for (const auto& name : p.alphabet.names()) out += " " + name;
  out += "\n";
  for (const Word& r : p.relators) {
    out += "rel: " + format_word(r, p.alphabet) + "\n";
  }
  return out;
}

std::string display(const FamilyParams& p) {
  const Presentation pres = build(p);
  const Alphabet& a = pres.alphabet;
  std::string out = "gens:";
  for (const auto& name : a.names()) out += " " + name;
  out += "\n";
  auto chain = [&](const std::vector<Word>& sides) {
    std::string line = "rel:";
    for (std::size_t i = 0; i < sides.size(); ++i) {
      line += (i == 0 ? " " : " = ") + format_word(sides[i], a);
    }
    out += line + "\n";
  };
  int n = p.n, m = p.m;
  switch (p.family) {
    case Family::torus_standard:
      chain({Word::gen(0, n), Word::gen(1, m)});
      break;
    case Family::torus_classical:
      chain(chain_sides(n, m));
      break;
    case Family::torus_dual:
      chain(chain_sides(m, n));
      break;
    case Family::toric:
    case Family::alt_toric:
      if (p.normalize && n > m) std::swap(n, m);
      for (int i = 0; i < n; ++i) out += "rel: " + format_word(pres.relators[i], a) + "\n";
      chain(chain_sides(n, m));
      if (p.family == Family::alt_toric) out += "rel: " + format_word(pres.relators.back(), a) + "\n";
      break;
    case Family::j_parent:
      for (int i = 0; i < 3; ++i) out += "rel: " + format_word(pres.relators[i], a) + "\n";
      chain({Word{make_letter(0), make_letter(1), make_letter(2)},
             Word{make_letter(1), make_letter(2), make_letter(0)},
             Word{make_letter(2), make_letter(0), make_letter(1)}});
      break;
    case Family::coxeter_triangle:
    case Family::alt_plus:
      return serialize(pres);
  }
  return out;
}

}  // namespace toric

