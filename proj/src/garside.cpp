#include "toric/garside.hpp"

#include <numeric>

namespace toric {

Alphabet garside_alphabet() { return Alphabet({"x", "y"}); }

GarsideGroup::GarsideGroup(int n, int m) : n_(n), m_(m), alphabet_(garside_alphabet()) {
  if (n < 2 || m < 2) throw DomainError("torus knot group needs n, m >= 2");
  if (std::gcd(n, m) != 1) throw DomainError("torus knot group needs gcd(n, m) = 1");
}

// Every inverse letter becomes D^-1 times a positive power (D is central),
// then factors of the same family merge; a full D is pulled out to the left.
NormalForm GarsideGroup::gnf(const Word& w) const {
  NormalForm f;
  auto push = [&](Simple::Kind kind, int e) {
    const int top = kind == Simple::Kind::x ? n_ : m_;
    if (!f.factors.empty() && f.factors.back().kind == kind) {
      int sum = f.factors.back().exponent + e;
      if (sum >= top) {
        ++f.infimum;
        sum -= top;
      }
      if (sum == 0) {
        f.factors.pop_back();
      } else {
        f.factors.back().exponent = sum;
      }
    } else {
      f.factors.push_back({kind, e});
    }
  };
  for (Letter l : w) {
    const int g = gen_of(l);
    if (g > 1) throw UnknownGenerator("torus knot words use x and y only");
    const auto kind = g == 0 ? Simple::Kind::x : Simple::Kind::y;
    const int top = g == 0 ? n_ : m_;
    if (is_inverse(l)) {
      --f.infimum;
      push(kind, top - 1);
    } else {
      push(kind, 1);
    }
  }
  return f;
}

bool GarsideGroup::is_identity(const Word& w) const {
  NormalForm f = gnf(w);
  return f.infimum == 0 && f.factors.empty();
}

Word GarsideGroup::to_word(const NormalForm& f) const {
  Word w = Word::gen(0, static_cast<int>(f.infimum * n_));
  for (const Simple& s : f.factors) {
    w *= Word::gen(s.kind == Simple::Kind::x ? 0 : 1, s.exponent);
  }
  return w;
}

std::string GarsideGroup::render(const NormalForm& f) const {
  std::string out = "D^" + std::to_string(f.infimum);
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    out += i == 0 ? " · " : " | ";
    out += f.factors[i].kind == Simple::Kind::x ? "x^" : "y^";
    out += std::to_string(f.factors[i].exponent);
  }
  return out;
}

std::int64_t GarsideGroup::abelianization(const Word& w) const {
  std::int64_t ex = 0, ey = 0;
  for (Letter l : w) {
    (gen_of(l) == 0 ? ex : ey) += is_inverse(l) ? -1 : 1;
  }
  return ex * m_ + ey * n_;  // gcd(n, m) = 1
}

NormalForm gnf(int n, int m, const Word& w) { return GarsideGroup(n, m).gnf(w); }

bool gnf_equal(int n, int m, const Word& u, const Word& v) {
  return GarsideGroup(n, m).equal(u, v);
}

GenMap sigma(int n, int m) {
  GarsideGroup check(n, m);
  auto run = [n](int len) {
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(make_letter(i % n));
    return w;
  };
  return GenMap(garside_alphabet(), Alphabet::indexed("x", n), {run(m), run(n)});
}

Word meridian(int n, int m, long a, long b) {
  if (a * n - b * m != 1) {
    throw DomainError("meridian needs a n - b m = 1, got " + std::to_string(a * n - b * m));
  }
  return Word::gen(1, static_cast<int>(a)) * Word::gen(0, static_cast<int>(-b));
}

}  // namespace toric
