#include "doctest.h"
#include "toric/cosets.hpp"
#include "toric/derivation.hpp"
#include "toric/presentation.hpp"
#include "toric/tietze.hpp"

using namespace toric;

TEST_SUITE("words") {
  TEST_CASE("letters and free reduction") {
    CHECK(gen_of(make_letter(2, true)) == 2);
    CHECK(is_inverse(make_letter(0, true)));
    Alphabet a({"x", "y"});
    CHECK(free_reduce(parse_word("x y y^-1 x^-1 y", a)) == parse_word("y", a));
    CHECK(invert(parse_word("x y^2", a)) == parse_word("y^-2 x^-1", a));
    CHECK(cyclically_reduce(parse_word("x y x^-1", a)) == parse_word("y", a));
    CHECK(format_word(parse_word("x x x y^-1 y^-1", a), a) == "x^3 y^-2");
    CHECK(format_word(Word{}, a) == "1");
    CHECK(parse_word("1", a).empty());
  }

  TEST_CASE("parse errors carry columns") {
    Alphabet a({"x", "y"});
    CHECK_THROWS_AS(parse_word("x z", a), ParseError);
    GenMap f(a, a, {parse_word("y", a), parse_word("x", a)});
    CHECK_THROWS_AS(apply_map(f, Word{make_letter(2)}), UnknownGenerator);
    try {
      parse_presentation("gens: x y\nrel: x^2 = \n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_presentation("rel: x\n"), ParseError);
  }

  TEST_CASE("maps compose and substitute") {
    Alphabet a({"a", "b"}), x = Alphabet::indexed("x", 2);
    GenMap f(a, x, {parse_word("x1", x), parse_word("x1 x2", x)});
    CHECK(apply_map(f, parse_word("a^-1 b", a)) == parse_word("x2", x));
    GenMap g(x, a, {parse_word("a", a), parse_word("a^-1 b", a)});
    GenMap h = compose(g, f);
    CHECK(apply_map(h, parse_word("b", a)) == parse_word("b", a));
  }

  TEST_CASE("family presentations") {
    Presentation p = toric_presentation(2, 3, 4);
    CHECK(p.alphabet.names() == std::vector<std::string>{"x1", "x2", "x3"});
    CHECK(p.relators.size() == 5);
    CHECK(format_word(p.relators[3], p.alphabet) == "x1 x2 x3 x1 x2^-1 x1^-1 x3^-1 x2^-1");
    CHECK(display({Family::toric, 2, 3, 4}).find("rel: x1 x2 x3 x1 = x2 x3 x1 x2 = x3 x1 x2 x3") !=
          std::string::npos);
    CHECK_THROWS_AS(toric_presentation(2, 4, 6), DomainError);
    CHECK_THROWS_AS(toric_presentation(1, 2, 3), DomainError);
    // n > m is normalized unless disabled.
    CHECK(toric_presentation(3, 3, 2).alphabet.size() == 2);
    CHECK(toric_presentation(3, 3, 2, false).alphabet.size() == 3);
    Presentation alt = alt_plus_presentation(2, 3, 5);
    CHECK(serialize(alt) == "gens: a b\nrel: a^2\nrel: b^3\nrel: b a^-1 b a^-1 b a^-1 b a^-1 b a^-1\n");
    CHECK(parse_family("j-parent") == Family::j_parent);
    CHECK_THROWS_AS(parse_family("nope"), DomainError);
  }

  TEST_CASE("serialize round trip") {
    for (Family f : {Family::torus_standard, Family::torus_classical, Family::torus_dual,
                     Family::toric, Family::j_parent, Family::coxeter_triangle, Family::alt_plus,
                     Family::alt_toric}) {
      FamilyParams fp{f, 3, 2, 5};
      Presentation p = build(fp);
      CHECK(parse_presentation(serialize(p)) == p);
      // The displayed form presents the same relators after chain expansion.
      CHECK(parse_presentation(display(fp)) == p);
    }
  }

  TEST_CASE("tietze keeps the group") {
    Presentation p = parse_presentation("gens: a b c\nrel: c = a b\nrel: a^2\nrel: b^3\nrel: c^5\n");
    TietzeResult t = tietze_simplify(p);
    CHECK(t.presentation.alphabet.size() == 2);
    CHECK(t.eliminated.size() == 1);
    CHECK(t.eliminated[0].generator == "a");
    CHECK(group_order(t.presentation) == group_order(p));
    CHECK(group_order(p) == 60);
    TietzeOptions keep;
    keep.keep = {"c"};
    TietzeResult k = tietze_simplify(p, keep);
    CHECK(k.presentation.alphabet.find("c").has_value());
    TietzeOptions none;
    none.budget = 0;
    CHECK(tietze_simplify(p, none).budget_exceeded);
    CHECK(cyclic_canonical(parse_word("b a", p.alphabet)) ==
          cyclic_canonical(parse_word("a^-1 b^-1", p.alphabet)));
  }

  TEST_CASE("tietze examples") {
    Presentation p = parse_presentation("gens: x y\nrel: y x^-2\n");
    TietzeResult t = tietze_simplify(p);
    CHECK(serialize(t.presentation) == "gens: x\n");
    Presentation toric = toric_presentation(2, 3, 4);
    CHECK(tietze_simplify(toric).presentation == toric);
  }

  TEST_CASE("derivations replay") {
    Alphabet x = Alphabet::indexed("x", 2);
    RelationSet rels;
    auto c2 = rels.add("C2", parse_word("x1 x2 x1", x), parse_word("x2 x1 x2", x));
    DerivationBuilder b(rels, parse_word("x1 x1 x2 x1", x));
    b.apply(c2, 1);
    Derivation d = std::move(b).finish();
    CHECK(d.end() == parse_word("x1 x2 x1 x2", x));
    CHECK(check_proof(rels, d, parse_word("x1 x1 x2 x1", x), parse_word("x1 x2 x1 x2", x)).ok);
    Derivation bad = d;
    bad.steps[0].position = 0;
    CHECK_FALSE(check_derivation(rels, bad).ok);
    CHECK_THROWS(DerivationBuilder(rels, parse_word("x2 x2", x)).apply(c2, 0));
    CHECK(render_derivation(rels, d, x).find("C2") != std::string::npos);
  }
}
