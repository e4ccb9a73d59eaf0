#include "doctest.h"
#include "oracles.hpp"
#include "toric/cosets.hpp"

using namespace toric;

namespace {

struct Row {
  int k, n, m;
  std::size_t order;
};

// Frozen from the matrix-closure oracle (oracle::toric_matrices).
const Row kRows[] = {{2, 3, 4, 48}, {2, 3, 5, 240}, {3, 2, 3, 24}, {4, 2, 3, 96},
                     {5, 2, 3, 600}, {3, 2, 5, 360}, {2, 2, 3, 6},  {2, 2, 5, 10},
                     {2, 2, 7, 14},  {2, 2, 9, 18}};

}  // namespace

TEST_SUITE("cosets") {
  TEST_CASE("oracle agrees with the frozen orders") {
    for (const Row& r : kRows) {
      CAPTURE(r.k);
      CAPTURE(r.m);
      CHECK(oracle::closure_order(oracle::toric_matrices(r.k, r.n, r.m), 5000) == r.order);
    }
  }

  TEST_CASE("finite toric orders") {
    for (const Row& r : kRows) {
      CAPTURE(r.k);
      CAPTURE(r.m);
      CHECK(group_order(toric_presentation(r.k, r.n, r.m)) == r.order);
    }
  }

  TEST_CASE("hlt and felsch give the same standardized table") {
    for (const Row& r : {kRows[0], kRows[2], kRows[5]}) {
      Presentation p = toric_presentation(r.k, r.n, r.m);
      EnumerationOptions h, f;
      f.strategy = Strategy::felsch;
      CosetTable a = todd_coxeter(p, {}, h);
      CosetTable b = todd_coxeter(p, {}, f);
      REQUIRE(a.complete());
      REQUIRE(b.complete());
      CHECK(a.size() == b.size());
      bool same = true;
      for (int c = 0; c < a.size(); ++c)
        for (int col = 0; col < a.num_cols(); ++col) same = same && a.entry(c, col) == b.entry(c, col);
      CHECK(same);
    }
  }

  TEST_CASE("overflow is a result") {
    for (auto [k, n, m] : {std::tuple{6, 2, 3}, {2, 3, 7}, {3, 4, 5}}) {
      EnumerationOptions o;
      o.max_cosets = 100000;
      CosetTable t = todd_coxeter(toric_presentation(k, n, m), {}, o);
      CHECK_FALSE(t.complete());
      CHECK(t.status() == CosetTable::Status::overflow);
    }
    CHECK_FALSE(group_order(toric_presentation(6, 2, 3), 50000).has_value());
  }

  TEST_CASE("subgroup index") {
    Presentation p = j_parent_presentation(2, 3, 5);
    CosetTable t = todd_coxeter(p, {parse_word("s", p.alphabet)});
    REQUIRE(t.complete());
    CHECK(group_order(p) == 3600);
    NormalClosureResult nc = normal_closure(p, {parse_word("s", p.alphabet)});
    REQUIRE(nc.table.complete());
    CHECK(nc.table.size() == 15);
    CHECK(t.trace(0, parse_word("s", p.alphabet)) == 0);
  }

  TEST_CASE("cayley table") {
    CosetTable ct = todd_coxeter(toric_presentation(3, 2, 3), {});
    CayleyTable c(ct);
    CHECK(c.size() == 24);
    CHECK(c.check_axioms());
    CHECK(c.num_classes() == 7);
    CHECK(element_order(c, parse_word("x1 x2", Alphabet::indexed("x", 2))) == 6);
    CHECK(c.order(c.gen(0)) == 3);
    CHECK(reflection_class_count({Family::toric, 3, 2, 3}, c) == 2);
    for (int e = 0; e < c.size(); ++e) CHECK(c.element(c.word(e)) == e);
    CHECK(c.centralizer({c.gen(0), c.gen(1)}).size() == 2);
  }

  TEST_CASE("spanning tree reaches every coset") {
    Presentation p = j_parent_presentation(2, 3, 4);
    NormalClosureResult nc = normal_closure(p, {parse_word("s", p.alphabet)});
    SpanningTree t = spanning_tree(nc.table, {2, 1, 0});
    CHECK(t.words.size() == 12);
    CHECK(t.parent[0] == -1);
    for (int c = 0; c < 12; ++c) CHECK(nc.table.trace(0, t.words[c]) == c);
  }
}
