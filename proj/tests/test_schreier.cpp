#include <fstream>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "toric/schreier.hpp"

using namespace toric;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("schreier") {
  TEST_CASE("toric pipeline for (2,3,4)") {
    ToricRsResult r = toric_rs(2, 3, 4);
    CHECK(r.closure.table.size() == 12);
    CHECK(r.transversal.size() == 12);
    CHECK(r.relabeled.alphabet.size() == 3);
    CHECK(group_order(r.relabeled) == 48);
    std::string why;
    CHECK_MESSAGE(oracle::matches_chain_display(r.relabeled, 2, 3, 4, &why), why);
    CHECK(serialize(r.relabeled) == slurp(std::string(TORIC_GOLDEN_DIR) + "/rs_2_3_4.txt"));
  }

  TEST_CASE("transversal representatives are u^i t^j") {
    ToricRsResult r = toric_rs(3, 2, 3);
    const Alphabet& a = r.parent.alphabet;
    for (std::size_t c = 0; c < r.transversal.size(); ++c) {
      auto [i, j] = r.transversal.coordinates[c];
      Word want = Word::gen(*a.find("u"), i) * Word::gen(*a.find("t"), j);
      CHECK(r.transversal.rep(static_cast<int>(c)) == want);
    }
  }

  TEST_CASE("closed forms agree with rewriting") {
    for (auto [k, n, m] : {std::tuple{2, 3, 4}, {3, 2, 3}, {2, 3, 5}}) {
      auto [bad, total] = oracle::closed_form_mismatches(k, n, m);
      CHECK(bad == 0);
      CHECK(total == n * m + (n - 1) * m);
    }
    CHECK_THROWS_AS(closed_form_generator(2, 3, 4, 's', 4, 1), DomainError);
    CHECK_THROWS_AS(closed_form_generator(2, 3, 4, 'u', 0, 3), DomainError);
  }

  TEST_CASE("rewriting rejects non-members") {
    ToricRsResult r = toric_rs(2, 3, 4);
    const Alphabet& a = r.parent.alphabet;
    CHECK_THROWS_AS(rs_rewrite(r.rs, r.closure.table, parse_word("t", a)), DomainError);
    Word w = rs_rewrite(r.rs, r.closure.table, parse_word("t s t^-1", a));
    CHECK(w.size() >= 1);
  }

  TEST_CASE("relation systems are equivalent") {
    for (auto [n, m] : {std::pair{2, 3}, {3, 4}, {3, 5}, {4, 7}}) {
      EquivalenceWitness w = relation_equivalence(n, m);
      CheckResult r = check_equivalence(w, n);
      CHECK_MESSAGE(r.ok, r.message);
      CHECK(w.chain_from_shift.size() == static_cast<std::size_t>(n - 1));
      CHECK(w.shift_from_chain.size() == static_cast<std::size_t>(n));
    }
  }

  TEST_CASE("overflowing closure is an error") {
    EnumerationOptions o;
    o.max_cosets = 2000;
    CHECK_THROWS_AS(toric_rs(6, 2, 3, o), IncompleteError);
  }
}
