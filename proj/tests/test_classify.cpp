#include <map>

#include "doctest.h"
#include "toric/classify.hpp"

using namespace toric;

TEST_SUITE("classify") {
  TEST_CASE("table rows") {
    CHECK(finite_toric_row(2, 3, 4)->name == "G12");
    CHECK(finite_toric_row(2, 4, 3)->name == "G12");
    CHECK(finite_toric_row(2, 2, 7).has_value());
    CHECK_FALSE(finite_toric_row(6, 2, 3).has_value());
    CHECK_FALSE(finite_toric_row(2, 2, 4).has_value());
    CHECK(finite_toric_rows(9).size() == 10);
  }

  TEST_CASE("finite report") {
    ClassifyReport r = classify(2, 3, 4);
    CHECK(r.finite);
    CHECK(r.enumerated_order == 48);
    REQUIRE(r.row.has_value());
    CHECK(r.row->name == "G12");
    CHECK(r.row->center_quotient.find("S4") != std::string::npos);
    CHECK(r.reflection_classes == 1);
    CHECK(r.triangle == TriangleType::spherical);
    CHECK_FALSE(r.evidence.empty());
    ClassifyReport d = classify(2, 2, 5);
    CHECK(d.finite);
    CHECK(d.row->name.find("I2(5)") != std::string::npos);
    CHECK(d.enumerated_order == 10);
  }

  TEST_CASE("infinite report") {
    ClassifyReport r = classify(6, 2, 3, 50000);
    CHECK_FALSE(r.finite);
    CHECK_FALSE(r.enumerated_order.has_value());
    CHECK(r.triangle == TriangleType::affine);
    CHECK(r.reflection_classes == 5);
    CHECK(r.maximal_finite_cyclic == std::vector<int>{2, 3, 6});
    CHECK(r.invariants() == std::vector<long>{5, 0, 2, 3, 6});
    CHECK_THROWS_AS(classify(2, 4, 6), DomainError);
  }

  TEST_CASE("normalization") {
    ClassifyReport r = classify(3, 3, 2);
    CHECK(r.n == 2);
    CHECK(r.m == 3);
    CHECK(r.enumerated_order == 24);
  }

  TEST_CASE("reflection classes are k - 1 in finite cases") {
    for (const FiniteRow& row : finite_toric_rows(7)) {
      ClassifyReport r = classify(row.k, row.n, row.m);
      CAPTURE(row.name);
      CHECK(r.reflection_classes == row.k - 1);
    }
  }
}
