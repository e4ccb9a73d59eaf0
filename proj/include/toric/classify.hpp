#pragma once

// Classification report for toric reflection groups W(k,n,m).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toric/coxeter.hpp"

namespace toric {

struct FiniteRow {
  int k = 0, n = 0, m = 0;
  std::string name;          // Shephard-Todd name
  std::string center_quotient;  // W(k,n,m)/Z as an alternating subgroup
  int w_plus_order = 0;
};

// Finite toric reflection groups (n < m). (2, 2, m) rows need odd m >= 3.
std::optional<FiniteRow> finite_toric_row(int k, int n, int m);
// Every sporadic row plus (2, 2, m) for odd m <= max_m.
std::vector<FiniteRow> finite_toric_rows(int max_m = 9);

struct ClassifyReport {
  int k = 0, n = 0, m = 0;  // normalized, n < m
  bool finite = false;
  std::optional<std::size_t> enumerated_order;
  bool enumeration_overflow = false;
  std::size_t max_cosets = 0;
  std::optional<FiniteRow> row;
  TriangleType triangle = TriangleType::spherical;
  int reflection_classes = 0;
  std::string reflection_method;
  // Rotation orders of the maximal finite subgroups of W+ (infinite case).
  std::vector<int> maximal_finite_cyclic;
  std::string braid_group;  // G(n,m)
  std::vector<std::string> evidence;

  // Isomorphism invariants: reflection classes, then |W| and |W+| when
  // finite, or the sorted maximal-finite cyclic orders when infinite.
  std::vector<long> invariants() const;
};

// Throws DomainError unless k, n, m >= 2 and gcd(n, m) = 1.
ClassifyReport classify(int k, int n, int m, std::size_t max_cosets = 1'000'000);

}  // namespace toric
