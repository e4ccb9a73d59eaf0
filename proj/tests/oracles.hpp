#pragma once

// Independent brute-force oracles used to cross-check the library.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toric/cyclotomic.hpp"
#include "toric/presentation.hpp"
#include "toric/words.hpp"

namespace oracle {

// Order of the matrix group generated by `gens` by breadth-first closure;
// nullopt beyond `limit` elements.
std::optional<std::size_t> closure_order(const std::vector<toric::CycMatrix2>& gens,
                                         std::size_t limit);

// Matrices of x_1..x_n = t^(i-1) s t^(1-i) in the 2x2 representation of the
// parent J(k,n,m) with q = constraint value, r = 1 (or q = 1, r = 0 when the
// constraint vanishes).
std::vector<toric::CycMatrix2> toric_matrices(int k, int n, int m);

// Reflections of the geometric representation of the triangle Coxeter group
// over real cyclotomic numbers (Gram matrix B(e_i, e_j) = -cos(pi / label)).
struct Mat3 {
  toric::Cyc v[3][3];
  Mat3 operator*(const Mat3& o) const;
  std::string key() const;
};
std::vector<Mat3> triangle_reflections(int k, int n, int m);
std::optional<std::size_t> closure_order3(const std::vector<Mat3>& gens, std::size_t limit);

// All positive words over {x, y} equal to w in the monoid <x, y | x^n = y^m>+
// (closure under replacing a factor x^n by y^m and back). Words as strings.
std::set<std::string> monoid_class(int n, int m, const std::string& w);

// Every relator of p (over x1..xn) is x_i^k, or u_a u_b^-1 up to rotation and
// inversion for two sides u_a, u_b of the chain x1...x_m = x2...x_(m+1) =
// ...; all x_i^k occur and the equalities connect every side.
bool matches_chain_display(const toric::Presentation& p, int k, int n, int m,
                           std::string* why = nullptr);

// Closed-form Schreier generators compared with the generic rewriting as
// elements of the parent J-group; returns the number of mismatches and the
// number of comparisons made.
std::pair<int, int> closed_form_mismatches(int k, int n, int m);

}  // namespace oracle
