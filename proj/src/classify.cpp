#include "toric/classify.hpp"

#include <algorithm>
#include <numeric>

#include "toric/cosets.hpp"
#include "toric/maps.hpp"

namespace toric {

namespace {

const std::vector<FiniteRow>& sporadic_rows() {
  static const std::vector<FiniteRow> rows = {
      {2, 3, 4, "G12", "W(B3)+ ≅ S4", 24},
      {2, 3, 5, "G22", "W(H3)+ ≅ A5", 60},
      {3, 2, 3, "G4", "W(A3)+ ≅ A4", 12},
      {4, 2, 3, "G8", "W(B3)+ ≅ S4", 24},
      {5, 2, 3, "G16", "W(H3)+ ≅ A5", 60},
      {3, 2, 5, "G20", "W(H3)+ ≅ A5", 60},
  };
  return rows;
}

FiniteRow dihedral_row(int m) {
  const std::string ms = std::to_string(m);
  return {2, 2, m, "G(" + ms + "," + ms + ",2) = I2(" + ms + ")",
          "W(A1 x I2(" + ms + "))+ = G(" + ms + "," + ms + ",2)", 2 * m};
}

}  // namespace

std::optional<FiniteRow> finite_toric_row(int k, int n, int m) {
  if (n > m) std::swap(n, m);
  for (const FiniteRow& r : sporadic_rows()) {
    if (r.k == k && r.n == n && r.m == m) return r;
  }
  if (k == 2 && n == 2 && m >= 3 && m % 2 == 1) return dihedral_row(m);
  return std::nullopt;
}

std::vector<FiniteRow> finite_toric_rows(int max_m) {
  std::vector<FiniteRow> rows = sporadic_rows();
  for (int m = 3; m <= max_m; m += 2) rows.push_back(dihedral_row(m));
  return rows;
}

std::vector<long> ClassifyReport::invariants() const {
  std::vector<long> v{reflection_classes, finite ? 1 : 0};
  if (finite) {
    v.push_back(enumerated_order ? static_cast<long>(*enumerated_order) : -1);
    v.push_back(row ? row->w_plus_order : -1);
  } else {
    v.insert(v.end(), maximal_finite_cyclic.begin(), maximal_finite_cyclic.end());
  }
  return v;
}

ClassifyReport classify(int k, int n, int m, std::size_t max_cosets) {
  if (k < 2 || n < 2 || m < 2) throw DomainError("k, n, m must be at least 2");
  if (std::gcd(n, m) != 1) throw DomainError("gcd(n, m) must be 1");
  if (n > m) std::swap(n, m);

  ClassifyReport rep;
  rep.k = k;
  rep.n = n;
  rep.m = m;
  rep.max_cosets = max_cosets;
  rep.row = finite_toric_row(k, n, m);
  rep.finite = rep.row.has_value();
  rep.triangle = classify_triangle(k, n, m);
  rep.braid_group = "G(" + std::to_string(n) + "," + std::to_string(m) + ")";

  const CoxeterMatrix cm = CoxeterMatrix::triangle(k, n, m);
  const ParabolicReport par = maximal_finite_parabolics(cm);
  rep.evidence.push_back(std::string("triangle group is ") +
                         std::string(triangle_type_name(rep.triangle)));

  if (rep.finite) {
    rep.evidence.push_back("finiteness table row " + rep.row->name);
    EnumerationOptions opts;
    opts.max_cosets = max_cosets;
    const FamilyParams fp{Family::toric, k, n, m};
    CosetTable ct = todd_coxeter(build(fp), {}, opts);
    if (ct.complete()) {
      rep.enumerated_order = ct.size();
      rep.evidence.push_back("coset enumeration completed: order " +
                             std::to_string(ct.size()));
      CayleyTable table(ct);
      rep.reflection_classes = reflection_class_count(fp, table);
      rep.reflection_method = "conjugacy classes of the Cayley table";
    } else {
      rep.enumeration_overflow = true;
      rep.evidence.push_back("coset enumeration overflowed at " + std::to_string(max_cosets));
    }
  } else {
    // W(k,n,m) maps onto W+ of the triangle group, which is infinite.
    rep.evidence.push_back(par.whole_group_finite
                               ? "triangle group finite but row not in the finiteness table"
                               : "triangle group infinite, so W(k,n,m) is infinite (phi is onto W+)");
    rep.maximal_finite_cyclic = par.rotation_orders;
    std::sort(rep.maximal_finite_cyclic.begin(), rep.maximal_finite_cyclic.end());
    std::string orders;
    for (int o : rep.maximal_finite_cyclic) orders += (orders.empty() ? "" : ",") + std::to_string(o);
    rep.evidence.push_back("maximal finite subgroups of W+ are cyclic of orders {" + orders + "}");
  }

  if (rep.reflection_method.empty()) {
    // Lower bound: x_i -> 1 in Z/k respects every relator and separates
    // x^1 .. x^(k-1). Upper bound: all x_i are conjugate through delta.
    CentralityWitness w = centrality_witness(n, m);
    CheckResult ok = check_centrality(w);
    if (!ok.ok) throw Error("centrality witness failed: " + ok.message);
    rep.reflection_classes = k - 1;
    rep.reflection_method = "exponent sum mod k (lower bound) and conjugating x_i by delta (upper bound)";
    rep.evidence.push_back("x_i delta = delta x_(i+" + std::to_string(w.r) +
                           ") derivations checked for all i");
  }
  return rep;
}

}  // namespace toric
