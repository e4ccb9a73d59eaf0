#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N). An element is stored by
// its rational coefficients on 1, z, ..., z^(phi(N)-1), z = exp(2 pi i / N),
// reduced modulo the N-th cyclotomic polynomial. Operands of different
// moduli are embedded into the lcm first.

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

#include "toric/error.hpp"

namespace toric {

class Cyc {
 public:
  Cyc();  // 0 in Q
  Cyc(long v);  // NOLINT: integers convert implicitly
  Cyc(const mpq_class& v, int modulus = 1);

  static Cyc zero(int modulus) { return Cyc(mpq_class(0), modulus); }
  static Cyc one(int modulus) { return Cyc(mpq_class(1), modulus); }
  // z_N^k for any integer k.
  static Cyc zeta(int modulus, long k = 1);
  // 2 cos(2 pi k / N) = z^k + z^-k.
  static Cyc two_cos(int modulus, long k);

  int modulus() const noexcept { return n_; }
  const std::vector<mpq_class>& coeffs() const noexcept { return c_; }

  // Same element over Q(zeta_L); requires modulus() | L.
  Cyc embed(int L) const;

  bool is_zero() const;
  bool is_rational() const;
  mpq_class rational_value() const;  // throws DomainError unless rational

  Cyc operator-() const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  Cyc& operator/=(const Cyc& o);
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(Cyc a, const Cyc& b) { return a *= b; }
  friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }
  friend bool operator==(const Cyc& a, const Cyc& b);
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

  // Throws DomainError("division by zero") for 0.
  Cyc inverse() const;
  // Complex conjugate (z -> z^-1).
  Cyc conj() const;
  bool is_real() const { return *this == conj(); }
  Cyc pow(long e) const;

  std::complex<double> approx() const;
  // Exact sign of a real element: zero is decided exactly; otherwise the value
  // is evaluated with a rigorous error bound at increasing precision.
  int sign() const;

  // Deterministic rendering in the power basis, z standing for zeta_N:
  // "1/2 + z^2 - 3*z^5"; "0" for zero.
  std::string str() const;
  // Canonical key usable in hash maps (modulus and coefficients).
  std::string key() const;

 private:
  int n_ = 1;
  std::vector<mpq_class> c_;
};

int euler_phi(int n);
// Coefficients of the N-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(int n);

struct CycMatrix2 {
  Cyc a, b, c, d;  // [[a, b], [c, d]]

  static CycMatrix2 identity(int modulus);
  static CycMatrix2 scalar(const Cyc& v);
  CycMatrix2 operator*(const CycMatrix2& o) const;
  CycMatrix2 scaled(const Cyc& v) const;
  bool operator==(const CycMatrix2& o) const;
  Cyc det() const;
  // Throws DomainError when singular.
  CycMatrix2 inverse() const;
  CycMatrix2 pow(long e) const;
  bool is_scalar() const;
  std::string str() const;
};

}  // namespace toric
