#include "toric/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace toric {

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<long>& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<long>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<long>& q = cyclotomic_polynomial(d);
    const int dq = static_cast<int>(q.size()) - 1;
    const int dp = static_cast<int>(p.size()) - 1;
    std::vector<long> quot(dp - dq + 1, 0);
    for (int k = dp; k >= dq; --k) {
      long c = p[k];
      quot[k - dq] = c;
      if (c == 0) continue;
      for (int i = 0; i <= dq; ++i) p[k - dq + i] -= c * q[i];
    }
    p = std::move(quot);
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

namespace {

// Reduces an arbitrary-degree polynomial in z modulo z^N - 1 and Phi_N.
std::vector<mpq_class> reduce(std::vector<mpq_class> v, int n) {
  if (static_cast<int>(v.size()) > n) {
    for (std::size_t i = n; i < v.size(); ++i) v[i % n] += v[i];
    v.resize(n);
  }
  const std::vector<long>& phi = cyclotomic_polynomial(n);
  const int d = static_cast<int>(phi.size()) - 1;
  for (int k = static_cast<int>(v.size()) - 1; k >= d; --k) {
    if (v[k] == 0) continue;
    mpq_class c = v[k];
    for (int i = 0; i <= d; ++i) {
      if (phi[i] != 0) v[k - d + i] -= c * phi[i];
    }
  }
  v.resize(d);
  for (auto& x : v) x.canonicalize();
  return v;
}

int lcm_modulus(int a, int b) { return std::lcm(a, b); }

// pi to `bits` bits by Machin's formula.
mpf_class mpf_pi(unsigned bits) {
  auto arctan_inv = [bits](long x) {
    mpf_class sum(0, bits), term(1, bits), xx(x * x, bits);
    term /= x;
    for (long k = 0;; ++k) {
      mpf_class t = term / (2 * k + 1);
      if (t == 0) break;
      if (k % 2 == 0) sum += t; else sum -= t;
      term /= xx;
      long e;
      mpf_get_d_2exp(&e, t.get_mpf_t());
      if (e < -static_cast<long>(bits) - 8) break;
    }
    return sum;
  };
  mpf_class pi = 16 * arctan_inv(5) - 4 * arctan_inv(239);
  pi.set_prec(bits);
  return pi;
}

mpf_class mpf_cos(const mpf_class& x, unsigned bits) {
  mpf_class sum(1, bits), term(1, bits), xx(x * x, bits);
  for (long k = 1;; ++k) {
    term *= xx;
    term /= (2 * k - 1) * (2 * k);
    if (k % 2 == 1) sum -= term; else sum += term;
    long e;
    mpf_get_d_2exp(&e, term.get_mpf_t());
    if (term == 0 || (k > 4 && e < -static_cast<long>(bits) - 8)) break;
  }
  return sum;
}

}  // namespace

Cyc::Cyc() : n_(1), c_{mpq_class(0)} {}
Cyc::Cyc(long v) : n_(1), c_{mpq_class(v)} {}
Cyc::Cyc(const mpq_class& v, int modulus) : n_(modulus) {
  if (modulus < 1) throw DomainError("cyclotomic modulus must be positive");
  c_.assign(euler_phi(modulus), mpq_class(0));
  c_[0] = v;
  c_[0].canonicalize();
}

Cyc Cyc::zeta(int modulus, long k) {
  Cyc out = zero(modulus);
  long e = ((k % modulus) + modulus) % modulus;
  std::vector<mpq_class> v(e + 1, mpq_class(0));
  v[e] = 1;
  out.c_ = reduce(std::move(v), modulus);
  return out;
}

Cyc Cyc::two_cos(int modulus, long k) { return zeta(modulus, k) + zeta(modulus, -k); }

Cyc Cyc::embed(int L) const {
  if (L == n_) return *this;
  if (L % n_ != 0) throw DomainError("cannot embed: modulus does not divide target");
  const int step = L / n_;
  std::vector<mpq_class> v(static_cast<std::size_t>(c_.size() - 1) * step + 1, mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * step] = c_[i];
  Cyc out;
  out.n_ = L;
  out.c_ = reduce(std::move(v), L);
  return out;
}

bool Cyc::is_zero() const {
  for (const auto& x : c_) {
    if (x != 0) return false;
  }
  return true;
}

bool Cyc::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

mpq_class Cyc::rational_value() const {
  if (!is_rational()) throw DomainError("cyclotomic number is not rational");
  return c_[0];
}

Cyc Cyc::operator-() const {
  Cyc out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  if (o.n_ != n_) {
    int L = lcm_modulus(n_, o.n_);
    *this = embed(L);
    return *this += o.embed(L);
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) { return *this += -o; }

Cyc& Cyc::operator*=(const Cyc& o) {
  if (o.n_ != n_) {
    int L = lcm_modulus(n_, o.n_);
    *this = embed(L);
    return *this *= o.embed(L);
  }
  if (is_rational() || o.is_rational()) {
    const mpq_class s = is_rational() ? c_[0] : o.c_[0];
    if (is_rational()) c_ = o.c_;
    for (auto& x : c_) x *= s;
    return *this;
  }
  std::vector<mpq_class> v(2 * c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] != 0) v[i + j] += c_[i] * o.c_[j];
    }
  }
  c_ = reduce(std::move(v), n_);
  return *this;
}

Cyc& Cyc::operator/=(const Cyc& o) { return *this *= o.inverse(); }

bool operator==(const Cyc& a, const Cyc& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  int L = lcm_modulus(a.n_, b.n_);
  return a.embed(L).c_ == b.embed(L).c_;
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (is_rational()) return Cyc(1 / c_[0], n_);
  // Solve M x = e0 where column j of M holds the coefficients of this * z^j.
  const int d = static_cast<int>(c_.size());
  std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d + 1, mpq_class(0)));
  Cyc col = *this;
  const Cyc z = zeta(n_, 1);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) m[i][j] = col.c_[i];
    col *= z;
  }
  m[0][d] = 1;
  for (int c = 0; c < d; ++c) {
    int piv = c;
    while (m[piv][c] == 0) ++piv;
    std::swap(m[piv], m[c]);
    mpq_class inv = 1 / m[c][c];
    for (int j = c; j <= d; ++j) m[c][j] *= inv;
    for (int r = 0; r < d; ++r) {
      if (r == c || m[r][c] == 0) continue;
      mpq_class f = m[r][c];
      for (int j = c; j <= d; ++j) m[r][j] -= f * m[c][j];
    }
  }
  Cyc out = zero(n_);
  for (int i = 0; i < d; ++i) out.c_[i] = m[i][d];
  return out;
}

Cyc Cyc::conj() const {
  std::vector<mpq_class> v(n_, mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[(n_ - i) % n_] += c_[i];
  Cyc out;
  out.n_ = n_;
  out.c_ = reduce(std::move(v), n_);
  return out;
}

Cyc Cyc::pow(long e) const {
  Cyc base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? -e : e;
  Cyc r = one(n_);
  while (k) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}

std::complex<double> Cyc::approx() const {
  std::complex<double> s = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    double a = 2 * std::numbers::pi * static_cast<double>(i) / n_;
    s += c_[i].get_d() * std::complex<double>(std::cos(a), std::sin(a));
  }
  return s;
}

int Cyc::sign() const {
  if (is_zero()) return 0;
  if (!is_real()) throw DomainError("sign of a non-real cyclotomic number");
  double value = 0, mass = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    double c = c_[i].get_d();
    value += c * std::cos(2 * std::numbers::pi * static_cast<double>(i) / n_);
    mass += std::abs(c) + 1;
  }
  if (std::abs(value) > mass * 1e-12) return value > 0 ? 1 : -1;
  for (unsigned bits : {256u, 1024u, 4096u}) {
    mpf_class pi = mpf_pi(bits + 64);
    mpf_class v(0, bits + 64), err(0, bits + 64), abs_sum(0, bits + 64);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      mpf_class angle(2 * pi * static_cast<unsigned long>(i), bits + 64);
      angle /= n_;
      mpf_class c(c_[i], bits + 64);
      v += c * mpf_cos(angle, bits + 64);
      abs_sum += abs(c) + 1;
    }
    mpf_class bound(abs_sum, bits + 64);
    mpf_div_2exp(bound.get_mpf_t(), bound.get_mpf_t(), bits - 16);
    if (abs(v) > bound) return sgn(v);
  }
  throw Error("sign determination did not converge");
}

std::string Cyc::str() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const mpq_class& c = c_[i];
    if (c == 0) continue;
    mpq_class a = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << a.get_str();
      continue;
    }
    if (a != 1) out << a.get_str() << "*";
    out << "z";
    if (i > 1) out << "^" << i;
  }
  if (first) return "0";
  return out.str();
}

std::string Cyc::key() const {
  std::string k = std::to_string(n_) + ":";
  for (const auto& x : c_) {
    k += x.get_str();
    k += ',';
  }
  return k;
}

CycMatrix2 CycMatrix2::identity(int modulus) {
  return {Cyc::one(modulus), Cyc::zero(modulus), Cyc::zero(modulus), Cyc::one(modulus)};
}

CycMatrix2 CycMatrix2::scalar(const Cyc& v) {
  Cyc z = Cyc::zero(v.modulus());
  return {v, z, z, v};
}

CycMatrix2 CycMatrix2::operator*(const CycMatrix2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

CycMatrix2 CycMatrix2::scaled(const Cyc& v) const { return {a * v, b * v, c * v, d * v}; }

bool CycMatrix2::operator==(const CycMatrix2& o) const {
  return a == o.a && b == o.b && c == o.c && d == o.d;
}

Cyc CycMatrix2::det() const { return a * d - b * c; }

CycMatrix2 CycMatrix2::inverse() const {
  Cyc dt = det();
  if (dt.is_zero()) throw DomainError("singular matrix");
  Cyc inv = dt.inverse();
  return {d * inv, -b * inv, -c * inv, a * inv};
}

CycMatrix2 CycMatrix2::pow(long e) const {
  CycMatrix2 base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? -e : e;
  int modulus = std::lcm(std::lcm(a.modulus(), b.modulus()), std::lcm(c.modulus(), d.modulus()));
  CycMatrix2 r = identity(modulus);
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

bool CycMatrix2::is_scalar() const { return b.is_zero() && c.is_zero() && a == d; }

std::string CycMatrix2::str() const {
  return "[[" + a.str() + ", " + b.str() + "], [" + c.str() + ", " + d.str() + "]]";
}

}  // namespace toric
