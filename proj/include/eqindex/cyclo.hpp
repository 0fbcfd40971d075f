#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "eqindex/rational.hpp"

namespace eqindex {

namespace detail {

// Dense integer polynomials, little-endian coefficients.
using IPoly = std::vector<Int>;

// Exact division by a monic divisor; asserts zero remainder.
inline IPoly poly_divexact_monic(IPoly num, const IPoly& den) {
  const std::size_t dd = den.size() - 1;
  IPoly quo(num.size() - dd, Int(0));
  for (std::size_t k = num.size(); k-- > dd;) {
    Int q = num[k];
    if (q == 0) continue;
    quo[k - dd] = q;
    for (std::size_t j = 0; j < den.size(); ++j) num[k - dd + j] -= q * den[j];
  }
  for (std::size_t j = 0; j < dd; ++j)
    require(num[j] == 0, errc::internal_error, "non-exact polynomial division");
  return quo;
}

inline const IPoly& cyclotomic_poly_locked(long m, std::map<long, IPoly>& cache) {
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
  IPoly p(static_cast<std::size_t>(m) + 1, Int(0));
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (long d = 1; d < m; ++d)
    if (m % d == 0) p = poly_divexact_monic(std::move(p), cyclotomic_poly_locked(d, cache));
  return cache.emplace(m, std::move(p)).first->second;
}

// Coefficients of the m-th cyclotomic polynomial (monic, degree phi(m)).
inline const IPoly& cyclotomic_poly(long m) {
  static std::map<long, IPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  return cyclotomic_poly_locked(m, cache);
}

}  // namespace detail

// An exact element of Q(zeta_m) on the power basis 1, zeta, ..., zeta^{phi(m)-1},
// reduced modulo the m-th cyclotomic polynomial. Stored as an integer coefficient
// vector over a single positive denominator, with content gcd 1; equality is a
// plain field compare. Immutable value type.
class CycloNum {
 public:
  CycloNum() : m_(1), den_(1), num_(1, Int(0)) {}

  static CycloNum zero(long m) { return CycloNum(m); }

  static CycloNum one(long m) {
    CycloNum r(m);
    r.num_[0] = 1;
    return r;
  }

  static CycloNum from_rational(long m, const Rat& q) {
    CycloNum r(m);
    r.num_[0] = boost::multiprecision::numerator(q);
    r.den_ = boost::multiprecision::denominator(q);
    return r;
  }

  // zeta_m^k in canonical reduced form.
  static CycloNum root(long m, long k) {
    require(m >= 1, errc::invalid_conductor, "conductor must be >= 1");
    k %= m;
    if (k < 0) k += m;
    std::vector<Int> dense(static_cast<std::size_t>(m), Int(0));
    dense[static_cast<std::size_t>(k)] = 1;
    CycloNum r(m);
    r.num_ = reduce(std::move(dense), m);
    return r;
  }

  long conductor() const { return m_; }
  long degree() const { return static_cast<long>(num_.size()); }
  bool is_integral() const { return den_ == 1; }
  const Int& denominator() const { return den_; }

  bool is_zero() const {
    return std::all_of(num_.begin(), num_.end(), [](const Int& c) { return c == 0; });
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < num_.size(); ++i)
      if (num_[i] != 0) return false;
    return true;
  }

  std::optional<Rat> as_rational() const {
    if (!is_rational()) return std::nullopt;
    return Rat(num_[0], den_);
  }

  bool is_real() const { return conj() == *this; }

  // Coefficients on the reduced power basis, as rationals.
  std::vector<Rat> coeffs() const {
    std::vector<Rat> out;
    out.reserve(num_.size());
    for (const Int& c : num_) out.emplace_back(c, den_);
    return out;
  }

  friend bool operator==(const CycloNum& a, const CycloNum& b) {
    return a.m_ == b.m_ && a.den_ == b.den_ && a.num_ == b.num_;
  }
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

  friend CycloNum operator+(const CycloNum& a, const CycloNum& b) {
    check_conductors(a, b);
    CycloNum r(a.m_);
    r.den_ = a.den_ * b.den_;
    for (std::size_t i = 0; i < r.num_.size(); ++i)
      r.num_[i] = a.num_[i] * b.den_ + b.num_[i] * a.den_;
    r.normalize();
    return r;
  }

  friend CycloNum operator-(const CycloNum& a, const CycloNum& b) { return a + (-b); }

  CycloNum operator-() const {
    CycloNum r(*this);
    for (Int& c : r.num_) c = -c;
    return r;
  }

  friend CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    check_conductors(a, b);
    const std::size_t n = a.num_.size();
    std::vector<Int> dense(2 * n - 1, Int(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (a.num_[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b.num_[j] == 0) continue;
        dense[i + j] += a.num_[i] * b.num_[j];
      }
    }
    CycloNum r(a.m_);
    r.num_ = reduce(std::move(dense), a.m_);
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
  }

  friend CycloNum operator*(const CycloNum& a, const Rat& q) {
    CycloNum r(a);
    const Int qn = boost::multiprecision::numerator(q);
    for (Int& c : r.num_) c *= qn;
    r.den_ *= boost::multiprecision::denominator(q);
    r.normalize();
    return r;
  }
  friend CycloNum operator*(const Rat& q, const CycloNum& a) { return a * q; }

  friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inverse(); }

  CycloNum inverse() const {
    require(!is_zero(), errc::division_by_zero, "division by zero in Q(zeta_m)");
    // Extended Euclid over Q[x] against Phi_m; Phi_m is irreducible so the
    // gcd is a nonzero constant and u*this == gcd (mod Phi_m).
    const detail::IPoly& phi = detail::cyclotomic_poly(m_);
    std::vector<Rat> r0(phi.begin(), phi.end());
    std::vector<Rat> r1 = coeffs();
    trim(r1);
    std::vector<Rat> u0{Rat(0)}, u1{Rat(1)};
    while (r1.size() > 1) {
      auto [q, rem] = poly_divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(rem);
      auto u2 = poly_sub(u0, poly_mul(q, u1));
      u0 = std::move(u1);
      u1 = std::move(u2);
      trim(r1);
    }
    require(!r1.empty() && r1[0] != 0, errc::internal_error, "vanishing gcd against Phi_m");
    const Rat scale = Rat(1) / r1[0];
    CycloNum out(m_);
    Int den(1);
    for (Rat& c : u1) {
      c *= scale;
      den = boost::multiprecision::lcm(den, Int(boost::multiprecision::denominator(c)));
    }
    out.den_ = den;
    for (std::size_t i = 0; i < u1.size() && i < out.num_.size(); ++i)
      out.num_[i] = Int(boost::multiprecision::numerator(u1[i])) *
                    (den / Int(boost::multiprecision::denominator(u1[i])));
    out.normalize();
    return out;
  }

  // Galois substitution zeta -> zeta^t, gcd(t, m) = 1.
  CycloNum galois(long t) const {
    t %= m_;
    if (t < 0) t += m_;
    require(gcd_long(t, m_) == 1, errc::invalid_input, "galois exponent not coprime to conductor");
    std::vector<Int> dense(static_cast<std::size_t>(m_), Int(0));
    for (std::size_t i = 0; i < num_.size(); ++i) {
      if (num_[i] == 0) continue;
      dense[static_cast<std::size_t>((static_cast<long>(i) * t) % m_)] += num_[i];
    }
    CycloNum r(m_);
    r.num_ = reduce(std::move(dense), m_);
    r.den_ = den_;
    r.normalize();
    return r;
  }

  // Complex conjugation zeta -> zeta^{-1}; an involution.
  CycloNum conj() const { return galois(m_ - 1); }

  // Numeric embedding at zeta = e^{2 pi i / m}. Test/cross-check channel only.
  std::complex<double> embed() const {
    const double d = Int(den_).convert_to<double>();
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = 0; i < num_.size(); ++i) {
      if (num_[i] == 0) continue;
      acc += (num_[i].convert_to<double>() / d) *
             std::polar(1.0, 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(m_));
    }
    return acc;
  }

 private:
  explicit CycloNum(long m) : m_(m), den_(1) {
    require(m >= 1, errc::invalid_conductor, "conductor must be >= 1");
    num_.assign(static_cast<std::size_t>(totient(m)), Int(0));
  }

  static void check_conductors(const CycloNum& a, const CycloNum& b) {
    require(a.m_ == b.m_, errc::conductor_mismatch,
            "conductor mismatch: " + std::to_string(a.m_) + " vs " + std::to_string(b.m_));
  }

  // Reduce a dense integer polynomial modulo Phi_m; returns exactly phi(m) coefficients.
  static std::vector<Int> reduce(std::vector<Int> dense, long m) {
    const detail::IPoly& phi = detail::cyclotomic_poly(m);
    const std::size_t f = phi.size() - 1;
    for (std::size_t i = dense.size(); i-- > f;) {
      if (dense[i] == 0) continue;
      const Int q = dense[i];
      for (std::size_t j = 0; j < f; ++j) dense[i - f + j] -= q * phi[j];
      dense[i] = 0;
    }
    dense.resize(f);
    return dense;
  }

  void normalize() {
    if (den_ < 0) {
      den_ = -den_;
      for (Int& c : num_) c = -c;
    }
    Int g = den_;
    for (const Int& c : num_) {
      if (c != 0) g = boost::multiprecision::gcd(g, c);
      if (g == 1) return;
    }
    if (g == 1 || g == 0) return;
    den_ /= g;
    for (Int& c : num_) c /= g;
  }

  // Rational polynomial helpers for the inverse.
  static void trim(std::vector<Rat>& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
  }
  static std::vector<Rat> poly_sub(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
  }
  static std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
  }
  static std::pair<std::vector<Rat>, std::vector<Rat>> poly_divmod(std::vector<Rat> num,
                                                                   const std::vector<Rat>& den) {
    const std::size_t dd = den.size() - 1;
    if (num.size() <= dd) return {std::vector<Rat>{Rat(0)}, std::move(num)};
    std::vector<Rat> quo(num.size() - dd, Rat(0));
    for (std::size_t k = num.size(); k-- > dd;) {
      if (num[k] == 0) continue;
      const Rat q = num[k] / den[dd];
      quo[k - dd] = q;
      for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= q * den[j];
    }
    num.resize(dd);
    if (num.empty()) num.assign(1, Rat(0));
    trim(num);
    return {std::move(quo), std::move(num)};
  }

  long m_;
  Int den_;                // > 0
  std::vector<Int> num_;   // size phi(m), gcd(content, den) = 1
};

// zeta_m^k (the spec's `make`).
inline CycloNum make_root(long m, long k) { return CycloNum::root(m, k); }

// Exact -i*cot(pi k/m) = (zeta^k + 1)/(zeta^k - 1), an element of Q(zeta_m).
// Raw cot is not representable in Q(zeta_m); only the -i multiple is exposed.
// Memoized: the sweeps request the same constants constantly.
inline CycloNum icot_half(long k, long m) {
  require(m >= 1, errc::invalid_conductor, "conductor must be >= 1");
  require(k % m != 0, errc::pole, "cot(pi k/m) pole at k = 0 mod m");
  k %= m;
  if (k < 0) k += m;
  static std::map<std::pair<long, long>, CycloNum> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({m, k});
  if (it != cache.end()) return it->second;
  const CycloNum zk = CycloNum::root(m, k);
  const CycloNum one = CycloNum::one(m);
  return cache.emplace(std::make_pair(m, k), (zk + one) / (zk - one)).first->second;
}

// Exact csc^2(pi k/m) = -4 zeta^k / (zeta^k - 1)^2; lies in the real subfield.
inline CycloNum csc2_half(long k, long m) {
  require(m >= 1, errc::invalid_conductor, "conductor must be >= 1");
  require(k % m != 0, errc::pole, "csc^2(pi k/m) pole at k = 0 mod m");
  k %= m;
  if (k < 0) k += m;
  static std::map<std::pair<long, long>, CycloNum> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({m, k});
  if (it != cache.end()) return it->second;
  const CycloNum zk = CycloNum::root(m, k);
  const CycloNum d = zk - CycloNum::one(m);
  return cache.emplace(std::make_pair(m, k), (zk * Rat(-4)) / (d * d)).first->second;
}

}  // namespace eqindex
