#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eqindex/linalg.hpp"

namespace eqindex {
namespace modular {

// Homomorphic-image certificates: for a prime q = 1 (mod m) and g of exact
// order m in F_q, the evaluation zeta -> g is a ring map Z[zeta_m] -> F_q
// (g is a root of Phi_m mod q because x^m - 1 is squarefree mod q). A nonzero
// determinant image therefore proves the exact determinant is nonzero, and a
// modular rank is a lower bound for the exact rank. Inconclusive images fall
// back to fraction-free elimination.

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % q);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t q) {
  std::uint64_t r = 1 % q;
  a %= q;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, q);
    a = mulmod(a, a, q);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs with these bases.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t q) { return powmod(a, q - 2, q); }

// Deterministic sequence of primes q = 1 (mod m) around 2^40.
inline std::vector<std::uint64_t> certificate_primes(long m, int count) {
  std::vector<std::uint64_t> out;
  std::uint64_t k = (1ull << 40) / static_cast<std::uint64_t>(m) + 1;
  while (static_cast<int>(out.size()) < count) {
    const std::uint64_t q = k * static_cast<std::uint64_t>(m) + 1;
    if (is_prime(q)) out.push_back(q);
    ++k;
  }
  return out;
}

inline std::vector<long> prime_factors(long m) {
  std::vector<long> ps;
  for (long p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      ps.push_back(p);
      while (m % p == 0) m /= p;
    }
  if (m > 1) ps.push_back(m);
  return ps;
}

// Element of exact multiplicative order m in F_q (requires q = 1 mod m).
inline std::uint64_t root_of_unity(long m, std::uint64_t q) {
  const auto ps = prime_factors(m);
  for (std::uint64_t x = 2;; ++x) {
    const std::uint64_t g = powmod(x, (q - 1) / static_cast<std::uint64_t>(m), q);
    if (g == 1) continue;
    bool exact = true;
    for (long p : ps)
      if (powmod(g, static_cast<std::uint64_t>(m / p), q) == 1) exact = false;
    if (exact) return g;
  }
}

// Evaluates at zeta -> g; nullopt when q divides a denominator.
inline std::optional<std::uint64_t> eval(const CycloNum& v, std::uint64_t g, std::uint64_t q) {
  const Int qi(q);
  Int den = v.denominator() % qi;
  if (den == 0) return std::nullopt;
  const std::uint64_t dinv = invmod(den.convert_to<std::uint64_t>(), q);
  std::uint64_t acc = 0, power = 1;
  const auto coeffs = v.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    // coeffs share v's denominator up to content; evaluate num_i/den directly
    Int n = (boost::multiprecision::numerator(coeffs[i]) *
             (v.denominator() / boost::multiprecision::denominator(coeffs[i]))) %
            qi;
    if (n < 0) n += qi;
    acc = (acc + mulmod(n.convert_to<std::uint64_t>(), power, q)) % q;
    power = mulmod(power, g, q);
  }
  return mulmod(acc, dinv, q);
}

inline std::optional<std::vector<std::vector<std::uint64_t>>> eval_mat(const CycloMat& a,
                                                                       std::uint64_t g,
                                                                       std::uint64_t q) {
  std::vector<std::vector<std::uint64_t>> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i].reserve(a[i].size());
    for (const auto& v : a[i]) {
      const auto e = eval(v, g, q);
      if (!e) return std::nullopt;
      out[i].push_back(*e);
    }
  }
  return out;
}

inline long rank_mod(std::vector<std::vector<std::uint64_t>> a, std::uint64_t q) {
  if (a.empty() || a[0].empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const std::uint64_t pinv = invmod(a[r][c], q);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const std::uint64_t f = mulmod(a[i][c], pinv, q);
      for (std::size_t j = c; j < cols; ++j)
        a[i][j] = (a[i][j] + q - mulmod(f, a[r][j], q)) % q;
    }
    ++r;
  }
  return static_cast<long>(r);
}

}  // namespace modular

namespace linalg {

// Exact nonzero certificate for a determinant: nonzero homomorphic image, with
// fraction-free elimination as the (rarely needed) authoritative fallback.
inline bool det_nonzero(const CycloMat& a, int max_primes = 8) {
  require(!a.empty() && a.size() == a[0].size(), errc::invalid_input,
          "det_nonzero needs a square matrix");
  const long m = a[0][0].conductor();
  const long n = static_cast<long>(a.size());
  for (const std::uint64_t q : modular::certificate_primes(m, max_primes)) {
    const std::uint64_t g = modular::root_of_unity(m, q);
    const auto img = modular::eval_mat(a, g, q);
    if (!img) continue;
    if (modular::rank_mod(*img, q) == n) return true;
  }
  return !det(a).is_zero();
}

// Exact full-rank certificate: modular rank is a lower bound, column count the
// upper bound. Returns false when inconclusive (caller settles exactly).
inline bool rank_at_least(const CycloMat& a, long r, int max_primes = 4) {
  if (a.empty() || a[0].empty()) return r <= 0;
  const long m = a[0][0].conductor();
  for (const std::uint64_t q : modular::certificate_primes(m, max_primes)) {
    const std::uint64_t g = modular::root_of_unity(m, q);
    const auto img = modular::eval_mat(a, g, q);
    if (!img) continue;
    if (modular::rank_mod(*img, q) >= r) return true;
  }
  return false;
}

}  // namespace linalg
}  // namespace eqindex
