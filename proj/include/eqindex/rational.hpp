#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "eqindex/errors.hpp"

namespace eqindex {

using Int = boost::multiprecision::cpp_int;
// Always in lowest terms with positive denominator (enforced by the type).
using Rat = boost::multiprecision::cpp_rational;

// Canonical string form: "p" when the denominator is 1, else "p/q".
inline std::string rat_str(const Rat& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  std::string s = num.str();
  if (den != 1) {
    s += '/';
    s += den.str();
  }
  return s;
}

inline bool is_integer(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }

namespace detail {
inline Int parse_int(std::string_view s) {
  require(!s.empty(), errc::invalid_input, "empty integer literal");
  std::size_t i = (s[0] == '-') ? 1 : 0;
  require(i < s.size(), errc::invalid_input, "sign without digits");
  for (; i < s.size(); ++i)
    require(s[i] >= '0' && s[i] <= '9', errc::invalid_input,
            "bad digit in integer literal '" + std::string(s) + "'");
  return Int(std::string(s));
}
}  // namespace detail

// Accepts the canonical forms "p" and "p/q".
inline Rat parse_rat(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(detail::parse_int(s));
  const Int num = detail::parse_int(s.substr(0, slash));
  const Int den = detail::parse_int(s.substr(slash + 1));
  require(den != 0, errc::division_by_zero, "zero denominator in '" + std::string(s) + "'");
  return Rat(num, den);
}

inline double rat_double(const Rat& r) { return r.template convert_to<double>(); }

inline long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline long gcd_long(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Euler totient, trial division.
inline long totient(long m) {
  long result = m, n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

// Multiplicative inverse mod m; requires gcd(a, m) = 1.
inline long inv_mod(long a, long m) {
  a %= m;
  if (a < 0) a += m;
  long t = 0, new_t = 1, r = m, new_r = a;
  while (new_r != 0) {
    long q = r / new_r;
    long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  require(r == 1, errc::invalid_input, "inverse of non-unit mod m");
  if (t < 0) t += m;
  return t;
}

}  // namespace eqindex
