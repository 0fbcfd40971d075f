#pragma once

#include <vector>

#include "eqindex/cyclo.hpp"

namespace eqindex {

using CycloMat = std::vector<std::vector<CycloNum>>;

namespace linalg {

// Exact linear algebra over Q(zeta_m) via fraction-free (Bareiss) elimination:
// rows are first scaled to Z[zeta_m], where the one-step identity
//   a'[i][j] = (a[r][c] a[i][j] - a[i][c] a[r][j]) / prev_pivot
// keeps every intermediate entry an algebraic integer with minor-bounded size.

namespace detail_la {

inline long conductor_of(const CycloMat& a) {
  require(!a.empty() && !a[0].empty(), errc::invalid_input, "empty matrix");
  return a[0][0].conductor();
}

// Scales each row by the lcm of its denominators; returns the row scales.
inline std::vector<Int> make_integral(CycloMat& a, CycloMat* b = nullptr) {
  std::vector<Int> scales;
  scales.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Int l(1);
    for (const auto& v : a[i]) l = boost::multiprecision::lcm(l, v.denominator());
    if (b)
      for (const auto& v : (*b)[i]) l = boost::multiprecision::lcm(l, v.denominator());
    if (l != 1) {
      const Rat s(l);
      for (auto& v : a[i]) v = v * s;
      if (b)
        for (auto& v : (*b)[i]) v = v * s;
    }
    scales.push_back(l);
  }
  return scales;
}

inline CycloNum step(const CycloNum& pivot, const CycloNum& target, const CycloNum& col,
                     const CycloNum& row, const CycloNum& prev_inv) {
  const CycloNum v = (pivot * target - col * row) * prev_inv;
  require(v.is_integral(), errc::internal_error, "non-exact Bareiss division");
  return v;
}

}  // namespace detail_la

inline long rank(CycloMat a) {
  if (a.empty() || a[0].empty()) return 0;
  const long m = detail_la::conductor_of(a);
  detail_la::make_integral(a);
  const std::size_t rows = a.size(), cols = a[0].size();
  CycloNum prev_inv = CycloNum::one(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a[i][j] = detail_la::step(a[r][c], a[i][j], a[i][c], a[r][j], prev_inv);
      a[i][c] = CycloNum::zero(m);
    }
    prev_inv = a[r][c].inverse();
    ++r;
  }
  return static_cast<long>(r);
}

inline CycloNum det(CycloMat a) {
  const std::size_t n = a.size();
  require(n > 0 && a[0].size() == n, errc::invalid_input, "det needs a square matrix");
  const long m = detail_la::conductor_of(a);
  const auto scales = detail_la::make_integral(a);
  CycloNum prev_inv = CycloNum::one(m);
  bool negate = false;
  for (std::size_t c = 0; c + 1 < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return CycloNum::zero(m);
    if (p != c) {
      std::swap(a[p], a[c]);
      negate = !negate;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j)
        a[i][j] = detail_la::step(a[c][c], a[i][j], a[i][c], a[c][j], prev_inv);
      a[i][c] = CycloNum::zero(m);
    }
    prev_inv = a[c][c].inverse();
  }
  Int scale(1);
  for (const Int& s : scales) scale *= s;
  const CycloNum d = negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
  return scale == 1 ? d : d * Rat(Int(1), scale);
}

// Solves A X = B for X with A square; throws internal_error if A is singular.
inline CycloMat solve(CycloMat a, CycloMat b) {
  const std::size_t n = a.size();
  require(n > 0 && a[0].size() == n, errc::invalid_input, "solve needs a square matrix");
  require(b.size() == n, errc::invalid_input, "dimension mismatch in solve");
  const long m = detail_la::conductor_of(a);
  const std::size_t k = b[0].size();
  detail_la::make_integral(a, &b);
  CycloNum prev_inv = CycloNum::one(m);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    require(p < n, errc::internal_error, "singular matrix in solve");
    if (p != c) {
      std::swap(a[p], a[c]);
      std::swap(b[p], b[c]);
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j)
        a[i][j] = detail_la::step(a[c][c], a[i][j], a[i][c], a[c][j], prev_inv);
      for (std::size_t j = 0; j < k; ++j)
        b[i][j] = detail_la::step(a[c][c], b[i][j], a[i][c], b[c][j], prev_inv);
      a[i][c] = CycloNum::zero(m);
    }
    prev_inv = a[c][c].inverse();
  }
  // Rational back-substitution on the triangular system.
  CycloMat x(n, std::vector<CycloNum>(k, CycloNum::zero(m)));
  for (std::size_t ii = n; ii-- > 0;) {
    const CycloNum dinv = a[ii][ii].inverse();
    for (std::size_t j = 0; j < k; ++j) {
      CycloNum acc = b[ii][j];
      for (std::size_t jj = ii + 1; jj < n; ++jj) acc = acc - a[ii][jj] * x[jj][j];
      x[ii][j] = acc * dinv;
    }
  }
  return x;
}

}  // namespace linalg
}  // namespace eqindex
