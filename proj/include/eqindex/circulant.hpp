#pragma once

#include <algorithm>
#include <complex>
#include <set>
#include <vector>

#include "eqindex/indexcore.hpp"
#include "eqindex/linalg.hpp"
#include "eqindex/modcert.hpp"

namespace eqindex {

// The unit group (Z/m)^x / {+-1}: elements are represented by min(u, m-u),
// listed both in natural (sorted) order and in the iterated block order coming
// from a cyclic decomposition, under which the multiplication table is an
// iterated block circulant (up to the recorded row/column permutation).
struct UnitGroupTable {
  long m = 0;
  long order = 0;                        // phi(m)/2
  std::vector<long> factors;             // cyclic factor orders, descending
  std::vector<long> generators;          // one representative per factor
  std::vector<long> sorted_elements;     // natural order
  std::vector<long> elements;            // iterated block order
  std::vector<long> permutation;         // permutation[p] = natural index of elements[p]
  std::vector<std::vector<long>> table;  // table[a][b] = rep of elements[a]*elements[b]
};

namespace detail {

inline long unit_rep(long u, long m) {
  u %= m;
  if (u < 0) u += m;
  return std::min(u, m - u);
}

inline long unit_mul(long a, long b, long m) { return unit_rep(a * b, m); }

inline long unit_order(long g, long m) {
  long x = g, n = 1;
  while (x != 1) {
    x = unit_mul(x, g, m);
    ++n;
  }
  return n;
}

inline std::set<long> unit_span(const std::vector<long>& gens, long m) {
  std::set<long> span{1};
  bool grew = true;
  while (grew) {
    grew = false;
    for (long g : gens)
      for (long x : std::vector<long>(span.begin(), span.end())) {
        const long y = unit_mul(x, g, m);
        if (span.insert(y).second) grew = true;
      }
  }
  return span;
}

// Backtracking search for generators with (Z/m)^x/{+-1} = prod <g_i>,
// factor orders non-increasing; deterministic by candidate ordering.
inline bool unit_decompose(const std::vector<long>& elems, long m, long target,
                           std::vector<long>& gens, std::set<long>& span, long max_order) {
  if (static_cast<long>(span.size()) == target) return true;
  for (long d = max_order; d >= 2; --d) {
    if ((target / static_cast<long>(span.size())) % d != 0) continue;
    for (long g : elems) {
      if (span.count(g) || unit_order(g, m) != d) continue;
      std::vector<long> next_gens = gens;
      next_gens.push_back(g);
      std::set<long> next_span = unit_span(next_gens, m);
      if (static_cast<long>(next_span.size()) != static_cast<long>(span.size()) * d) continue;
      gens.push_back(g);
      if (unit_decompose(elems, m, target, gens, next_span, d)) {
        span = std::move(next_span);
        return true;
      }
      gens.pop_back();
    }
  }
  return false;
}

}  // namespace detail

inline UnitGroupTable unit_group(long m) {
  require(m >= 3, errc::trivial_group, "unit group mod +-1 is trivial for m < 3");
  UnitGroupTable t;
  t.m = m;
  std::set<long> reps;
  for (long u = 1; u < m; ++u)
    if (gcd_long(u, m) == 1) reps.insert(detail::unit_rep(u, m));
  t.sorted_elements.assign(reps.begin(), reps.end());
  t.order = static_cast<long>(t.sorted_elements.size());
  require(t.order == totient(m) / 2, errc::internal_error, "unit group order mismatch");

  std::set<long> span{1};
  if (t.order > 1) {
    const bool ok =
        detail::unit_decompose(t.sorted_elements, m, t.order, t.generators, span, t.order);
    require(ok, errc::internal_error, "no cyclic decomposition found");
    for (long g : t.generators) t.factors.push_back(detail::unit_order(g, m));
  }

  // Iterated block order: mixed-radix exponents over the generators, first
  // factor outermost, so the table consists of shifted blocks of the rest.
  t.elements.assign(static_cast<std::size_t>(t.order), 1);
  for (long flat = 0; flat < t.order; ++flat) {
    long rem = flat, e = 1;
    for (std::size_t i = t.factors.size(); i-- > 0;) {
      const long exp = rem % t.factors[i];
      rem /= t.factors[i];
      for (long k = 0; k < exp; ++k) e = detail::unit_mul(e, t.generators[i], m);
    }
    t.elements[static_cast<std::size_t>(flat)] = e;
  }
  for (long p = 0; p < t.order; ++p) {
    const auto it =
        std::lower_bound(t.sorted_elements.begin(), t.sorted_elements.end(), t.elements[p]);
    t.permutation.push_back(static_cast<long>(it - t.sorted_elements.begin()));
  }
  t.table.assign(static_cast<std::size_t>(t.order),
                 std::vector<long>(static_cast<std::size_t>(t.order), 1));
  for (long a = 0; a < t.order; ++a)
    for (long b = 0; b < t.order; ++b)
      t.table[a][b] = detail::unit_mul(t.elements[a], t.elements[b], m);
  return t;
}

// Exact csc^2(pi k l / m) matrix over the representatives 1 <= k, l < m/2
// coprime to m, in natural (sorted) order.
struct CscMatrix {
  long m = 0;
  std::vector<long> indices;
  CycloMat entries;
};

inline CscMatrix csc_matrix(long m) {
  require(m >= 3, errc::trivial_group, "csc matrix needs m >= 3");
  CscMatrix c;
  c.m = m;
  for (long k = 1; 2 * k < m; ++k)
    if (gcd_long(k, m) == 1) c.indices.push_back(k);
  for (long k : c.indices) {
    std::vector<CycloNum> row;
    row.reserve(c.indices.size());
    for (long l : c.indices) row.push_back(csc2_half((k * l) % m, m));
    c.entries.push_back(std::move(row));
  }
  return c;
}

struct BasisCertificate {
  long m = 0;
  bool det_nonzero = false;
  std::string method = "exact";
  std::vector<long> permutation;
};

// Exact determinant certificate for the csc^2 matrix over Q(zeta_m); true for
// all valid m. Certified through a nonzero homomorphic image with
// fraction-free elimination as the fallback.
inline BasisCertificate certify_basis(long m) {
  BasisCertificate cert;
  cert.m = m;
  cert.permutation = unit_group(m).permutation;
  cert.det_nonzero = linalg::det_nonzero(csc_matrix(m).entries);
  return cert;
}

// Numeric check that the circulant built from coeffs has eigenpairs
// (sum_k c_k w^{jk}, (w^{ji})_i) within tolerance.
inline bool circulant_eigen_check(const std::vector<double>& coeffs, double tol) {
  require(!coeffs.empty(), errc::invalid_input, "empty coefficient list");
  require(tol > 0, errc::invalid_tolerance, "tolerance must be positive");
  const std::size_t n = coeffs.size();
  for (std::size_t j = 0; j < n; ++j) {
    std::complex<double> lambda(0.0, 0.0);
    for (std::size_t k = 0; k < n; ++k)
      lambda += coeffs[k] * std::polar(1.0, 2.0 * M_PI * static_cast<double>(j * k) / static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
      std::complex<double> row(0.0, 0.0);
      for (std::size_t k = 0; k < n; ++k)
        row += coeffs[(k + n - i) % n] *
               std::polar(1.0, 2.0 * M_PI * static_cast<double>(j * k) / static_cast<double>(n));
      const std::complex<double> expect =
          lambda * std::polar(1.0, 2.0 * M_PI * static_cast<double>(j * i) / static_cast<double>(n));
      if (std::abs(row - expect) > tol) return false;
    }
  }
  return true;
}

// Numeric check of the block-circulant eigenvector formula: blocks A_0..A_{d-1}
// are circulants of one size n (so they share the Fourier eigenvectors x_j),
// and B = blockcirc(A_0..A_{d-1}) has eigenpairs
// (sum_i lambda_{i,j} zeta^{ki}, (x_j; zeta^k x_j; ...)) for zeta = e^{2 pi i/d}.
inline bool block_circulant_eigen_check(const std::vector<std::vector<double>>& block_rows,
                                        double tol) {
  require(!block_rows.empty(), errc::invalid_input, "empty block list");
  require(tol > 0, errc::invalid_tolerance, "tolerance must be positive");
  const std::size_t d = block_rows.size();
  const std::size_t n = block_rows[0].size();
  for (const auto& r : block_rows)
    require(r.size() == n, errc::invalid_input, "ragged block list");
  const auto omega = [&](std::size_t num, std::size_t den) {
    return std::polar(1.0, 2.0 * M_PI * static_cast<double>(num) / static_cast<double>(den));
  };
  for (std::size_t j = 0; j < n; ++j) {
    // lambda_{i,j}: eigenvalue of block i on the Fourier vector x_j.
    std::vector<std::complex<double>> lam(d, {0.0, 0.0});
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < n; ++k) lam[i] += block_rows[i][k] * omega(j * k, n);
    for (std::size_t k = 0; k < d; ++k) {
      std::complex<double> eta(0.0, 0.0);
      for (std::size_t i = 0; i < d; ++i) eta += lam[i] * omega(k * i, d);
      // Verify B x = eta x on every coordinate (I, t) of the stacked vector.
      for (std::size_t I = 0; I < d; ++I) {
        for (std::size_t t = 0; t < n; ++t) {
          std::complex<double> acc(0.0, 0.0);
          for (std::size_t Jb = 0; Jb < d; ++Jb) {
            const auto& block = block_rows[(Jb + d - I) % d];
            for (std::size_t u = 0; u < n; ++u)
              acc += block[(u + n - t) % n] * omega(Jb * k, d) * omega(j * u, n);
          }
          const std::complex<double> expect = eta * omega(I * k, d) * omega(j * t, n);
          if (std::abs(acc - expect) > tol) return false;
        }
      }
    }
  }
  return true;
}

// Exact rank of K over Q(zeta_m); the paper guarantees n+1 for every valid
// configuration, so anything smaller is a hard contradiction. The modular
// lower bound together with the column-count upper bound settles the full-rank
// case; anything inconclusive goes through fraction-free elimination.
inline long rank_K(const IndexSystem& sys) {
  const long expected = static_cast<long>(sys.eta_index.size()) + 1;
  if (linalg::rank_at_least(sys.K, expected)) return expected;
  const long r = linalg::rank(sys.K);
  require(r >= expected, errc::contradiction_with_paper,
          "rank(K) = " + std::to_string(r) + " < n+1 = " + std::to_string(expected));
  return r;
}

}  // namespace eqindex
