#pragma once

#include <map>
#include <optional>
#include <vector>

#include "eqindex/action.hpp"
#include "eqindex/linalg.hpp"
#include "eqindex/reptheory.hpp"

namespace eqindex {

// Degree <= 1 jet in the formal Euler symbols: c0 + sum_j c1[j] * eps_j,
// truncating all eps*eps terms.
struct Jet1 {
  CycloNum c0;
  std::map<long, CycloNum> c1;

  friend Jet1 operator+(const Jet1& a, const Jet1& b) {
    Jet1 r;
    r.c0 = a.c0 + b.c0;
    r.c1 = a.c1;
    for (const auto& [j, v] : b.c1) {
      auto it = r.c1.find(j);
      if (it == r.c1.end())
        r.c1.emplace(j, v);
      else
        it->second = it->second + v;
    }
    return r;
  }

  friend Jet1 operator*(const Jet1& a, const Rat& q) {
    Jet1 r;
    r.c0 = a.c0 * q;
    for (const auto& [j, v] : a.c1) r.c1.emplace(j, v * q);
    return r;
  }

  friend Jet1 operator*(const Jet1& a, const Jet1& b) {
    Jet1 r;
    r.c0 = a.c0 * b.c0;
    for (const auto& [j, v] : a.c1) r.c1.emplace(j, v * b.c0);
    for (const auto& [j, v] : b.c1) {
      auto it = r.c1.find(j);
      if (it == r.c1.end())
        r.c1.emplace(j, v * a.c0);
      else
        it->second = it->second + v * a.c0;
    }
    return r;
  }
};

// Hodge eigenbundle signatures: for q = zeta^s with im(q) > 0,
// V(q, qbar)^{n_s} splits as V(q)^{a_s} + V(qbar)^{b_s}.
struct SigEntry {
  long s = 0;
  long a = 0;
  long b = 0;
};

struct EigenSignature {
  long m = 1;
  std::vector<SigEntry> entries;  // 1 <= s < m/2, ascending
};

// Class expression over the symbol basis {sigma, eta_j}.
struct CohomExpr {
  Rat sigma;
  std::map<long, Rat> eta;
};

// The degree-1 linear system J x = K (sigma, eta...)^T with d = floor(m/2):
// J is (d+1)x(d+1) over Q(zeta_m), K is (d+1)x(n+1).
struct IndexSystem {
  ActionData action;
  long m = 1;
  long d = 0;
  std::vector<long> eta_index;  // active merged eta indices, ascending
  CycloMat J;
  CycloMat K;
};

struct SolvedClasses {
  long m = 1;
  std::vector<long> eta_index;
  CycloMat exact;                   // (d+1) x (n+1), exact solution J^{-1} K
  bool all_rational = true;
  std::vector<CohomExpr> classes;   // filled iff all_rational
};

// First two jet coefficients of coth((x + i r theta_j)/2) at x = 0:
// c0 = -i cot(r theta_j / 2), c1 = csc^2(r theta_j / 2) / 2, theta_j = 2 pi j / m.
inline Jet1 coth_jet(long j, long r, long m) {
  const long k = ((j * r) % m + m) % m;
  require(k != 0, errc::pole, "coth jet pole at j r = 0 mod m");
  Jet1 jet;
  jet.c0 = icot_half(k, m);
  jet.c1.emplace(j, csc2_half(k, m) * Rat(1, 2));
  return jet;
}

// Right-hand side of the index formula for power r, truncated to degree <= 1.
// Each of the |Z_j| points contributes the same linear coefficient to
// eps_j = sum_{z in Z_j} e_z, so the eps_j coefficient stays csc^2/2 while
// the constant term picks up the factor |Z_j|.
inline Jet1 rhs_jet(const ActionData& a, long r) {
  require(r >= 1 && r <= a.m - 1, errc::invalid_input, "power r out of range");
  Jet1 acc;
  acc.c0 = CycloNum::zero(a.m);
  for (const auto& [j, count] : a.fixed_counts) {
    const Jet1 term = coth_jet(j, r, a.m);
    acc.c0 = acc.c0 + term.c0 * Rat(count);
    acc.c1.emplace(j, term.c1.at(j));
  }
  return acc;
}

// Degree-0 solve: recovers D_s = a_s - b_s by exact inverse DFT of
// RHS0(r) = sum_j |Z_j| * (-i cot(pi r j / m)), then splits n_s = a_s + b_s.
inline EigenSignature solve_deg0(const ActionData& act, const IsotypicDecomp& n) {
  const long m = act.m;
  require(n.m == m, errc::inconsistent_inputs, "isotypic decomposition has wrong conductor");
  std::vector<CycloNum> rhs(static_cast<std::size_t>(m), CycloNum::zero(m));
  for (long r = 1; r < m; ++r) {
    CycloNum acc = CycloNum::zero(m);
    for (const auto& [j, count] : act.fixed_counts)
      acc = acc + icot_half(((j * r) % m), m) * Rat(count);
    rhs[static_cast<std::size_t>(r)] = acc;
  }
  std::vector<CycloNum> pw;
  pw.reserve(static_cast<std::size_t>(m));
  for (long e = 0; e < m; ++e) pw.push_back(CycloNum::root(m, e));
  std::vector<long> D(static_cast<std::size_t>(m), 0);
  for (long s = 0; s < m; ++s) {
    CycloNum acc = CycloNum::zero(m);
    for (long r = 1; r < m; ++r)
      acc = acc + rhs[static_cast<std::size_t>(r)] * pw[static_cast<std::size_t>(((m - s) * r) % m)];
    acc = acc * Rat(1, m);
    const auto q = acc.as_rational();
    require(q.has_value() && is_integer(*q), errc::inconsistent_fixed_data,
            "D_s not an integer at s = " + std::to_string(s));
    D[static_cast<std::size_t>(s)] = static_cast<long>(boost::multiprecision::numerator(*q));
  }
  require(D[0] == 0, errc::inconsistent_fixed_data, "D_0 != 0");
  if (m % 2 == 0)
    require(D[static_cast<std::size_t>(m / 2)] == 0, errc::inconsistent_fixed_data, "D_{m/2} != 0");
  for (long s = 1; s < m; ++s)
    require(D[static_cast<std::size_t>(s)] == -D[static_cast<std::size_t>(m - s)],
            errc::inconsistent_fixed_data, "D_{m-s} != -D_s at s = " + std::to_string(s));
  EigenSignature sig;
  sig.m = m;
  for (long s = 1; 2 * s < m; ++s) {
    const long ns = n.n[static_cast<std::size_t>(s)];
    const long Ds = D[static_cast<std::size_t>(s)];
    require((ns + Ds) % 2 == 0, errc::inconsistent_fixed_data,
            "n_s + D_s odd at s = " + std::to_string(s));
    const long a = (ns + Ds) / 2, b = (ns - Ds) / 2;
    require(a >= 0 && b >= 0, errc::inconsistent_fixed_data,
            "negative signature at s = " + std::to_string(s));
    sig.entries.push_back({s, a, b});
  }
  return sig;
}

// Root-counting shortcut for Morita-type data ({1: m}): a_s = h + #(m-th roots
// of unity strictly above the line through 1 and zeta^s). For im(q) > 0 the
// side away from the origin is the open arc between 1 and q, so the count is
// the number of k with 0 < k < s.
inline long mcmullen_count(const ActionData& a, long s) {
  require(a.fixed_counts.size() == 1 && a.fixed_counts.count(1) == 1 &&
              a.fixed_counts.at(1) == a.m,
          errc::unsupported_parameter, "mcmullen count needs Morita-type data {1: m}");
  require(s >= 1 && 2 * s < a.m, errc::invalid_input, "s must satisfy 1 <= s < m/2");
  long above = 0;
  for (long k = 1; k < a.m; ++k)
    if (k > 0 && k < s) ++above;
  return a.h + above;
}

namespace detail {

// Row r of the J matrix: 1 at s = 0, (-1)^r at s = m/2, zeta^{sr} + zeta^{-sr}
// otherwise. Row 0 is the all-ones row of the untwisted index identity.
inline std::vector<CycloNum> j_row(long m, long r) {
  const long d = m / 2;
  std::vector<CycloNum> row;
  row.reserve(static_cast<std::size_t>(d + 1));
  for (long s = 0; s <= d; ++s) {
    if (r == 0 || s == 0)
      row.push_back(CycloNum::one(m));
    else if (2 * s == m)
      row.push_back(r % 2 == 0 ? CycloNum::one(m) : -CycloNum::one(m));
    else
      row.push_back(CycloNum::root(m, (s * r) % m) + CycloNum::root(m, ((m - s) * r) % m));
  }
  return row;
}

inline std::vector<CycloNum> k_row(long m, long r, const std::vector<long>& eta_index) {
  std::vector<CycloNum> row(eta_index.size() + 1, CycloNum::zero(m));
  if (r == 0) {
    row[0] = CycloNum::from_rational(m, Rat(1, 4));
  } else {
    for (std::size_t t = 0; t < eta_index.size(); ++t)
      row[t + 1] = csc2_half((r * eta_index[t]) % m, m) * Rat(1, 4);
  }
  return row;
}

}  // namespace detail

// Active merged eta indices: {j : 1 <= j <= m/2, Z_j or Z_{m-j} nonempty},
// with eta_j = eps_j + eps_{m-j} (a single eps when j = m - j, i.e. m = 2).
inline std::vector<long> eta_indices(const ActionData& a) {
  std::vector<long> out;
  for (long j = 1; 2 * j <= a.m; ++j)
    if (a.fixed_counts.count(j) || a.fixed_counts.count(a.m - j)) out.push_back(j);
  return out;
}

inline IndexSystem build_system(const ActionData& a) {
  IndexSystem sys;
  sys.action = a;
  sys.m = a.m;
  sys.d = a.m / 2;
  sys.eta_index = eta_indices(a);
  for (long r = 0; r <= sys.d; ++r) {
    sys.J.push_back(detail::j_row(a.m, r));
    sys.K.push_back(detail::k_row(a.m, r, sys.eta_index));
  }
  return sys;
}

// Exact solve x = J^{-1} K over Q(zeta_m), then verification of the redundant
// rows r = d+1..m-1 of the original system. Coefficients are demoted to Rat
// only when exactly rational; otherwise the exact values stay and the result
// is flagged. The report labels satisfy c1(E_q) = x_q = c1(E_qbar).
inline SolvedClasses solve_deg1(const IndexSystem& sys) {
  SolvedClasses out;
  out.m = sys.m;
  out.eta_index = sys.eta_index;
  out.exact = linalg::solve(sys.J, sys.K);
  for (long r = sys.d + 1; r < sys.m; ++r) {
    const auto jr = detail::j_row(sys.m, r);
    const auto kr = detail::k_row(sys.m, r, sys.eta_index);
    for (std::size_t t = 0; t < kr.size(); ++t) {
      CycloNum acc = CycloNum::zero(sys.m);
      for (std::size_t s = 0; s < jr.size(); ++s) acc = acc + jr[s] * out.exact[s][t];
      require(acc == kr[t], errc::internal_error,
              "redundant row r = " + std::to_string(r) + " not satisfied");
    }
  }
  for (const auto& row : out.exact)
    for (const auto& v : row)
      if (!v.is_rational()) out.all_rational = false;
  if (out.all_rational) {
    for (std::size_t s = 0; s < out.exact.size(); ++s) {
      CohomExpr e;
      e.sigma = *out.exact[s][0].as_rational();
      for (std::size_t t = 0; t < out.eta_index.size(); ++t)
        e.eta[out.eta_index[t]] = *out.exact[s][t + 1].as_rational();
      out.classes.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace eqindex
