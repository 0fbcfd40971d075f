#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqindex/indexcore.hpp"

namespace eqindex {

// The real Lie factors of Sp^G: Sp_{2h}(R) always, Sp_{2h'}(R) with
// 2h' = n[m/2] when m is even, and SU(a_s, b_s) for each 1 <= s < m/2.
struct SuFactor {
  long s = 0;
  long a = 0;
  long b = 0;

  std::string label() const { return "SU(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

struct FactorList {
  long m = 0;
  long genus = 0;
  long h = 0;
  std::optional<long> h_prime;  // present iff m is even
  std::vector<SuFactor> su;
  std::vector<std::string> field_labels;  // "Q(zeta_k + zeta_k^-1)" for k | m, k > 2

  std::string label() const {
    std::string out = "Sp_" + std::to_string(2 * h) + "(R)";
    if (h_prime) out += " x Sp_" + std::to_string(2 * *h_prime) + "(R)";
    for (const auto& f : su) out += " x " + f.label();
    return out;
  }
};

inline FactorList factor_list(const ActionData& act, const IsotypicDecomp& n,
                              const EigenSignature& sig) {
  require(n.m == act.m && sig.m == act.m, errc::inconsistent_inputs,
          "conductor mismatch between inputs");
  FactorList f;
  f.m = act.m;
  f.genus = act.genus;
  require(n.n[0] % 2 == 0, errc::inconsistent_inputs, "n[0] must be even");
  f.h = n.n[0] / 2;
  require(f.h == act.h, errc::inconsistent_inputs, "invariant multiplicity disagrees with quotient genus");
  long dim = 2 * f.h;
  if (act.m % 2 == 0) {
    const long mid = n.n[static_cast<std::size_t>(act.m / 2)];
    require(mid % 2 == 0, errc::inconsistent_inputs, "n[m/2] must be even");
    f.h_prime = mid / 2;
    dim += mid;
  }
  for (const auto& e : sig.entries) {
    require(e.a + e.b == n.n[static_cast<std::size_t>(e.s)], errc::inconsistent_inputs,
            "a_s + b_s != n_s at s = " + std::to_string(e.s));
    f.su.push_back({e.s, e.a, e.b});
    dim += 2 * (e.a + e.b);
  }
  require(dim == 2 * act.genus, errc::inconsistent_inputs,
          "factor dimensions do not sum to 2g");
  for (long k = 3; k <= act.m; ++k)
    if (act.m % k == 0) f.field_labels.push_back("Q(zeta_" + std::to_string(k) + " + zeta_" +
                                                 std::to_string(k) + "^-1)");
  return f;
}

// Stable-range bookkeeping. The F-rank of every Hermitian factor is bounded
// below by h-1 (isotropic subspaces lifted from the quotient), giving the
// Borel range floor((h-2)/2); degree-2 validity additionally needs the
// h, h' >= 3 and a, b >= 1 hypotheses.
struct StableRangeReport {
  long f_rank_lower = 0;
  long borel_bound = 0;
  bool h_ge3 = false;
  std::optional<bool> hp_ge3;
  bool ab_ge1 = false;
  bool degree2_valid = false;
};

inline StableRangeReport stable_range(const ActionData& act, const FactorList& f) {
  StableRangeReport r;
  r.f_rank_lower = f.h - 1;
  r.borel_bound = floor_div(r.f_rank_lower - 1, 2);
  r.h_ge3 = f.h >= 3;
  if (f.h_prime) r.hp_ge3 = *f.h_prime >= 3;
  r.ab_ge1 = true;
  for (const auto& su : f.su)
    if (su.a < 1 || su.b < 1) r.ab_ge1 = false;
  r.degree2_valid =
      r.borel_bound >= 2 && r.h_ge3 && (!r.hp_ge3 || *r.hp_ge3) && r.ab_ge1;
  (void)act;
  return r;
}

// H^2(Sp^G; Q) basis {x_q : q^m = 1, im(q) >= 0}, each symbol tagged with the
// factor it pulls back from. Carries a caveat when the stable range does not
// cover degree 2.
struct H2Symbol {
  long s = 0;
  std::string name;
  std::string source;
};

struct H2Basis {
  std::vector<H2Symbol> symbols;
  bool caveat = false;  // true when degree-2 validity is not established
};

inline H2Basis h2_basis(const FactorList& f, const StableRangeReport& sr) {
  H2Basis basis;
  basis.caveat = !sr.degree2_valid;
  const long d = f.m / 2;
  for (long s = 0; s <= d; ++s) {
    H2Symbol sym;
    sym.s = s;
    if (s == 0) {
      sym.name = "x_1";
      sym.source = "Sp_" + std::to_string(2 * f.h) + "(R)";
    } else if (2 * s == f.m) {
      sym.name = "x_-1";
      sym.source = "Sp_" + std::to_string(2 * f.h_prime.value_or(0)) + "(R)";
    } else {
      sym.name = "x_zeta^" + std::to_string(s);
      std::string src = "SU(?)";
      for (const auto& su : f.su)
        if (su.s == s) src = su.label();
      sym.source = src;
    }
    basis.symbols.push_back(std::move(sym));
  }
  return basis;
}

// The image of alpha* in degree 2: basis {sigma, eta_j...} together with the
// exact change-of-basis matrix J^{-1}K and the identification x_q = c1(E_q).
struct ImageBasis {
  std::vector<std::string> basis;
  std::vector<std::vector<Rat>> matrix;  // (d+1) x (n+1); empty if not all rational
  bool all_rational = true;
  std::vector<std::pair<std::string, std::string>> identification;  // x_q -> c1(E_q)
};

inline std::string q_label(long m, long s) {
  if (s == 0) return "1";
  if (2 * s == m) return "-1";
  return "zeta^" + std::to_string(s);
}

inline ImageBasis image_basis(const SolvedClasses& solved) {
  ImageBasis img;
  img.basis.push_back("sigma");
  for (long j : solved.eta_index) img.basis.push_back("eta_" + std::to_string(j));
  img.all_rational = solved.all_rational;
  if (solved.all_rational) {
    for (const auto& cls : solved.classes) {
      std::vector<Rat> row;
      row.push_back(cls.sigma);
      for (long j : solved.eta_index) row.push_back(cls.eta.at(j));
      img.matrix.push_back(std::move(row));
    }
  }
  for (long s = 0; s < static_cast<long>(solved.exact.size()); ++s)
    img.identification.emplace_back("x_" + q_label(solved.m, s),
                                    "c1(E_" + q_label(solved.m, s) + ")");
  return img;
}

}  // namespace eqindex
