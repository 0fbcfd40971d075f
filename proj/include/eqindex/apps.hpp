#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "eqindex/arithgroup.hpp"
#include "eqindex/indexcore.hpp"

namespace eqindex {

// User/construction-supplied geometric numbers for one fibering of a
// 4-manifold: the signature of the total space and the evaluated eta classes.
struct BundleNumerics {
  ActionData action;
  long base_genus = 0;
  Rat sigma;
  std::map<long, Rat> eta;
};

// ----- Hirzebruch's branched-cover signature formula (m = 2) -----

struct HirzebruchCase {
  long h = 0;
  bool identity = false;  // 4 x_1 == (sigma + eta_1)/2 exactly
};

struct HirzebruchReport {
  std::vector<HirzebruchCase> cases;   // h = 3..8
  bool free_case = false;              // free action: sigma(M) = 2 sigma(M/G)
  bool all_hold = false;
  // Rearranged form: sigma(M) = 2 sigma(M/G) - sigma(M0.M0), with
  // sigma(M/G) = (sigma + eta)/2 and sigma(M0.M0) = eta.
  std::string rearranged = "sigma(M) = 2*sigma(M/G) - sigma(M0.M0)";
};

inline HirzebruchReport hirzebruch_class_formula() {
  HirzebruchReport rep;
  rep.all_hold = true;
  for (long h = 3; h <= 8; ++h) {
    const auto solved = solve_deg1(build_system(new_action(2, h, {{1, 2}})));
    HirzebruchCase c;
    c.h = h;
    // 4 c1(E_1) = (sigma + eta)/2 and 4 c1(E_-1) = (sigma - eta)/2.
    c.identity = solved.all_rational && solved.classes[0].sigma == Rat(1, 8) &&
                 solved.classes[0].eta.at(1) == Rat(1, 8) &&
                 solved.classes[1].sigma == Rat(1, 8) &&
                 solved.classes[1].eta.at(1) == Rat(-1, 8);
    rep.all_hold = rep.all_hold && c.identity;
    rep.cases.push_back(c);
  }
  const auto free_solved = solve_deg1(build_system(new_action(2, 3, {})));
  rep.free_case = free_solved.all_rational && free_solved.classes[0].sigma == Rat(1, 8) &&
                  free_solved.classes[1].sigma == Rat(1, 8) &&
                  free_solved.classes[0].eta.empty();
  rep.all_hold = rep.all_hold && rep.free_case;
  return rep;
}

// ----- Toledo invariants of the Z/7 Atiyah-Kodaira representations -----

struct ToledoEntry {
  long factor = 0;  // alpha_i, ordered SU(h,h+5), SU(h+1,h+4), SU(h+2,h+3)
  long s = 0;       // eigenvalue index q = zeta^s
  long a = 0;
  long b = 0;
  Rat coefficient;  // tau(alpha_i) as a multiple of sigma
};

struct ToledoReport {
  long h = 0;
  long j0 = 0;
  Rat fitted_lambda;  // eta/sigma ratio of the construction
  std::vector<ToledoEntry> entries;
  bool consistent = false;
  Rat sp_coefficient;  // x_1 coefficient with eta = lambda sigma substituted
};

namespace detail {

inline std::optional<ToledoReport> try_toledo(long h, long j0) {
  const ActionData act = new_action(7, h, {{j0, 7}});
  const auto n = complex_multiplicities(character_h1(act));
  const auto sig = solve_deg0(act, n);
  const auto solved = solve_deg1(build_system(act));
  if (!solved.all_rational) return std::nullopt;
  const long jm = std::min(j0, 7 - j0);

  // alpha_i corresponds to the factor SU(h+i-1, h+6-i); the rotation class
  // only swaps which of E_q, E_qbar carries the positive part, so factors are
  // matched by the unordered pair {a, b}. The targets are the Toledo
  // coefficients 3/112, 5/112, 6/112 of sigma. Each SU(a_q, b_q) factor
  // carries half of the eigenbundle pair E_q + E_qbar, whose total first
  // Chern coefficient is 2 x_q, so tau(alpha_i) = x_{q_i}/2 with
  // eta = lambda sigma substituted. lambda is fitted on alpha_1 and the
  // other two coefficients must then match exactly.
  const Rat targets[3] = {Rat(3, 112), Rat(5, 112), Rat(6, 112)};
  std::vector<SigEntry> order(sig.entries);
  std::sort(order.begin(), order.end(), [](const SigEntry& x, const SigEntry& y) {
    return std::min(x.a, x.b) < std::min(y.a, y.b);
  });
  if (order.size() != 3) return std::nullopt;
  for (long i = 0; i < 3; ++i)
    if (std::min(order[static_cast<std::size_t>(i)].a, order[static_cast<std::size_t>(i)].b) !=
        h + i)
      return std::nullopt;

  const auto coeff = [&](long s, const Rat& lambda) {
    const auto& cls = solved.classes[static_cast<std::size_t>(s)];
    return Rat((cls.sigma + cls.eta.at(jm) * lambda) / 2);
  };
  const auto& first = solved.classes[static_cast<std::size_t>(order[0].s)];
  const Rat b1 = first.eta.at(jm);
  if (b1 == 0) return std::nullopt;
  const Rat lambda = (targets[0] * 2 - first.sigma) / b1;
  for (long i = 0; i < 3; ++i)
    if (coeff(order[static_cast<std::size_t>(i)].s, lambda) != targets[i]) return std::nullopt;

  ToledoReport rep;
  rep.h = h;
  rep.j0 = j0;
  rep.fitted_lambda = lambda;
  rep.consistent = true;
  for (long i = 0; i < 3; ++i) {
    const auto& e = order[static_cast<std::size_t>(i)];
    rep.entries.push_back({i + 1, e.s, e.a, e.b, coeff(e.s, lambda)});
  }
  rep.sp_coefficient = solved.classes[0].sigma + solved.classes[0].eta.at(jm) * lambda;
  // sigma/4 row: the four x_s coefficients sum to 1/4 for any lambda.
  Rat sum = rep.sp_coefficient;
  for (const auto& e : rep.entries) sum += e.coefficient * 2;
  require(sum == Rat(1, 4), errc::internal_error, "sigma/4 row violated in toledo fit");
  return rep;
}

inline std::string solved_table_dump(long h, long j0) {
  const ActionData act = new_action(7, h, {{j0, 7}});
  const auto solved = solve_deg1(build_system(act));
  std::ostringstream os;
  os << "j0=" << j0 << ":";
  for (std::size_t s = 0; s < solved.classes.size(); ++s)
    os << " x_" << s << " = " << rat_str(solved.classes[s].sigma) << "*sigma + "
       << rat_str(solved.classes[s].eta.begin()->second) << "*eta";
  return os.str();
}

}  // namespace detail

// Fit-one/verify-two protocol: impose eta = lambda sigma, fit lambda to the
// first factor's coefficient 3/112, and require the remaining two to equal
// 5/112 and 6/112 exactly. Scans all j0 coprime to 7 when the default fails.
inline ToledoReport toledo_ak7(long h, std::optional<long> j0 = std::nullopt) {
  require(h >= 2, errc::unsupported_parameter, "toledo construction needs h >= 2");
  std::vector<long> candidates;
  if (j0) {
    require(*j0 >= 1 && *j0 <= 6, errc::invalid_rotation_class, "j0 must lie in 1..6");
    candidates.push_back(*j0);
  } else {
    for (long c = 1; c <= 6; ++c) candidates.push_back(c);
  }
  for (long cand : candidates) {
    auto rep = detail::try_toledo(h, cand);
    if (rep) return *rep;
  }
  std::string diag = "no (j0, lambda) reproduces {3/112, 5/112, 6/112};";
  for (long cand : candidates) diag += " " + detail::solved_table_dump(h, cand) + ";";
  fail(errc::convention_mismatch, diag);
}

// ----- G-cobordism characteristic-number comparison -----

struct CobordismRow {
  long s = 0;
  std::string q;
  Rat value1;
  Rat value2;
  bool equal = false;
};

struct CobordismReport {
  std::vector<CobordismRow> rows;
  bool all_equal = false;
};

namespace detail {

inline std::vector<Rat> evaluate_classes(const BundleNumerics& f) {
  const auto solved = solve_deg1(build_system(f.action));
  require(solved.all_rational, errc::internal_error, "non-rational solved classes");
  std::vector<Rat> values;
  for (const auto& cls : solved.classes) {
    Rat v = cls.sigma * f.sigma;
    for (const auto& [j, coeff] : cls.eta) {
      const auto it = f.eta.find(j);
      require(it != f.eta.end(), errc::incomplete_input,
              "missing eta value for merged class " + std::to_string(j));
      v += coeff * it->second;
    }
    values.push_back(v);
  }
  return values;
}

}  // namespace detail

// Per-q characteristic numbers <c1(E_q), [base]> = A_q sigma + sum_j B_qj eta_j
// for two fiberings; these are G-cobordism invariants, so cobordant total
// spaces must produce equal rows.
inline CobordismReport cobordism_compare(const BundleNumerics& f1, const BundleNumerics& f2) {
  require(f1.action.m == f2.action.m, errc::invalid_input,
          "cannot compare fiberings with different group orders");
  const auto v1 = detail::evaluate_classes(f1);
  const auto v2 = detail::evaluate_classes(f2);
  CobordismReport rep;
  rep.all_equal = true;
  for (long s = 0; s < static_cast<long>(v1.size()); ++s) {
    CobordismRow row;
    row.s = s;
    row.q = q_label(f1.action.m, s);
    row.value1 = v1[static_cast<std::size_t>(s)];
    row.value2 = v2[static_cast<std::size_t>(s)];
    row.equal = row.value1 == row.value2;
    rep.all_equal = rep.all_equal && row.equal;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

// ----- Complex ranks of the Hodge eigenbundles -----

struct EigenrankReport {
  long m = 0;
  long genus = 0;
  long h = 0;                    // rank E_1
  std::optional<long> h_middle;  // rank E_-1 when m is even
  std::vector<SigEntry> su;      // (s, rank E_{zeta^s}, rank E_{zeta^{-s}})
};

inline EigenrankReport eigenrank_report(const ActionData& act) {
  const auto n = complex_multiplicities(character_h1(act));
  const auto sig = solve_deg0(act, n);
  EigenrankReport rep;
  rep.m = act.m;
  rep.genus = act.genus;
  rep.h = act.h;
  if (act.m % 2 == 0) {
    const long mid = n.n[static_cast<std::size_t>(act.m / 2)];
    require(mid % 2 == 0, errc::inconsistent_data, "n[m/2] must be even");
    rep.h_middle = mid / 2;
  }
  rep.su = sig.entries;
  return rep;
}

}  // namespace eqindex
