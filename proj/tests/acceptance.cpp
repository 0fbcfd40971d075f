// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.
#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "eqindex/cli.hpp"
#include "eqindex/verify.hpp"

using namespace eqindex;

namespace {

int failures = 0;

void report(int idx, bool pass, const std::string& what) {
  std::cout << "[" << idx << "/10] " << (pass ? "PASS " : "FAIL ") << what << std::endl;
  if (!pass) ++failures;
}

// 1. Morita factor lists: Sp_{2h} x prod SU(h+i, h+m-2-i), the middle Sp
// factor handled separately for even m.
bool criterion_factor_lists(std::string& detail) {
  long cases = 0;
  for (long m = 3; m <= 12; ++m)
    for (long h = 0; h <= 4; ++h) {
      const auto a = morita_example(m, h);
      const auto n = complex_multiplicities(character_h1(a));
      const auto f = factor_list(a, n, solve_deg0(a, n));
      if (f.h != h) return false;
      if (m % 2 == 0) {
        if (!f.h_prime || *f.h_prime != h + (m - 2) / 2) return false;
      } else if (f.h_prime) {
        return false;
      }
      const long count = (m - 1) / 2;
      if (static_cast<long>(f.su.size()) != count) return false;
      for (long i = 0; i < count; ++i) {
        const auto& su = f.su[static_cast<std::size_t>(i)];
        if (su.a != h + i || su.b != h + m - 2 - i) return false;
      }
      ++cases;
    }
  detail = std::to_string(cases) + " (m, h) pairs";
  return true;
}

// 2. Chevalley-Weil isotypic dimensions.
bool criterion_chevalley_weil(std::string& detail) {
  long cases = 0;
  for (long m = 3; m <= 12; ++m)
    for (long h = 0; h <= 4; ++h) {
      const auto d = complex_multiplicities(character_h1(morita_example(m, h)));
      if (d.rational_dims.at(1) != 2 * h) return false;
      for (long k = 2; k <= m; ++k) {
        if (m % k != 0) continue;
        if (d.rational_dims.at(k) != 2 * h + m - 2) return false;
      }
      ++cases;
    }
  for (long h = 2; h <= 4; ++h) {
    const auto d = complex_multiplicities(character_h1(ak7_example(h).base_action));
    if (d.rational_dims != std::map<long, long>{{1, 2 * h}, {7, 2 * h + 5}}) return false;
    ++cases;
  }
  detail = std::to_string(cases) + " decompositions";
  return true;
}

// 3. Hirzebruch: c1(E_1) = (sigma+eta)/8, c1(E_-1) = (sigma-eta)/8, hence
// phi*(sigma-bar) = 4 x_1 = (sigma + e)/2, independent of h in 3..8.
bool criterion_hirzebruch(std::string& detail) {
  const auto rep = hirzebruch_class_formula();
  detail = "h = 3..8 and the free degenerate case";
  return rep.all_hold;
}

// 4. Toledo fit-one/verify-two.
bool criterion_toledo(std::string& detail) {
  try {
    const auto rep = toledo_ak7(2);
    const bool ok = rep.consistent && rep.entries[0].coefficient == Rat(3, 112) &&
                    rep.entries[1].coefficient == Rat(5, 112) &&
                    rep.entries[2].coefficient == Rat(6, 112);
    detail = "j0 = " + std::to_string(rep.j0) + ", lambda = " + rat_str(rep.fitted_lambda);
    return ok;
  } catch (const Error& e) {
    detail = e.what();  // convention detector: carries the full solved table
    return false;
  }
}

// 5. Rank certificates: det J for m <= 60, csc basis for m <= 40, rank K
// across the deduped monodromy-valid sweep m <= 30, |Z| <= 8.
bool criterion_rank_certificates(std::string& detail) {
  const auto det_j = check_det_j(60);
  const auto certs = check_certificates(40);
  const auto rank = check_rank_k(30, 8);
  std::ostringstream os;
  os << "det J: " << det_j.cases << " conductors; csc dets: " << certs.cases
     << " (primes, prime powers, 2-powers, composites 15/21/24); rank K subsets: " << rank.cases
     << " (" << rank.detail << ")";
  detail = os.str();
  return det_j.pass && certs.pass && rank.pass;
}

// 6. Exact degree-0/degree-1 residuals on 500 randomized valid configurations.
bool criterion_residuals(std::string& detail) {
  const auto r = check_residuals(500, 24);
  detail = std::to_string(r.cases) + " residual rows" + (r.pass ? "" : ": " + r.detail);
  return r.pass;
}

// 7. The two Atiyah-Kodaira fiberings reproduce the eigenbundle ranks.
bool criterion_eigenranks(std::string& detail) {
  const auto ak2 = ak2_standard();
  const auto r1 = eigenrank_report(ak2.fibering1.action);
  const auto r2 = eigenrank_report(ak2.fibering2.action);
  detail = "(3,3) over S_129 and (104,217) over S_3";
  return r1.h == 3 && r1.h_middle && *r1.h_middle == 3 && r2.h == 104 && r2.h_middle &&
         *r2.h_middle == 217;
}

// 8. Numeric cross-checks of exact trig constants and circulant eigenvalues.
bool criterion_numeric(std::string& detail) {
  const auto trig = check_numeric_trig(24);
  const auto circ = check_circulant_numeric(24);
  detail = std::to_string(trig.cases + circ.cases) + " comparisons within 1e-8";
  return trig.pass && circ.pass;
}

// 9. Jet coefficients against central finite differences.
bool criterion_jets(std::string& detail) {
  const auto r = check_jet_fd(50);
  detail = "50 random (j, r, m) with step 1e-4";
  return r.pass;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();

  const auto run = [](int idx, bool (*fn)(std::string&), const std::string& label) {
    std::string detail;
    const bool ok = fn(detail);
    report(idx, ok, label + ": " + detail);
  };
  run(1, criterion_factor_lists, "Morita factor lists");
  run(2, criterion_chevalley_weil, "Chevalley-Weil decompositions");
  run(3, criterion_hirzebruch, "Hirzebruch signature formula");
  run(4, criterion_toledo, "Toledo invariants {3/112, 5/112, 6/112}");
  run(5, criterion_rank_certificates, "rank certificates");
  run(6, criterion_residuals, "degree-0/1 residuals");
  run(7, criterion_eigenranks, "Atiyah-Kodaira eigenbundle ranks");
  run(8, criterion_numeric, "numeric cross-checks");
  run(9, criterion_jets, "jet expansion finite differences");

  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream os;
  os << "criteria 1-9 completed in " << dt << "s (< 60s)";
  report(10, dt < 60.0, os.str());

  if (failures > 0) {
    std::cout << failures << " criteria failed" << std::endl;
    return 1;
  }
  std::cout << "all acceptance criteria passed" << std::endl;
  return 0;
}
