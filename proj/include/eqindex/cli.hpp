#pragma once

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "eqindex/report.hpp"
#include "eqindex/verify.hpp"

namespace eqindex {
namespace cli {

inline std::string expr_str(const CohomExpr& e) {
  std::string s = rat_str(e.sigma) + " sigma";
  for (const auto& [j, c] : e.eta) {
    if (c >= 0)
      s += " + " + rat_str(c);
    else
      s += " - " + rat_str(Rat(-c));
    s += " eta_" + std::to_string(j);
  }
  return s;
}

inline std::string e_label(long m, long s) { return "E_" + q_label(m, s); }

struct AnalyzeResult {
  ActionData action;
  std::vector<std::string> warnings;
  CharacterVec character;
  IsotypicDecomp decomp;
  EigenSignature signature;
  FactorList factors;
  StableRangeReport stable;
  H2Basis h2;
  IndexSystem system;
  SolvedClasses solved;
  ImageBasis image;
  long rank_k = 0;
  std::optional<BasisCertificate> certificate;  // m >= 3 only
};

inline AnalyzeResult analyze(const ActionData& a) {
  AnalyzeResult res;
  res.action = a;
  res.warnings = validate_monodromy(a);
  res.character = character_h1(a);
  res.decomp = complex_multiplicities(res.character);
  res.signature = solve_deg0(a, res.decomp);
  res.factors = factor_list(a, res.decomp, res.signature);
  res.stable = stable_range(a, res.factors);
  res.h2 = h2_basis(res.factors, res.stable);
  res.system = build_system(a);
  res.solved = solve_deg1(res.system);
  res.image = image_basis(res.solved);
  res.rank_k = rank_K(res.system);
  if (a.m >= 3) res.certificate = certify_basis(a.m);
  return res;
}

inline Json analyze_to_json(const AnalyzeResult& r) {
  Json j;
  j["action"] = to_json(r.action);
  j["warnings"] = r.warnings;
  j["character"] = to_json(r.character);
  j["multiplicities"] = to_json(r.decomp);
  j["eigen_signatures"] = to_json(r.signature);
  j["factors"] = to_json(r.factors);
  j["stable_range"] = to_json(r.stable);
  j["h2_basis"] = to_json(r.h2);
  j["system"] = to_json(r.system);
  j["solved_classes"] = to_json(r.solved);
  j["image"] = to_json(r.image);
  Json cert;
  cert["rank_K"] = r.rank_k;
  if (r.certificate) {
    cert["m"] = r.certificate->m;
    cert["det_nonzero"] = r.certificate->det_nonzero;
    cert["method"] = r.certificate->method;
    cert["permutation"] = r.certificate->permutation;
  }
  j["certificates"] = cert;
  return j;
}

inline void print_analyze_table(const AnalyzeResult& r, std::ostream& out) {
  const auto& a = r.action;
  out << "action: m=" << a.m << " quotient_genus=" << a.h << " |Z|=" << a.total_fixed
      << " genus=" << a.genus << " (Riemann-Hurwitz)\n";
  out << "fixed_points:";
  if (a.fixed_counts.empty()) out << " (free action)";
  for (const auto& [j, c] : a.fixed_counts) out << " Z_" << j << "=" << c;
  out << "\n";
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  out << "character:";
  for (long v : r.character.values) out << " " << v;
  out << "\n";
  out << "multiplicities n:";
  for (long v : r.decomp.n) out << " " << v;
  out << "\n";
  out << "rational_isotypic:";
  for (const auto& [k, d] : r.decomp.rational_dims) {
    if (k == 1)
      out << " Q^" << d;
    else
      out << " Q(zeta_" << k << ")^" << d;
  }
  out << "\n";
  out << "eigen_signatures:";
  for (const auto& e : r.signature.entries)
    out << " s=" << e.s << ":(a,b)=(" << e.a << "," << e.b << ")";
  out << "\n";
  out << "factors: " << r.factors.label() << "\n";
  out << "su_factors:";
  for (const auto& f : r.factors.su) out << " " << f.label();
  out << "\n";
  out << "fields:";
  for (const auto& f : r.factors.field_labels) out << " " << f;
  out << "\n";
  out << "stable_range: f_rank_lower=" << r.stable.f_rank_lower
      << " borel_bound=" << r.stable.borel_bound
      << " degree2_valid=" << (r.stable.degree2_valid ? "true" : "false") << "\n";
  out << "h2_basis:";
  for (const auto& s : r.h2.symbols) out << " " << s.name << "[" << s.source << "]";
  if (r.h2.caveat) out << " (caveat: outside established stable range)";
  out << "\n";
  out << "system: d=" << r.system.d << " eta_index:";
  for (long j : r.system.eta_index) out << " " << j;
  out << "\n";
  if (r.solved.all_rational) {
    for (long s = 0; s < static_cast<long>(r.solved.classes.size()); ++s)
      out << "c1(" << e_label(a.m, s)
          << ") = " << expr_str(r.solved.classes[static_cast<std::size_t>(s)]) << "\n";
  } else {
    out << "solved classes are not all rational; see JSON output for exact values\n";
  }
  out << "image_basis:";
  for (const auto& b : r.image.basis) out << " " << b;
  out << "\n";
  out << "rank_K = " << r.rank_k;
  if (r.certificate)
    out << ", csc basis det nonzero = " << (r.certificate->det_nonzero ? "true" : "false");
  out << "\n";
}

inline void emit(const Json& j, const std::string& format,
                 const std::function<void(std::ostream&)>& table, std::ostream& out) {
  if (format == "json")
    out << j.dump(2) << "\n";
  else
    table(out);
}

inline Json load_json(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::invalid_input, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::invalid_input, "malformed JSON in '" + path + "': " + e.what());
  }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact G-index computations for cyclic actions on surfaces"};
  app.require_subcommand(1);
  std::string format = "table";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json"}));

  std::string spec_path;
  auto* analyze_cmd = app.add_subcommand("analyze", "run the full pipeline on a JSON action spec");
  analyze_cmd->add_option("spec", spec_path, "action spec JSON file")->required();

  std::string example_name;
  long ex_m = 5, ex_h = 1, ex_j0 = 1;
  auto* example_cmd = app.add_subcommand("example", "run a named example");
  example_cmd->set_help_flag("--help", "print help");
  example_cmd->add_option("name", example_name, "morita|ak7|ak2")->required();
  example_cmd->add_option("--m", ex_m, "group order (morita)");
  example_cmd->add_option("--h", ex_h, "quotient genus");
  example_cmd->add_option("--j0", ex_j0, "rotation class (ak7)");

  VerifyBounds bounds;
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant sweeps");
  verify_cmd->add_option("--max-m", bounds.max_m, "max group order");
  verify_cmd->add_option("--max-z", bounds.max_z, "max total fixed points");
  verify_cmd->add_option("--max-h", bounds.max_h, "max quotient genus");
  verify_cmd->add_flag("--inject-fault", bounds.inject_fault,
                       "force one failing check (harness self-test)");

  long toledo_h = 2;
  long toledo_j0 = -1;
  auto* toledo_cmd = app.add_subcommand("toledo", "Toledo invariants of the Z/7 construction");
  toledo_cmd->set_help_flag("--help", "print help");
  toledo_cmd->add_option("--h", toledo_h, "quotient genus")->required();
  toledo_cmd->add_option("--j0", toledo_j0, "rotation class; scans all when omitted");

  std::string cob_path1, cob_path2;
  auto* cob_cmd = app.add_subcommand("cobordism", "compare characteristic numbers of two fiberings");
  cob_cmd->add_option("f1", cob_path1, "first fibering JSON")->required();
  cob_cmd->add_option("f2", cob_path2, "second fibering JSON")->required();

  std::vector<const char*> argv;
  argv.push_back("eqindex");
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*analyze_cmd) {
      const ActionData a = action_from_json(load_json(spec_path));
      const auto res = analyze(a);
      emit(analyze_to_json(res), format, [&](std::ostream& o) { print_analyze_table(res, o); }, out);
    } else if (*example_cmd) {
      if (example_name == "morita") {
        const auto res = analyze(morita_example(ex_m, ex_h));
        emit(analyze_to_json(res), format, [&](std::ostream& o) { print_analyze_table(res, o); },
             out);
      } else if (example_name == "ak7") {
        const AKData d = ak7_example(ex_h, ex_j0);
        const auto res = analyze(d.base_action);
        Json j;
        j["construction"] = "ak7";
        j["base_genus"] = d.base_genus.str();
        j["fiber_genus"] = d.fiber_genus;
        j["fiber_analysis"] = analyze_to_json(res);
        emit(j, format,
             [&](std::ostream& o) {
               o << "ak7 construction: base_genus=" << d.base_genus.str()
                 << " fiber_genus=" << d.fiber_genus << "\n";
               print_analyze_table(res, o);
             },
             out);
      } else if (example_name == "ak2") {
        const auto ak2 = ak2_standard();
        const auto r1 = eigenrank_report(ak2.fibering1.action);
        const auto r2 = eigenrank_report(ak2.fibering2.action);
        Json j;
        j["construction"] = "ak2";
        Json f1;
        f1["action"] = to_json(ak2.fibering1.action);
        f1["base_genus"] = ak2.fibering1.base_genus;
        f1["eigenranks"] = to_json(r1);
        Json f2;
        f2["action"] = to_json(ak2.fibering2.action);
        f2["base_genus"] = ak2.fibering2.base_genus;
        f2["eigenranks"] = to_json(r2);
        j["fibering1"] = f1;
        j["fibering2"] = f2;
        emit(j, format,
             [&](std::ostream& o) {
               o << "ak2 standard example (two fiberings of one 4-manifold)\n";
               o << "fibering1: fiber_genus=" << ak2.fibering1.action.genus
                 << " base_genus=" << ak2.fibering1.base_genus << " ranks(E_1,E_-1)=(" << r1.h
                 << "," << *r1.h_middle << ")\n";
               o << "fibering2: fiber_genus=" << ak2.fibering2.action.genus
                 << " base_genus=" << ak2.fibering2.base_genus << " ranks(E_1,E_-1)=(" << r2.h
                 << "," << *r2.h_middle << ")\n";
             },
             out);
      } else {
        fail(errc::invalid_input, "unknown example '" + example_name + "'");
      }
    } else if (*verify_cmd) {
      bounds.det_j_max_m = bounds.max_m;
      bounds.rank_max_m = bounds.max_m;
      bounds.cert_max_m = 2 * bounds.max_m;
      const auto t0 = std::chrono::steady_clock::now();
      const auto results = run_verify(bounds);
      long passed = 0, failed = 0, cases = 0;
      for (const auto& r : results) {
        out << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
        if (!r.detail.empty()) out << " " << r.detail;
        out << "\n";
        (r.pass ? passed : failed) += 1;
        cases += r.cases;
      }
      const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      out << "verify: " << passed << " checks passed, " << failed << " failed, " << cases
          << " cases in " << dt << "s\n";
      if (failed > 0) return 1;
    } else if (*toledo_cmd) {
      std::optional<long> j0;
      if (toledo_j0 >= 0) j0 = toledo_j0;
      const auto rep = toledo_ak7(toledo_h, j0);
      emit(to_json(rep), format,
           [&](std::ostream& o) {
             o << "toledo (m=7 construction): h=" << rep.h << " j0=" << rep.j0
               << " lambda=" << rat_str(rep.fitted_lambda) << "\n";
             for (const auto& e : rep.entries)
               o << "tau(alpha_" << e.factor << ") = " << rat_str(e.coefficient) << " sigma  [SU("
                 << e.a << "," << e.b << ")]\n";
           },
           out);
    } else if (*cob_cmd) {
      const BundleNumerics f1 = bundle_from_json(load_json(cob_path1));
      const BundleNumerics f2 = bundle_from_json(load_json(cob_path2));
      const auto rep = cobordism_compare(f1, f2);
      emit(to_json(rep), format,
           [&](std::ostream& o) {
             for (const auto& row : rep.rows)
               o << "<c1(E_" << row.q << "), [base]>: " << rat_str(row.value1) << " vs "
                 << rat_str(row.value2) << (row.equal ? "  (equal)" : "  (DIFFER)") << "\n";
             o << (rep.all_equal ? "all characteristic numbers equal\n"
                                 : "characteristic numbers differ\n");
           },
           out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace cli
}  // namespace eqindex
