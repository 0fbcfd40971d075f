#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "eqindex/cli.hpp"

using namespace eqindex;

namespace {

struct RunOutcome {
  int code;
  std::string out;
  std::string err;
};

RunOutcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream f(path);
  f << content;
  return path.string();
}

}  // namespace

TEST_CASE("analyze a morita spec") {
  const auto path = write_temp("eqindex_morita51.json",
                               R"({"example": "morita", "m": 5, "h": 1})");
  const auto res = run_cli({"analyze", path});
  CHECK(res.code == 0);
  CHECK(res.out.find("SU(1,4) SU(2,3)") != std::string::npos);
  CHECK(res.out.find("Q(zeta_5)^5") != std::string::npos);
  CHECK(res.out.find("genus=11") != std::string::npos);
}

TEST_CASE("analyze the m=2 branched involution") {
  const auto path = write_temp("eqindex_m2.json",
                               R"({"m": 2, "quotient_genus": 3, "fixed_points": {"1": 2}})");
  const auto res = run_cli({"analyze", path});
  CHECK(res.code == 0);
  CHECK(res.out.find("c1(E_1) = 1/8 sigma + 1/8 eta_1") != std::string::npos);
  CHECK(res.out.find("c1(E_-1) = 1/8 sigma - 1/8 eta_1") != std::string::npos);
}

TEST_CASE("analyze a free action has an empty eta section") {
  const auto path = write_temp("eqindex_free3.json",
                               R"({"m": 3, "quotient_genus": 2, "fixed_points": {}})");
  const auto res = run_cli({"analyze", path});
  CHECK(res.code == 0);
  CHECK(res.out.find("(free action)") != std::string::npos);
  CHECK(res.out.find(" eta_1") == std::string::npos);
  CHECK(res.out.find("image_basis: sigma\n") != std::string::npos);
}

TEST_CASE("json output round-trips byte-identically") {
  const auto path = write_temp("eqindex_m2b.json",
                               R"({"m": 2, "quotient_genus": 3, "fixed_points": {"1": 2}})");
  const auto res = run_cli({"--format", "json", "analyze", path});
  REQUIRE(res.code == 0);
  const auto parsed = Json::parse(res.out);
  CHECK(parsed.dump(2) + "\n" == res.out);
  CHECK(parsed["solved_classes"][0]["sigma"] == "1/8");
  CHECK(parsed["solved_classes"][0]["eta"]["1"] == "1/8");
  CHECK(parsed["solved_classes"][1]["eta"]["1"] == "-1/8");
}

TEST_CASE("table and json formats carry the same exact values") {
  const auto path = write_temp("eqindex_m12.json",
                               R"({"m": 12, "quotient_genus": 2,
                                   "fixed_points": {"1": 2, "5": 2, "7": 2, "11": 2}})");
  const auto table = run_cli({"analyze", path});
  const auto json = run_cli({"--format", "json", "analyze", path});
  REQUIRE(table.code == 0);
  REQUIRE(json.code == 0);
  const auto parsed = Json::parse(json.out);
  for (const auto& cls : parsed["solved_classes"]) {
    std::string expr = cls["sigma"].get<std::string>() + " sigma";
    for (const auto& [j, c] : cls["eta"].items()) {
      std::string cs = c.get<std::string>();
      if (!cs.empty() && cs[0] == '-')
        expr += " - " + cs.substr(1);
      else
        expr += " + " + cs;
      expr += " eta_" + j;
    }
    CHECK(table.out.find(expr) != std::string::npos);
  }
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"analyze", "/nonexistent/file.json"}).code == 2);
  const auto bad = write_temp("eqindex_bad.json", "{ not json");
  CHECK(run_cli({"analyze", bad}).code == 2);
  const auto badfield = write_temp("eqindex_badfield.json", R"({"m": 5})");
  CHECK(run_cli({"analyze", badfield}).code == 2);
  // non-coprime rotation class: input error
  const auto noncop = write_temp("eqindex_noncop.json",
                                 R"({"m": 4, "quotient_genus": 1, "fixed_points": {"2": 1}})");
  CHECK(run_cli({"analyze", noncop}).code == 2);
  // RH non-integral: inconsistent data
  const auto inconsistent = write_temp(
      "eqindex_incons.json", R"({"m": 4, "quotient_genus": 1, "fixed_points": {"1": 1}})");
  CHECK(run_cli({"analyze", inconsistent}).code == 3);
  CHECK(run_cli({"bogus-command"}).code == 2);
}

TEST_CASE("examples") {
  const auto morita = run_cli({"example", "morita", "--m", "5", "--h", "1"});
  CHECK(morita.code == 0);
  CHECK(morita.out.find("SU(1,4) SU(2,3)") != std::string::npos);

  const auto ak7 = run_cli({"example", "ak7", "--h", "2"});
  CHECK(ak7.code == 0);
  CHECK(ak7.out.find("base_genus=2402") != std::string::npos);
  CHECK(ak7.out.find("fiber_genus=29") != std::string::npos);

  const auto ak2 = run_cli({"example", "ak2"});
  CHECK(ak2.code == 0);
  CHECK(ak2.out.find("ranks(E_1,E_-1)=(3,3)") != std::string::npos);
  CHECK(ak2.out.find("ranks(E_1,E_-1)=(104,217)") != std::string::npos);

  CHECK(run_cli({"example", "unknown"}).code == 2);
}

TEST_CASE("toledo command") {
  const auto res = run_cli({"toledo", "--h", "2"});
  CHECK(res.code == 0);
  CHECK(res.out.find("tau(alpha_1) = 3/112 sigma") != std::string::npos);
  CHECK(res.out.find("tau(alpha_2) = 5/112 sigma") != std::string::npos);
  CHECK(res.out.find("tau(alpha_3) = 3/56 sigma") != std::string::npos);
  CHECK(res.out.find("lambda=-1/8") != std::string::npos);
}

TEST_CASE("cobordism command") {
  const std::string d1 = std::string(EQINDEX_SOURCE_DIR) + "/data/ak2_fibering1.json";
  const std::string d2 = std::string(EQINDEX_SOURCE_DIR) + "/data/ak2_fibering2.json";
  const auto res = run_cli({"cobordism", d1, d2});
  CHECK(res.code == 0);
  CHECK(res.out.find("all characteristic numbers equal") != std::string::npos);
  const auto missing = run_cli({"cobordism", d1});
  CHECK(missing.code == 2);
}

TEST_CASE("verify command") {
  const auto res = run_cli({"verify", "--max-m", "8", "--max-z", "4", "--max-h", "3"});
  CHECK(res.code == 0);
  CHECK(res.out.find("checks passed") != std::string::npos);
  CHECK(res.out.find("FAIL") == std::string::npos);

  const auto faulty =
      run_cli({"verify", "--max-m", "4", "--max-z", "2", "--max-h", "2", "--inject-fault"});
  CHECK(faulty.code != 0);
  CHECK(faulty.out.find("FAIL injected-fault") != std::string::npos);
}
