#include <catch2/catch_amalgamated.hpp>

#include "eqindex/arithgroup.hpp"

using namespace eqindex;

namespace {

FactorList factors_of(const ActionData& a) {
  const auto n = complex_multiplicities(character_h1(a));
  return factor_list(a, n, solve_deg0(a, n));
}

}  // namespace

TEST_CASE("real factor lists") {
  for (long h = 1; h <= 3; ++h) {
    const auto f = factors_of(morita_example(7, h));
    CHECK(f.h == h);
    CHECK_FALSE(f.h_prime.has_value());
    REQUIRE(f.su.size() == 3);
    CHECK(f.su[0].label() == "SU(" + std::to_string(h) + "," + std::to_string(h + 5) + ")");
    CHECK(f.su[1].label() == "SU(" + std::to_string(h + 1) + "," + std::to_string(h + 4) + ")");
    CHECK(f.su[2].label() == "SU(" + std::to_string(h + 2) + "," + std::to_string(h + 3) + ")");
  }

  const auto f2 = factors_of(new_action(2, 3, {{1, 2}}));
  CHECK(f2.h == 3);
  REQUIRE(f2.h_prime.has_value());
  CHECK(*f2.h_prime == 3);  // Sp_6 x Sp_6
  CHECK(f2.su.empty());
  CHECK(f2.label() == "Sp_6(R) x Sp_6(R)");

  const auto fak = factors_of(ak7_example(2).base_action);
  CHECK(fak.label() == "Sp_4(R) x SU(2,7) x SU(3,6) x SU(4,5)");
  CHECK(fak.field_labels == std::vector<std::string>{"Q(zeta_7 + zeta_7^-1)"});
}

TEST_CASE("h2 basis symbols") {
  const auto f2 = factors_of(new_action(2, 3, {{1, 2}}));
  const auto b2 = h2_basis(f2, stable_range(new_action(2, 3, {{1, 2}}), f2));
  REQUIRE(b2.symbols.size() == 2);
  CHECK(b2.symbols[0].name == "x_1");
  CHECK(b2.symbols[1].name == "x_-1");

  const auto f7 = factors_of(morita_example(7, 1));
  const auto b7 = h2_basis(f7, stable_range(morita_example(7, 1), f7));
  REQUIRE(b7.symbols.size() == 4);
  CHECK(b7.symbols[1].name == "x_zeta^1");
  CHECK(b7.symbols[1].source == "SU(1,6)");

  const auto f5 = factors_of(morita_example(5, 1));
  CHECK(h2_basis(f5, stable_range(morita_example(5, 1), f5)).symbols.size() == 3);
}

TEST_CASE("stable range report") {
  const auto a6 = morita_example(7, 6);
  const auto f6 = factors_of(a6);
  const auto r6 = stable_range(a6, f6);
  CHECK(r6.f_rank_lower == 5);
  CHECK(r6.borel_bound == 2);
  CHECK(r6.degree2_valid);

  const auto a3 = morita_example(7, 3);
  const auto r3 = stable_range(a3, factors_of(a3));
  CHECK(r3.borel_bound == 0);
  CHECK_FALSE(r3.degree2_valid);

  // monotone in h once valid
  const auto a7 = morita_example(7, 7);
  CHECK(stable_range(a7, factors_of(a7)).degree2_valid);

  // h' hypothesis participates when m is even
  const auto e = new_action(2, 6, {{1, 2}});
  const auto fe = factors_of(e);
  const auto re = stable_range(e, fe);
  REQUIRE(re.hp_ge3.has_value());
  CHECK(*re.hp_ge3);
  CHECK(re.degree2_valid);
}

TEST_CASE("image basis") {
  const auto s2 = solve_deg1(build_system(new_action(2, 3, {{1, 2}})));
  const auto img2 = image_basis(s2);
  CHECK(img2.basis == std::vector<std::string>{"sigma", "eta_1"});
  REQUIRE(img2.all_rational);
  CHECK(img2.matrix ==
        std::vector<std::vector<Rat>>{{Rat(1, 8), Rat(1, 8)}, {Rat(1, 8), Rat(-1, 8)}});

  const auto sfree = solve_deg1(build_system(new_action(3, 2, {})));
  CHECK(image_basis(sfree).basis == std::vector<std::string>{"sigma"});

  const auto s7 = solve_deg1(build_system(new_action(7, 2, {{1, 7}})));
  const auto img7 = image_basis(s7);
  CHECK(img7.basis.size() == 2);
  CHECK(img7.matrix.size() == 4);
  CHECK(img7.matrix[0].size() == 2);
  CHECK(img7.identification[0] == std::pair<std::string, std::string>{"x_1", "c1(E_1)"});
}

TEST_CASE("bookkeeping is validated") {
  const auto a = morita_example(5, 1);
  const auto n = complex_multiplicities(character_h1(a));
  auto sig = solve_deg0(a, n);
  sig.entries[0].a += 1;  // break a + b = n_s
  CHECK_THROWS_AS(factor_list(a, n, sig), Error);
}
