#include <catch2/catch_amalgamated.hpp>

#include "eqindex/action.hpp"

using namespace eqindex;

TEST_CASE("Riemann-Hurwitz genus") {
  CHECK(new_action(5, 1, {{1, 5}}).genus == 11);
  CHECK(new_action(3, 2, {}).genus == 4);
  CHECK(new_action(2, 3, {{1, 2}}).genus == 6);
  CHECK(new_action(2, 3, {{1, 2}}).total_fixed == 2);
}

TEST_CASE("action validation") {
  CHECK_THROWS_AS(new_action(4, 1, {{2, 1}}), Error);  // gcd(2,4) > 1
  CHECK_THROWS_AS(new_action(6, 1, {{3, 2}}), Error);
  CHECK_THROWS_AS(new_action(1, 1, {}), Error);   // m too small
  CHECK_THROWS_AS(new_action(3, -1, {}), Error);  // negative quotient genus
  CHECK_THROWS_AS(new_action(2, 0, {{1, 1}}), Error);  // RH non-integral
  CHECK_THROWS_AS(new_action(3, 0, {}), Error);        // negative genus
  try {
    new_action(4, 1, {{2, 1}});
  } catch (const Error& e) {
    CHECK(e.code() == errc::invalid_rotation_class);
  }
}

TEST_CASE("monodromy warnings") {
  CHECK(validate_monodromy(new_action(5, 1, {{1, 5}})).empty());
  CHECK(validate_monodromy(new_action(4, 6, {{1, 1}, {3, 1}})).empty());
  CHECK(validate_monodromy(new_action(4, 6, {{1, 2}})).size() == 1);
  CHECK(monodromy_valid(new_action(3, 2, {})));
}

TEST_CASE("morita construction") {
  const auto a = morita_example(5, 1);
  CHECK(a.genus == 11);
  CHECK(a.fixed_counts.at(1) == 5);
  CHECK(morita_example(7, 0).genus == 15);
  CHECK(morita_example(3, 2).genus == 7);
  for (long m = 3; m <= 20; ++m)
    for (long h = 0; h <= 5; ++h)
      CHECK(morita_example(m, h).genus == m * h + (m - 1) * (m - 2) / 2);
  CHECK_THROWS_AS(morita_example(2, 1), Error);
}

TEST_CASE("ak7 construction") {
  const auto d2 = ak7_example(2);
  CHECK(d2.base_genus == 2402);
  CHECK(d2.fiber_genus == 29);
  CHECK(d2.base_action.m == 7);
  CHECK(d2.base_action.fixed_counts.at(1) == 7);
  const auto d3 = ak7_example(3);
  CHECK(d3.base_genus == 235299);
  CHECK(d3.fiber_genus == 36);
  // fiber Riemann-Hurwitz at h = 2: 2 - 58 = 7(2 - 4) - 7*6
  CHECK(2 - 2 * d2.fiber_genus == 7 * (2 - 2 * 2) - 7 * 6);
  CHECK_THROWS_AS(ak7_example(1), Error);
  CHECK_THROWS_AS(ak7_example(2, 7), Error);
  CHECK(ak7_example(2, 3).base_action.fixed_counts.at(3) == 7);
}

TEST_CASE("ak2 standard fiberings") {
  const auto s = ak2_standard();
  CHECK(s.fibering1.action.genus == 6);
  CHECK(s.fibering1.base_genus == 129);
  CHECK(s.fibering2.action.genus == 321);
  CHECK(s.fibering2.base_genus == 3);
  CHECK(s.fibering2.action.genus - s.fibering2.action.h == 217);
  CHECK(monodromy_valid(s.fibering1.action));
  CHECK(monodromy_valid(s.fibering2.action));
}
