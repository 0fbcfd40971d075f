#pragma once

#include <map>
#include <string>
#include <vector>

#include "eqindex/rational.hpp"

namespace eqindex {

// A Z/mZ action on a closed oriented surface with totally ramified branch
// points: m = |G|, h = genus of S/G, fixed_counts[j] = |Z_j| for rotation
// class j (the generator acts on the tangent plane at z in Z_j by e^{2 pi i j/m}).
// The total genus g is derived from Riemann-Hurwitz.
struct ActionData {
  long m = 2;
  long h = 0;
  std::map<long, long> fixed_counts;
  long genus = 0;         // derived
  long total_fixed = 0;   // |Z| = sum |Z_j|

  bool is_free() const { return total_fixed == 0; }
};

inline ActionData new_action(long m, long h, const std::map<long, long>& fixed_counts) {
  require(m >= 2, errc::invalid_input, "group order m must be >= 2");
  require(h >= 0, errc::invalid_input, "quotient genus must be >= 0");
  ActionData a;
  a.m = m;
  a.h = h;
  for (const auto& [j, count] : fixed_counts) {
    require(j >= 1 && j <= m - 1, errc::invalid_rotation_class,
            "rotation class j = " + std::to_string(j) + " out of range for m = " + std::to_string(m));
    require(gcd_long(j, m) == 1, errc::invalid_rotation_class,
            "rotation class j = " + std::to_string(j) + " not coprime to m = " + std::to_string(m));
    require(count >= 1, errc::invalid_input, "fixed point count must be >= 1");
    a.fixed_counts[j] = count;
    a.total_fixed += count;
  }
  // Riemann-Hurwitz with totally ramified branch points:
  // 2 - 2g = m(2 - 2h) - |Z|(m - 1).
  const long rhs = m * (2 - 2 * h) - a.total_fixed * (m - 1);
  require((2 - rhs) % 2 == 0, errc::inconsistent_data, "Riemann-Hurwitz genus not integral");
  a.genus = (2 - rhs) / 2;
  require(a.genus >= 0, errc::inconsistent_data, "Riemann-Hurwitz genus negative");
  return a;
}

// Abelian-cover existence check: warns unless sum_j inv_m(j) |Z_j| = 0 (mod m).
// Warn-only; the local monodromy convention is not pinned down, and under
// "all points in one class" both conventions agree.
inline std::vector<std::string> validate_monodromy(const ActionData& a) {
  long sum = 0;
  for (const auto& [j, count] : a.fixed_counts) sum = (sum + inv_mod(j, a.m) * (count % a.m)) % a.m;
  std::vector<std::string> warnings;
  if (sum % a.m != 0)
    warnings.push_back("monodromy sum " + std::to_string(sum) + " != 0 mod " + std::to_string(a.m) +
                       "; no Z/m cover realizes this fixed-point data with the inverse-exponent convention");
  return warnings;
}

inline bool monodromy_valid(const ActionData& a) { return validate_monodromy(a).empty(); }

// Morita's m-construction: genus (m-1)(m-2)/2 + mh with m fixed points, all of
// rotation class 1 (each disk is rotated by 2 pi/m).
inline ActionData morita_example(long m, long h) {
  require(m >= 3, errc::unsupported_parameter, "morita example needs m >= 3");
  require(h >= 0, errc::unsupported_parameter, "morita example needs h >= 0");
  return new_action(m, h, {{1, m}});
}

// The Z/7 Atiyah-Kodaira construction: fiber S -> S/G of genus 7h+15 over
// genus h, base = the Z/7 homology cover of genus 7^{2h}(h-1)+1.
struct AKData {
  ActionData base_action;
  Int base_genus;
  long fiber_genus = 0;
};

inline AKData ak7_example(long h, long j0 = 1) {
  require(h >= 2, errc::unsupported_parameter, "ak7 construction needs h >= 2");
  require(j0 >= 1 && j0 <= 6, errc::invalid_rotation_class, "j0 must lie in 1..6");
  AKData d;
  d.base_action = new_action(7, h, {{j0, 7}});
  Int deg = 1;
  for (long i = 0; i < 2 * h; ++i) deg *= 7;
  d.base_genus = deg * (h - 1) + 1;
  d.fiber_genus = 7 * h + 15;
  require(d.base_action.genus == d.fiber_genus, errc::internal_error, "ak7 fiber genus mismatch");
  return d;
}

// The two fiberings of the standard Atiyah-Kodaira 4-manifold:
//   S_6   -> M -> S_129  (involution on S_6 with 2 fixed points, quotient S_3)
//   S_321 -> M -> S_3    (quotient genus 104 and 228 fixed points; these are
//                         forced by rank E'_1 = 104 together with Riemann-Hurwitz)
struct AK2Fibering {
  ActionData action;
  long base_genus = 0;
};

struct AK2Standard {
  AK2Fibering fibering1;
  AK2Fibering fibering2;
};

inline AK2Standard ak2_standard() {
  AK2Standard s;
  s.fibering1 = {new_action(2, 3, {{1, 2}}), 129};
  s.fibering2 = {new_action(2, 104, {{1, 228}}), 3};
  require(s.fibering1.action.genus == 6, errc::internal_error, "ak2 fibering 1 genus mismatch");
  require(s.fibering2.action.genus == 321, errc::internal_error, "ak2 fibering 2 genus mismatch");
  return s;
}

}  // namespace eqindex
