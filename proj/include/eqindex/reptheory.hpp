#pragma once

#include <map>
#include <vector>

#include "eqindex/action.hpp"
#include "eqindex/cyclo.hpp"

namespace eqindex {

// Character of H_1(S; C) as a G-module: values[r] = trace of tau^r.
struct CharacterVec {
  long m = 1;
  std::vector<long> values;
};

// Complex eigenvalue multiplicities n[s] of the character tau -> zeta^s on
// H_1(S; C), plus the Q(zeta_k)-isotypic dimensions of H_1(S; Q).
struct IsotypicDecomp {
  long m = 1;
  std::vector<long> n;
  std::map<long, long> rational_dims;  // k | m -> multiplicity of Q(zeta_k)
};

// chi(e) = 2g; chi(tau^r) = 2 - |Z| for r != 0 by Lefschetz, since every
// nontrivial power fixes exactly Z under the total-ramification assumption.
inline CharacterVec character_h1(const ActionData& a) {
  CharacterVec c;
  c.m = a.m;
  c.values.assign(static_cast<std::size_t>(a.m), 2 - a.total_fixed);
  c.values[0] = 2 * a.genus;
  return c;
}

// Chevalley-Weil via the exact DFT of the character; multiplicities must come
// out as non-negative integers or the input data was impossible.
inline IsotypicDecomp complex_multiplicities(const CharacterVec& c) {
  const long m = c.m;
  IsotypicDecomp d;
  d.m = m;
  d.n.assign(static_cast<std::size_t>(m), 0);
  std::vector<CycloNum> pw;
  pw.reserve(static_cast<std::size_t>(m));
  for (long e = 0; e < m; ++e) pw.push_back(CycloNum::root(m, e));
  const Rat inv_m(1, m);
  for (long s = 0; s < m; ++s) {
    CycloNum acc = CycloNum::zero(m);
    for (long r = 0; r < m; ++r) {
      if (c.values[static_cast<std::size_t>(r)] == 0) continue;
      acc = acc + pw[static_cast<std::size_t>(((m - s) * r) % m)] * Rat(c.values[static_cast<std::size_t>(r)]);
    }
    acc = acc * inv_m;
    const auto q = acc.as_rational();
    require(q.has_value() && is_integer(*q), errc::inconsistent_character,
            "non-integral multiplicity at s = " + std::to_string(s));
    require(*q >= 0, errc::inconsistent_character, "negative multiplicity at s = " + std::to_string(s));
    d.n[static_cast<std::size_t>(s)] = static_cast<long>(boost::multiprecision::numerator(*q));
  }
  for (long k = 1; k <= m; ++k) {
    if (m % k != 0) continue;
    // Any s of multiplicative order k carries the Q(zeta_k) multiplicity; s = m/k works.
    d.rational_dims[k] = d.n[static_cast<std::size_t>((m / k) % m)];
  }
  return d;
}

}  // namespace eqindex
