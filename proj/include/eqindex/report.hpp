#pragma once

#include <json.hpp>

#include <string>

#include "eqindex/apps.hpp"
#include "eqindex/arithgroup.hpp"
#include "eqindex/circulant.hpp"

namespace eqindex {

// Canonical JSON: insertion-ordered keys, exact values as "p/q" strings;
// numeric embeddings appear only under an explicit "numeric_checks" key.
using Json = nlohmann::ordered_json;

inline Json to_json(const CycloNum& c) {
  Json j;
  j["m"] = c.conductor();
  Json coeffs = Json::array();
  for (const Rat& r : c.coeffs()) coeffs.push_back(rat_str(r));
  j["coeffs"] = coeffs;
  return j;
}

inline Json to_json(const ActionData& a) {
  Json j;
  j["m"] = a.m;
  j["quotient_genus"] = a.h;
  Json fp = Json::object();
  for (const auto& [cls, count] : a.fixed_counts) fp[std::to_string(cls)] = count;
  j["fixed_points"] = fp;
  j["genus"] = a.genus;
  j["total_fixed"] = a.total_fixed;
  return j;
}

inline ActionData action_from_json(const Json& j) {
  require(j.is_object(), errc::invalid_input, "action spec must be a JSON object");
  if (j.contains("example")) {
    const std::string name = j.at("example").get<std::string>();
    if (name == "morita")
      return morita_example(j.at("m").get<long>(), j.at("h").get<long>());
    if (name == "ak7") return ak7_example(j.at("h").get<long>(), j.value("j0", 1L)).base_action;
    fail(errc::invalid_input, "unknown example '" + name + "'");
  }
  require(j.contains("m") && j.contains("quotient_genus"), errc::invalid_input,
          "action spec needs \"m\" and \"quotient_genus\"");
  std::map<long, long> counts;
  if (j.contains("fixed_points")) {
    require(j.at("fixed_points").is_object(), errc::invalid_input,
            "\"fixed_points\" must be an object");
    for (const auto& [key, val] : j.at("fixed_points").items())
      counts[std::stol(key)] = val.get<long>();
  }
  return new_action(j.at("m").get<long>(), j.at("quotient_genus").get<long>(), counts);
}

inline Json to_json(const CharacterVec& c) {
  Json j;
  j["m"] = c.m;
  j["values"] = c.values;
  return j;
}

inline Json to_json(const IsotypicDecomp& d) {
  Json j;
  j["n"] = d.n;
  Json rd = Json::object();
  for (const auto& [k, dim] : d.rational_dims) rd[std::to_string(k)] = dim;
  j["rational_isotypic"] = rd;
  return j;
}

inline Json to_json(const EigenSignature& sig) {
  Json j = Json::array();
  for (const auto& e : sig.entries) {
    Json entry;
    entry["s"] = e.s;
    entry["q"] = "zeta^" + std::to_string(e.s);
    entry["a"] = e.a;
    entry["b"] = e.b;
    j.push_back(entry);
  }
  return j;
}

inline Json to_json(const FactorList& f) {
  Json j;
  j["label"] = f.label();
  Json sp = Json::array();
  sp.push_back(Json{{"group", "Sp_" + std::to_string(2 * f.h) + "(R)"}, {"rank", f.h}});
  if (f.h_prime)
    sp.push_back(Json{{"group", "Sp_" + std::to_string(2 * *f.h_prime) + "(R)"}, {"rank", *f.h_prime}});
  j["sp_factors"] = sp;
  Json su = Json::array();
  for (const auto& x : f.su) {
    Json e;
    e["s"] = x.s;
    e["a"] = x.a;
    e["b"] = x.b;
    e["group"] = x.label();
    su.push_back(e);
  }
  j["su_factors"] = su;
  j["field_labels"] = f.field_labels;
  return j;
}

inline Json to_json(const StableRangeReport& r) {
  Json j;
  j["f_rank_lower"] = r.f_rank_lower;
  j["borel_bound"] = r.borel_bound;
  Json hyp;
  hyp["h_ge3"] = r.h_ge3;
  if (r.hp_ge3) hyp["h_prime_ge3"] = *r.hp_ge3;
  hyp["ab_ge1"] = r.ab_ge1;
  j["hypotheses"] = hyp;
  j["degree2_valid"] = r.degree2_valid;
  return j;
}

inline Json to_json(const H2Basis& b) {
  Json j;
  Json syms = Json::array();
  for (const auto& s : b.symbols) {
    Json e;
    e["s"] = s.s;
    e["name"] = s.name;
    e["source"] = s.source;
    syms.push_back(e);
  }
  j["symbols"] = syms;
  j["caveat"] = b.caveat;
  return j;
}

inline Json to_json(const IndexSystem& sys) {
  Json j;
  j["d"] = sys.d;
  j["eta_index"] = sys.eta_index;
  const auto mat = [](const CycloMat& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
      Json r = Json::array();
      for (const auto& v : row) {
        if (auto q = v.as_rational())
          r.push_back(rat_str(*q));
        else
          r.push_back(to_json(v));
      }
      rows.push_back(r);
    }
    return rows;
  };
  j["J"] = mat(sys.J);
  j["K"] = mat(sys.K);
  return j;
}

inline Json to_json(const SolvedClasses& s) {
  Json j = Json::array();
  for (long idx = 0; idx < static_cast<long>(s.exact.size()); ++idx) {
    Json e;
    e["s"] = idx;
    e["q"] = "zeta^" + std::to_string(idx);
    if (s.all_rational) {
      const auto& cls = s.classes[static_cast<std::size_t>(idx)];
      e["sigma"] = rat_str(cls.sigma);
      Json eta = Json::object();
      for (const auto& [cj, coeff] : cls.eta) eta[std::to_string(cj)] = rat_str(coeff);
      e["eta"] = eta;
    } else {
      e["flagged_non_rational"] = true;
      Json row = Json::array();
      for (const auto& v : s.exact[static_cast<std::size_t>(idx)]) row.push_back(to_json(v));
      e["exact"] = row;
    }
    j.push_back(e);
  }
  return j;
}

inline Json to_json(const ImageBasis& img) {
  Json j;
  j["basis"] = img.basis;
  if (img.all_rational) {
    Json rows = Json::array();
    for (const auto& row : img.matrix) {
      Json r = Json::array();
      for (const Rat& v : row) r.push_back(rat_str(v));
      rows.push_back(r);
    }
    j["matrix"] = rows;
  }
  j["all_rational"] = img.all_rational;
  Json ident = Json::object();
  for (const auto& [xq, c1] : img.identification) ident[xq] = c1;
  j["identification"] = ident;
  return j;
}

inline Json to_json(const BasisCertificate& c, long rank_k = -1) {
  Json j;
  j["m"] = c.m;
  j["det_nonzero"] = c.det_nonzero;
  j["method"] = c.method;
  if (rank_k >= 0) j["rank_K"] = rank_k;
  j["permutation"] = c.permutation;
  return j;
}

inline Json to_json(const BundleNumerics& b) {
  Json j;
  j["action"] = to_json(b.action);
  j["base_genus"] = b.base_genus;
  j["sigma"] = rat_str(b.sigma);
  Json eta = Json::object();
  for (const auto& [cls, v] : b.eta) eta[std::to_string(cls)] = rat_str(v);
  j["eta"] = eta;
  return j;
}

inline BundleNumerics bundle_from_json(const Json& j) {
  require(j.is_object(), errc::invalid_input, "bundle numerics must be a JSON object");
  require(j.contains("action") && j.contains("sigma"), errc::invalid_input,
          "bundle numerics needs \"action\" and \"sigma\"");
  BundleNumerics b;
  b.action = action_from_json(j.at("action"));
  b.base_genus = j.value("base_genus", 0L);
  b.sigma = parse_rat(j.at("sigma").get<std::string>());
  if (j.contains("eta"))
    for (const auto& [key, val] : j.at("eta").items())
      b.eta[std::stol(key)] = parse_rat(val.get<std::string>());
  return b;
}

inline Json to_json(const EigenrankReport& r) {
  Json j;
  j["m"] = r.m;
  j["genus"] = r.genus;
  j["rank_E_1"] = r.h;
  if (r.h_middle) j["rank_E_-1"] = *r.h_middle;
  Json su = Json::array();
  for (const auto& e : r.su) {
    Json x;
    x["s"] = e.s;
    x["rank_E_q"] = e.a;
    x["rank_E_qbar"] = e.b;
    su.push_back(x);
  }
  j["eigenpairs"] = su;
  return j;
}

inline Json to_json(const ToledoReport& t) {
  Json j;
  j["h"] = t.h;
  j["j0"] = t.j0;
  j["fitted_lambda"] = rat_str(t.fitted_lambda);
  j["normalization"] = "tau(alpha_i) = x_q/2 (half of the eigenbundle pair E_q + E_qbar)";
  Json entries = Json::array();
  for (const auto& e : t.entries) {
    Json x;
    x["factor"] = e.factor;
    x["group"] = "SU(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
    x["s"] = e.s;
    x["coefficient"] = rat_str(e.coefficient);
    entries.push_back(x);
  }
  j["entries"] = entries;
  j["sp_coefficient"] = rat_str(t.sp_coefficient);
  j["consistent"] = t.consistent;
  return j;
}

inline Json to_json(const CobordismReport& r) {
  Json j;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json x;
    x["s"] = row.s;
    x["q"] = row.q;
    x["value1"] = rat_str(row.value1);
    x["value2"] = rat_str(row.value2);
    x["equal"] = row.equal;
    rows.push_back(x);
  }
  j["rows"] = rows;
  j["all_equal"] = r.all_equal;
  return j;
}

inline Json to_json(const HirzebruchReport& r) {
  Json j;
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    Json x;
    x["h"] = c.h;
    x["identity"] = c.identity;
    cases.push_back(x);
  }
  j["cases"] = cases;
  j["free_case"] = r.free_case;
  j["rearranged"] = r.rearranged;
  j["all_hold"] = r.all_hold;
  return j;
}

}  // namespace eqindex
