#pragma once

// JSON encoding of inputs and reports. Scalars are decimal strings ("p/q" or
// "p" over Q, the residue over F_p); the field appears once per document as
// "rational" or {"prime": p}.

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tercert/certifier.hpp"
#include "tercert/errors.hpp"
#include "tercert/field.hpp"
#include "tercert/geometry.hpp"
#include "tercert/gup.hpp"
#include "tercert/hilbert.hpp"
#include "tercert/oracle.hpp"
#include "tercert/prooflab.hpp"

namespace tercert::io {

using json = nlohmann::ordered_json;

using AnyField = std::variant<RationalField, PrimeField>;

inline AnyField parse_field(const json& j) {
  if (j.is_null() || (j.is_string() && j.get<std::string>() == "rational")) return RationalField{};
  if (j.is_object() && j.contains("prime") && j.at("prime").is_number_unsigned())
    return PrimeField(j.at("prime").get<std::uint64_t>());
  throw InputError("field must be \"rational\" or {\"prime\": p}");
}

inline json field_to_json(const RationalField&) { return "rational"; }
inline json field_to_json(const PrimeField& f) { return json{{"prime", f.prime()}}; }

template <ExactField F>
scalar_t<F> parse_scalar(const F& field, const json& j) {
  if (j.is_string()) return field.parse(j.get<std::string>());
  if (j.is_number_integer()) return field.from_int(j.get<long long>());
  throw InputError("scalar must be a decimal string or an integer, got " + j.dump());
}

template <ExactField F>
json scalar_to_json(const scalar_t<F>& x) {
  return x.str();
}

template <ExactField F>
Vec<F> parse_vector(const F& field, const json& j) {
  if (!j.is_array()) throw InputError("expected an array of scalars");
  Vec<F> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(parse_scalar(field, e));
  return out;
}

template <ExactField F>
json vector_to_json(const Vec<F>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

template <ExactField F>
ProjectivePoint<F> parse_point(const F& field, const json& j) {
  if (!j.is_array() || j.size() != 3) throw InputError("point must be a triple of scalars");
  return ProjectivePoint<F>(field, {parse_scalar(field, j[0]), parse_scalar(field, j[1]), parse_scalar(field, j[2])});
}

template <ExactField F>
json point_to_json(const ProjectivePoint<F>& p) {
  return json::array({p[0].str(), p[1].str(), p[2].str()});
}

template <ExactField F>
PointList<F> parse_points(const F& field, const json& j) {
  if (!j.is_array()) throw InputError("points must be an array of triples");
  PointList<F> out;
  for (const auto& e : j) out.push_back(parse_point(field, e));
  return out;
}

template <ExactField F>
json points_to_json(const PointList<F>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(point_to_json(p));
  return out;
}

template <ExactField F>
TernaryForm<F> parse_form(const F& field, unsigned d, const json& j) {
  return TernaryForm<F>(field, d, parse_vector(field, j));
}

/// Terms are objects {"point": [x, y, z], "lambda": s}.
template <ExactField F>
Decomposition<F> parse_decomposition(const F& field, unsigned d, const json& j) {
  if (!j.is_array()) throw InputError("decomposition must be an array of terms");
  std::vector<Term<F>> terms;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("point") || !t.contains("lambda"))
      throw InputError("decomposition term needs \"point\" and \"lambda\"");
    terms.push_back({parse_point(field, t.at("point")), parse_scalar(field, t.at("lambda"))});
  }
  return Decomposition<F>(field, d, std::move(terms));
}

template <ExactField F>
json decomposition_to_json(const Decomposition<F>& dec) {
  json out = json::array();
  for (const auto& t : dec.terms()) out.push_back({{"point", point_to_json(t.point)}, {"lambda", t.lambda.str()}});
  return out;
}

inline json profile_to_json(const HilbertProfile& p) {
  return json{{"w", p.w}, {"regularity", p.regularity()}, {"h", p.h}, {"dh", p.dh}};
}

inline HilbertProfile profile_from_json(const json& j) {
  HilbertProfile p;
  p.w = j.at("w").get<std::size_t>();
  p.h = j.at("h").get<std::vector<std::size_t>>();
  p.dh = j.at("dh").get<std::vector<std::size_t>>();
  p.check_invariants();
  return p;
}

template <ExactField F>
json gup_to_json(const GupReport<F>& r) {
  json out{{"holds", r.holds}, {"checked_degrees", r.checked_degrees}};
  if (r.witness) {
    out["witness"] = {{"u", r.witness->u},
                      {"subset", points_to_json(r.witness->subset)},
                      {"curve", vector_to_json<F>(r.witness->curve)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

template <ExactField F>
json split_to_json(const CurveSplit<F>& s) {
  return json{{"m", s.m},
              {"curve", vector_to_json<F>(s.curve)},
              {"a", s.a()},
              {"A", points_to_json(s.a_points)},
              {"B", points_to_json(s.b_points)},
              {"profile_matches", s.profile_matches}};
}

template <ExactField F>
json certificate_to_json(const Certificate<F>& c, const F& field) {
  const long long k = static_cast<long long>(c.k), d = c.d, u = c.u;
  json reasons = json::array();
  for (auto r : c.reasons) reasons.push_back(to_string(r));
  json out;
  out["criterion"] = "BC-ternary-GUP";
  out["field"] = field_to_json(field);
  out["d"] = c.d;
  out["k"] = c.k;
  out["N"] = d * (d + 3) / 2;
  out["bound_ok"] = c.bound_ok;
  out["bound"] = {{"lhs_8k", 8 * k}, {"rhs_d2_plus_2d", d * d + 2 * d}, {"k_max", bound_k_max(c.d)}};
  out["u"] = c.u;
  out["u_consistency"] = c.u_consistency;
  out["u_consistency_terms"] = {{"lhs_2u_plus_4", 2 * (u + 2)}, {"rhs_d", d}};
  out["inequality1_ok"] = c.inequality1_ok;
  out["inequality1"] = {{"lhs_2k", 2 * k}, {"rhs", (u + 1) * d - u * u + u + 2}};
  out["generic_range_ok"] = c.generic_range_ok;
  out["generic_range"] = {{"lhs_3k", 3 * k}, {"rhs_N_plus_1", d * (d + 3) / 2 + 1}};
  out["decomposition_sigma"] = c.decomposition_sigma ? json(c.decomposition_sigma->str()) : json(nullptr);
  out["distinct_points"] = c.distinct_points;
  out["lambdas_nonzero"] = c.lambdas_nonzero;
  out["veronese_rank"] = c.veronese_rank;
  out["independence"] = json::array({c.independence.first, c.independence.second});
  out["catalecticant_degree"] = c.catalecticant_degree;
  out["catalecticant_rank"] = c.catalecticant_rank ? json(*c.catalecticant_rank) : json(nullptr);
  out["rank_certified"] = c.rank_certified;
  out["gup"] = gup_to_json(c.gup);
  out["verdict"] = to_string(c.verdict);
  out["reasons"] = reasons;
  return out;
}

template <ExactField F>
json pair_analysis_to_json(const PairAnalysis<F>& a, const F& field) {
  json plateaus = json::array();
  for (const auto& p : a.plateaus) plateaus.push_back({{"j", p.j}, {"value", p.value}});
  json out;
  out["field"] = field_to_json(field);
  out["d"] = a.d;
  out["k"] = a.k;
  out["w"] = a.w;
  out["W"] = points_to_json(a.w_points);
  out["profile"] = profile_to_json(a.profile);
  out["claim1"] = {{"h_W_d", a.claim1.h_w_d}, {"w", a.claim1.w}, {"holds", a.claim1.holds}};
  out["u"] = a.u;
  out["initial_segment_ok"] = a.initial_segment_ok;
  out["plateaus"] = plateaus;
  out["m"] = a.m ? json(*a.m) : json(nullptr);
  out["split"] = a.split ? split_to_json(*a.split) : json(nullptr);
  out["residual_ok"] = a.residual_ok ? json(*a.residual_ok) : json(nullptr);
  if (a.split_bounds) {
    const auto& b = *a.split_bounds;
    out["split_bounds"] = {{"a", b.a},
                           {"upper", b.upper},
                           {"lower", b.lower},
                           {"a_le_upper", b.a_le_upper},
                           {"a_ge_lower", b.a_ge_lower}};
  } else {
    out["split_bounds"] = nullptr;
  }
  if (a.final_inequality) {
    const auto& fi = *a.final_inequality;
    out["final_inequality"] = {{"lhs", fi.lhs}, {"rhs", fi.rhs}, {"d_le_2m", fi.d_le_2m}};
  } else {
    out["final_inequality"] = nullptr;
  }
  out["notes"] = a.notes;
  return out;
}

inline json search_result_to_json(const SearchResult& r) {
  json decs = json::array();
  for (const auto& d : r.decompositions) {
    json terms = json::array();
    for (std::size_t i = 0; i < d.points.size(); ++i)
      terms.push_back({{"point", point_to_json(d.points[i])}, {"lambda", d.lambdas[i].str()}});
    decs.push_back(terms);
  }
  return json{{"field", json{{"prime", r.p}}},
              {"k", r.k},
              {"total_subsets", r.total_subsets},
              {"candidates_scanned", r.candidates_scanned},
              {"truncated", r.truncated},
              {"classes", r.decompositions.size()},
              {"decompositions", decs},
              {"caveat", "exhaustive over F_p-rational points only; an empty or single result says nothing about "
                         "decompositions over extension fields"}};
}

}  // namespace tercert::io
