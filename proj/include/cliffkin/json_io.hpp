#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "cliffkin/catalog.hpp"
#include "cliffkin/dualities.hpp"
#include "cliffkin/groups.hpp"
#include "cliffkin/kinmap.hpp"

namespace cliffkin {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return r.get_str(); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected an exact rational string, got " + j.dump());
}

/// {"vars":[...],"terms":[{"exps":{"a0":2},"coeff":"1"}]}
inline Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json exps = Json::object();
    for (const auto& [v, e] : m.powers()) exps[v] = e;
    terms.push_back({{"exps", exps}, {"coeff", c.get_str()}});
  }
  return {{"vars", p.variables()}, {"terms", terms}};
}

inline Polynomial polynomial_from_json(const Json& j) {
  if (j.is_string()) return parse_polynomial(j.get<std::string>());
  Polynomial p;
  for (const auto& t : j.at("terms")) {
    std::vector<Monomial::Power> powers;
    for (const auto& [v, e] : t.at("exps").items()) powers.emplace_back(v, e.get<unsigned>());
    p += Polynomial::term(Monomial::from_powers(std::move(powers)), rational_from_json(t.at("coeff")));
  }
  return p;
}

template <class C>
Json coefficient_json(const C& c) {
  if constexpr (std::is_same_v<C, Rational>)
    return c.get_str();
  else
    return to_string(c);
}

/// [{"blade":"e12","coeff":"3/2"}, ...], canonical order.
template <class C>
Json to_json(const Multivector<C>& m) {
  Json out = Json::array();
  for (const auto& [b, c] : m.terms()) out.push_back({{"blade", blade_name(b)}, {"coeff", coefficient_json(c)}});
  return out;
}

inline RationalMultivector multivector_from_json(const AlgebraSignature& sig, const Json& j) {
  RationalMultivector m(sig);
  for (const auto& t : j)
    m += RationalMultivector::blade(sig, t.at("blade").get<std::string>(), rational_from_json(t.at("coeff")));
  return m;
}

inline SymbolicMultivector symbolic_multivector_from_json(const AlgebraSignature& sig, const Json& j) {
  SymbolicMultivector m(sig);
  for (const auto& t : j)
    m += SymbolicMultivector::blade(sig, t.at("blade").get<std::string>(), polynomial_from_json(t.at("coeff")));
  return m;
}

/// Row-major: {"rows":r,"cols":c,"entries":[[...],...]}.
template <class C>
Json to_json(const Matrix<C>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(coefficient_json(m(i, j)));
    rows.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

inline Matrix<Rational> rational_matrix_from_json(const Json& j) {
  Matrix<Rational> m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  const auto& e = j.at("entries");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = rational_from_json(e.at(i).at(k));
  return m;
}

inline Matrix<Polynomial> polynomial_matrix_from_json(const Json& j) {
  Matrix<Polynomial> m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  const auto& e = j.at("entries");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = polynomial_from_json(e.at(i).at(k));
  return m;
}

template <class C>
Json to_json(const ProjectiveMatrix<C>& pm) {
  Json j = {{"delta", coefficient_json(pm.delta)}, {"raw", to_json(pm.raw)}};
  if constexpr (std::is_same_v<C, Rational>) j["normalized"] = to_json(pm.normalized());
  return j;
}

/// {"real":[a0..a3],"dual":[c0..c3]}
inline Json to_json(const DualQuaternion& q) {
  Json real = Json::array(), dual = Json::array();
  for (int t = 0; t < 4; ++t) {
    real.push_back(q.real[t].get_str());
    dual.push_back(q.dual[t].get_str());
  }
  return {{"real", real}, {"dual", dual}};
}

inline DualQuaternion dual_quaternion_from_json(const Json& j) {
  DualQuaternion q;
  for (int t = 0; t < 4; ++t) {
    q.real[t] = rational_from_json(j.at("real").at(t));
    q.dual[t] = rational_from_json(j.at("dual").at(t));
  }
  return q;
}

inline Json to_json(const AlgebraSignature& s) { return Json::array({s.p, s.q, s.r}); }

inline AlgebraSignature signature_from_json(const Json& j) {
  return {j.at(0).get<int>(), j.at(1).get<int>(), j.at(2).get<int>()};
}

/// {"signature":[p,q,r],"ambient_dim":d,"exceptional":"...","constraints":[...],"origins":[...],"source":"..."}
inline Json to_json(const VarietySpec& v) {
  Json constraints = Json::array(), origins = Json::array();
  for (const auto& c : v.constraints) {
    constraints.push_back(to_string(c.form));
    origins.push_back(c.origin);
  }
  return {{"signature", to_json(v.signature)},
          {"ambient_dim", v.ambient_dim},
          {"exceptional", to_string(v.exceptional)},
          {"constraints", constraints},
          {"origins", origins},
          {"source", to_string(v.source)}};
}

inline VarietySpec variety_from_json(const Json& j) {
  std::vector<Constraint> constraints;
  const auto& cs = j.at("constraints");
  for (std::size_t i = 0; i < cs.size(); ++i) {
    std::string origin = j.contains("origins") ? j["origins"].at(i).get<std::string>() : std::string();
    constraints.push_back({QuadricForm(polynomial_from_json(cs.at(i))), origin});
  }
  auto src = j.at("source").get<std::string>();
  if (src != "spin_norm" && src != "kinematic_element") throw ParseError("unknown variety source '" + src + "'");
  return {signature_from_json(j.at("signature")), j.at("ambient_dim").get<int>(),
          QuadricForm(polynomial_from_json(j.at("exceptional"))), std::move(constraints),
          src == "spin_norm" ? VarietySource::spin_norm : VarietySource::kinematic_element};
}

inline Json to_json(const CKEntry& e) {
  Json sigs = Json::array();
  for (const auto& s : e.signatures) sigs.push_back(to_json(s));
  Json j = {{"key", e.key},
            {"name", e.name},
            {"dim", e.dim},
            {"absolute_figure", to_string(e.absolute_figure)},
            {"signatures", sigs},
            {"representable", e.representable}};
  j["expected_exceptional"] = e.expected_exceptional ? Json(*e.expected_exceptional) : Json(nullptr);
  j["expected_constraints"] = e.expected_constraints;
  if (e.image_space)
    j["image_space"] = {{"name", e.image_space->name}, {"absolute_figure", to_string(e.image_space->figure)}};
  if (e.point_grade) j["point_grade"] = *e.point_grade;
  return j;
}

inline Json to_json(const VerifyReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"key", r.key}, {"passed", r.passed()}, {"checks", checks}, {"substitutions", r.substitutions}};
}

}  // namespace cliffkin
