#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "bcpoly/asymptotics.hpp"
#include "bcpoly/theta1.hpp"

namespace bcpoly {

using Json = nlohmann::ordered_json;

// Scalars travel as "p/q" strings, coefficients as {num, den} pairs of
// decimal strings; nothing goes through doubles.

inline Json to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw Error("expected a rational string");
  return parse_rational(j.get<std::string>());
}

inline Json to_fraction_json(const Rational& r) { return {{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}}; }

inline Rational fraction_from_json(const Json& j) {
  Integer num(j.at("num").get<std::string>()), den(j.at("den").get<std::string>());
  if (den <= 0) throw Error("denominator must be positive");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Json to_json(const Partition& p) { return p.parts(); }

inline Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw Error("expected a partition array");
  return Partition(j.get<std::vector<int>>());
}

inline Json terms_to_json(const std::map<Partition, Rational>& terms) {
  Json out = Json::array();
  for (const auto& [nu, c] : terms)
    out.push_back({{"partition", to_json(nu)}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  return out;
}

inline std::map<Partition, Rational> terms_from_json(const Json& j) {
  std::map<Partition, Rational> out;
  for (const auto& t : j.at("terms")) {
    Partition nu = partition_from_json(t.at("partition"));
    if (out.count(nu)) throw Error("repeated term " + to_string(nu));
    out.emplace(nu, fraction_from_json(t));
  }
  return out;
}

inline Json to_json(const SymPoly& f) {
  return {{"type", "sympoly"}, {"n", f.nvars()}, {"basis", "monomial"}, {"terms", terms_to_json(f.terms())}};
}

inline SymPoly sympoly_from_json(const Json& j) {
  if (j.at("type") != "sympoly") throw Error("expected a sympoly");
  SymPoly out(j.at("n").get<int>());
  for (const auto& [nu, c] : terms_from_json(j)) out.add_term(nu, c);
  return out;
}

inline Json to_json(const TorusPoly& f) {
  return {{"type", "toruspoly"}, {"n", f.n}, {"basis", "y-monomial"}, {"terms", terms_to_json(f.y.terms())}};
}

inline TorusPoly toruspoly_from_json(const Json& j) {
  if (j.at("type") != "toruspoly") throw Error("expected a toruspoly");
  TorusPoly out{j.at("n").get<int>(), SymPoly(j.at("n").get<int>())};
  for (const auto& [nu, c] : terms_from_json(j)) out.y.add_term(nu, c);
  return out;
}

inline Json to_json(const ShiftedSymPoly& f) {
  return {{"type", "shifted-sympoly"}, {"n", f.n},          {"theta", to_json(f.theta)},
          {"h", to_json(f.h)},         {"basis", "u-monomial"}, {"terms", terms_to_json(f.u.terms())}};
}

inline ShiftedSymPoly shifted_from_json(const Json& j) {
  if (j.at("type") != "shifted-sympoly") throw Error("expected a shifted-sympoly");
  int n = j.at("n").get<int>();
  ShiftedSymPoly out{n, rational_from_json(j.at("theta")), rational_from_json(j.at("h")), SymPoly(n)};
  for (const auto& [nu, c] : terms_from_json(j)) out.u.add_term(nu, c);
  return out;
}

inline Json to_json(const UniPoly& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coefficients()) coeffs.push_back(to_fraction_json(c));
  return {{"type", "unipoly"}, {"coefficients", coeffs}};
}

inline UniPoly unipoly_from_json(const Json& j) {
  if (j.at("type") != "unipoly") throw Error("expected a unipoly");
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coefficients")) coeffs.push_back(fraction_from_json(c));
  return UniPoly(coeffs);
}

inline Json to_json(const SeriesEntry& e) {
  Json out = {{"series_id", e.series_id}, {"group_pair", e.group_pair}, {"theta", to_json(e.theta)},
              {"a", to_json(e.a)},        {"b", to_json(e.b)},          {"root_system", e.root_system}};
  out["parity"] = e.parity ? Json(*e.parity) : Json(nullptr);
  out["caveat"] = e.caveat ? Json(*e.caveat) : Json(nullptr);
  return out;
}

inline SeriesEntry series_from_json(const Json& j) {
  SeriesEntry e;
  e.series_id = j.at("series_id").get<int>();
  e.group_pair = j.at("group_pair").get<std::string>();
  e.theta = rational_from_json(j.at("theta"));
  e.a = rational_from_json(j.at("a"));
  e.b = rational_from_json(j.at("b"));
  e.root_system = j.at("root_system").get<std::string>();
  if (!j.at("parity").is_null()) e.parity = j.at("parity").get<std::string>();
  if (!j.at("caveat").is_null()) e.caveat = j.at("caveat").get<std::string>();
  return e;
}

}  // namespace bcpoly
