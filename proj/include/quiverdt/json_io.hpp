#pragma once

#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "quiverdt/coeff_fraction.hpp"
#include "quiverdt/quiver.hpp"
#include "quiverdt/text_format.hpp"

namespace quiverdt {

// Insertion-ordered JSON keeps renderings byte-stable across runs.
using Json = nlohmann::ordered_json;

struct QuiverSpec {
  Quiver quiver;
  std::optional<Stability> theta;
};

namespace detail {

inline long long json_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer())
    throw QuiverInputError(what + " must be an integer, got " + j.dump());
  return j.get<long long>();
}

}  // namespace detail

// Parse a quiver description document:
//   {"vertices": ["a","b"], "arrows": [[0,2],[0,0]], "theta": [1,0]}
// "arrows" rows are indexed by source vertex; "theta" is optional.
inline QuiverSpec parse_quiver_spec(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw QuiverInputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw QuiverInputError("quiver document must be a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw QuiverInputError("missing or invalid \"vertices\" array");
  if (!doc.contains("arrows") || !doc["arrows"].is_array())
    throw QuiverInputError("missing or invalid \"arrows\" matrix");

  std::vector<std::string> labels;
  for (const Json& v : doc["vertices"]) {
    if (!v.is_string()) throw QuiverInputError("vertex labels must be strings");
    labels.push_back(v.get<std::string>());
  }
  const std::size_t n = labels.size();

  std::vector<std::vector<long long>> arrows;
  if (doc["arrows"].size() != n)
    throw QuiverInputError("arrow matrix is not square: expected " + std::to_string(n) +
                           " rows, got " + std::to_string(doc["arrows"].size()));
  for (const Json& row : doc["arrows"]) {
    if (!row.is_array() || row.size() != n)
      throw QuiverInputError("arrow matrix is not square: every row needs " + std::to_string(n) +
                             " entries");
    std::vector<long long> r;
    for (const Json& a : row) {
      const long long x = detail::json_int(a, "arrow multiplicity");
      if (x < 0) throw QuiverInputError("arrow multiplicities must be nonnegative, got " +
                                        std::to_string(x));
      r.push_back(x);
    }
    arrows.push_back(std::move(r));
  }

  QuiverSpec spec{[&] {
                    try {
                      return Quiver(std::move(labels), std::move(arrows));
                    } catch (const std::invalid_argument& e) {
                      throw QuiverInputError(e.what());
                    }
                  }(),
                  std::nullopt};

  if (doc.contains("theta")) {
    if (!doc["theta"].is_array() || doc["theta"].size() != n)
      throw QuiverInputError("\"theta\" must be an integer array matching the vertex count");
    std::vector<long long> theta;
    for (const Json& t : doc["theta"]) theta.push_back(detail::json_int(t, "theta entry"));
    spec.theta = Stability(std::move(theta));
  }
  return spec;
}

inline QuiverSpec parse_quiver_spec(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_quiver_spec(text);
}

// Laurent polynomial as {"coeffs": {"<v-exponent>": "<coefficient>"},
// "pretty": ..., "latex": ...}; decimal strings keep arbitrary precision
// intact. Coefficient keys are listed in decreasing exponent order.
inline Json polynomial_to_json(const VPolynomial& p) {
  Json coeffs = Json::object();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    coeffs[std::to_string(it->first)] = it->second.str();
  Json out;
  out["coeffs"] = std::move(coeffs);
  out["pretty"] = to_pretty(p);
  out["latex"] = to_latex(p);
  return out;
}

inline VPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_object())
    throw QuiverInputError("polynomial document needs a \"coeffs\" object");
  VPolynomial p;
  for (const auto& [key, value] : j["coeffs"].items()) {
    const VExp e = std::stoll(key);
    const BigInt c(value.get<std::string>());
    p += VPolynomial::monomial(c, e);
  }
  return p;
}

inline Json fraction_to_json(const CoeffFraction& f) {
  Json out = polynomial_to_json(f.numerator());
  out["pretty"] = to_pretty(f);
  out["latex"] = to_latex(f);
  out["denominator_factors"] = f.denominator().factors();
  return out;
}

inline CoeffFraction fraction_from_json(const Json& j) {
  VPolynomial num = polynomial_from_json(j);
  std::vector<long long> factors;
  if (j.contains("denominator_factors"))
    factors = j["denominator_factors"].get<std::vector<long long>>();
  return CoeffFraction(std::move(num), DenominatorMultiset(std::move(factors)));
}

inline Json dim_vector_to_json(const DimVector& d) { return Json(d.entries()); }

inline Json quiver_to_json(const Quiver& q) {
  Json out;
  out["vertices"] = q.labels();
  out["arrows"] = q.arrows();
  return out;
}

inline Json make_result_document(bool ok, const std::string& command, Json result,
                                 std::vector<std::string> warnings = {}) {
  Json doc;
  doc["ok"] = ok;
  doc["command"] = command;
  doc["result"] = std::move(result);
  doc["warnings"] = std::move(warnings);
  return doc;
}

}  // namespace quiverdt
