#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bottloc/genus.hpp"
#include "bottloc/injectivity.hpp"
#include "bottloc/profile.hpp"
#include "bottloc/search.hpp"

namespace bottloc {

/// Malformed input: bad JSON syntax, wrong schema, or a structurally invalid
/// profile. Messages carry the position or field path.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline nlohmann::json rational_to_json(const Rational& r) {
  // Decimal strings: arbitrary precision survives every JSON reader.
  return {{"num", r.numerator().str()}, {"den", r.denominator().str()}};
}

inline nlohmann::json profile_to_json(const FixedPointProfile& p) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& pt : p.points)
    points.push_back({{"tangent_weights", pt.tangent_weights}, {"line_weight", pt.line_weight}});
  return {{"dimension", p.dimension}, {"flavor", to_string(p.flavor)}, {"points", points}};
}

/// Canonical interchange form: compact, keys sorted. Identical profiles
/// serialize to identical bytes.
inline std::string serialize_profile(const FixedPointProfile& p) {
  return profile_to_json(p).dump();
}

inline Flavor flavor_from_string(const std::string& s) {
  if (s == "oriented") return Flavor::oriented;
  if (s == "almost-complex") return Flavor::almost_complex;
  throw ParseError("flavor: expected \"oriented\" or \"almost-complex\", got \"" + s + "\"");
}

inline FixedPointProfile profile_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("profile: expected a JSON object");
  for (const auto& key : {"dimension", "flavor", "points"})
    if (!j.contains(key)) throw ParseError(std::string("profile: missing key \"") + key + "\"");
  FixedPointProfile p;
  if (!j["dimension"].is_number_integer()) throw ParseError("dimension: expected an integer");
  p.dimension = j["dimension"].get<int>();
  if (!j["flavor"].is_string()) throw ParseError("flavor: expected a string");
  p.flavor = flavor_from_string(j["flavor"].get<std::string>());
  if (!j["points"].is_array()) throw ParseError("points: expected an array");
  std::size_t index = 0;
  for (const auto& jp : j["points"]) {
    const std::string at = "points[" + std::to_string(index) + "]";
    if (!jp.is_object()) throw ParseError(at + ": expected an object");
    if (!jp.contains("tangent_weights") || !jp["tangent_weights"].is_array())
      throw ParseError(at + ".tangent_weights: expected an array");
    if (!jp.contains("line_weight") || !jp["line_weight"].is_number_integer())
      throw ParseError(at + ".line_weight: expected an integer");
    PointDatum pt;
    std::size_t widx = 0;
    for (const auto& jw : jp["tangent_weights"]) {
      if (!jw.is_number_integer())
        throw ParseError(at + ".tangent_weights[" + std::to_string(widx) + "]: expected an integer");
      pt.tangent_weights.push_back(jw.get<int>());
      ++widx;
    }
    pt.line_weight = jp["line_weight"].get<int>();
    p.points.push_back(std::move(pt));
    ++index;
  }
  ValidationReport report = validate(p);
  if (!report.ok()) {
    std::string msg = "profile:";
    for (const auto& v : report.violations) msg += " " + v + ";";
    throw ParseError(msg);
  }
  return p;
}

inline FixedPointProfile parse_profile(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what()); // carries the byte position
  }
  return profile_from_json(j);
}

inline nlohmann::json consistency_to_json(const ConsistencyReport& report) {
  nlohmann::json moments = nlohmann::json::array();
  for (const auto& m : report.moments)
    moments.push_back({{"t", m.t}, {"value", rational_to_json(m.value)}, {"pass", m.pass}});
  return {{"moments", moments},
          {"chern_top", rational_to_json(report.chern_top)},
          {"chern_integral", report.chern_integral},
          {"consistent", report.consistent}};
}

inline nlohmann::json levels_to_json(const LevelDecomposition& levels) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& level : levels.levels)
    out.push_back({{"line_weight", level.line_weight},
                   {"sum", rational_to_json(level.localized_sum)},
                   {"multiplicity", level.multiplicity}});
  return out;
}

inline nlohmann::json theorem_to_json(const TheoremReport& report) {
  nlohmann::json verdicts = nlohmann::json::array();
  for (std::size_t s = 0; s < report.verdicts.size(); ++s)
    verdicts.push_back({{"statement", s + 1}, {"status", to_string(report.verdicts[s])}});
  nlohmann::json j{{"consistency", consistency_to_json(report.consistency)},
                   {"classification", to_string(report.classification)},
                   {"levels", levels_to_json(report.levels)},
                   {"chern_top", rational_to_json(report.chern_top)},
                   {"verdicts", verdicts},
                   {"vacuous", report.vacuous}};
  if (report.dichotomy != DichotomyCase::none)
    j["dichotomy_case"] =
        report.dichotomy == DichotomyCase::nonzero_everywhere ? "nonzero-everywhere-injective"
                                                              : "zero-not-somewhere-injective";
  return j;
}

inline nlohmann::json audit_to_json(const AuditReport& report) {
  nlohmann::json per_statement = nlohmann::json::array();
  for (std::size_t s = 0; s < 3; ++s)
    per_statement.push_back({{"statement", s + 1},
                             {"verified", report.verified[s]},
                             {"violated", report.violated[s]},
                             {"not_applicable", report.not_applicable[s]}});
  nlohmann::json j{{"profiles", report.profile_count},
                   {"statements", per_statement},
                   {"dichotomy_nonzero_everywhere", report.dichotomy_nonzero_everywhere},
                   {"dichotomy_zero_not_somewhere", report.dichotomy_zero_not_somewhere},
                   {"inconsistent", report.inconsistent},
                   {"clean", report.clean()}};
  if (report.first_violation)
    j["first_violation"] = {{"profile", profile_to_json(report.first_violation->first)},
                            {"statement", report.first_violation->second}};
  return j;
}

inline nlohmann::json search_spec_to_json(const SearchSpec& spec) {
  return {{"dimension", spec.dimension},
          {"points", spec.points},
          {"tangent_bound", spec.tangent_bound},
          {"line_bound", spec.line_bound},
          {"flavor", to_string(spec.flavor)}};
}

/// Catalog: one canonical profile per line, then one summary line.
inline void write_catalog(std::ostream& out, const std::vector<FixedPointProfile>& profiles,
                          const SearchSpec& spec) {
  for (const auto& p : profiles) out << serialize_profile(p) << "\n";
  nlohmann::json summary{
      {"summary", {{"profile_count", profiles.size()}, {"spec", search_spec_to_json(spec)}}}};
  out << summary.dump() << "\n";
}

struct Catalog {
  std::vector<FixedPointProfile> profiles;
  nlohmann::json summary; // null when the catalog carries none
};

inline Catalog read_catalog(std::istream& in) {
  Catalog catalog;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    if (j.is_object() && j.contains("summary")) {
      catalog.summary = j["summary"];
      continue;
    }
    try {
      catalog.profiles.push_back(profile_from_json(j));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return catalog;
}

} // namespace bottloc
