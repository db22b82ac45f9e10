#include "evcalc/json_io.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace evcalc::io {

namespace {

double number(const Json& j, const char* key) {
  if (!j.is_object()) throw ValidationError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ValidationError(std::string("missing field \"") + key + "\"");
  if (!it->is_number()) throw ValidationError(std::string("field \"") + key + "\" is not a number");
  return it->get<double>();
}

std::string kind_of(const Json& j) {
  if (!j.is_object()) throw ValidationError("expected a JSON object");
  const auto it = j.find("kind");
  if (it == j.end() || !it->is_string()) throw ValidationError("missing string field \"kind\"");
  return it->get<std::string>();
}

Json encode_delta(double delta) {
  if (std::isinf(delta)) return delta > 0 ? "Infinity" : "-Infinity";
  return delta;
}

double decode_delta(const Json& j) {
  const auto it = j.find("delta");
  if (it == j.end()) throw ValidationError("missing field \"delta\"");
  if (it->is_number()) return it->get<double>();
  if (it->is_string()) {
    const auto s = it->get<std::string>();
    if (s == "Infinity") return std::numeric_limits<double>::infinity();
    if (s == "-Infinity") return -std::numeric_limits<double>::infinity();
  }
  throw ValidationError("field \"delta\" must be a number, \"Infinity\" or \"-Infinity\"");
}

}  // namespace

Json to_json(const MassAssignmentd& m) {
  return {{"m_h", m.m_h()}, {"m_not_h", m.m_not_h()}, {"m_theta", m.m_theta()}};
}

Json to_json(const BeliefIntervald& iv) { return {{"bel", iv.bel()}, {"pl", iv.pl()}}; }

Json to_json(const EvidenceWeightsd& w) {
  if (w.is_finite()) {
    return {{"kind", "finite"}, {"w_plus", w.w_plus()}, {"w_minus", w.w_minus()}};
  }
  return {{"kind", "infinite"}, {"delta", encode_delta(w.delta())}};
}

Json to_json(const FrequencyIntervald& fi) {
  if (fi.is_point()) return {{"kind", "point"}, {"value", fi.value()}};
  return {{"kind", "interval"}, {"l", fi.l()}, {"u", fi.u()}};
}

Json to_json(const EvidenceCountsd& c) {
  return {{"w_plus", c.w_plus()}, {"w_total", c.w_total()}};
}

Json to_json(const ConflictReportd& c) { return {{"conflict", {c.first, c.second}}}; }

Json to_json(const LuOutcomed& outcome) {
  return std::visit([](const auto& v) { return to_json(v); }, outcome);
}

Json to_json(const lab::Trajectory& traj) {
  Json rows = Json::array();
  for (const auto& r : traj.rows) {
    rows.push_back({{"t", r.t},
                    {"t_plus", r.t_plus},
                    {"bel", r.ds_bel},
                    {"pl", r.ds_pl},
                    {"l", r.lu_l},
                    {"u", r.lu_u},
                    {"f", r.freq ? Json(*r.freq) : Json(nullptr)}});
  }
  return rows;
}

MassAssignmentd mass_from_json(const Json& j) {
  return MassAssignmentd::make(number(j, "m_h"), number(j, "m_not_h"), number(j, "m_theta"));
}

BeliefIntervald belief_from_json(const Json& j) {
  return BeliefIntervald::make(number(j, "bel"), number(j, "pl"));
}

EvidenceWeightsd weights_from_json(const Json& j) {
  const auto kind = kind_of(j);
  if (kind == "finite") {
    return EvidenceWeightsd::finite(number(j, "w_plus"), number(j, "w_minus"));
  }
  if (kind == "infinite") return EvidenceWeightsd::infinite(decode_delta(j));
  throw ValidationError("unknown weights kind \"" + kind + "\"");
}

FrequencyIntervald frequency_from_json(const Json& j) {
  const auto kind = kind_of(j);
  if (kind == "interval") return FrequencyIntervald::interval(number(j, "l"), number(j, "u"));
  if (kind == "point") return FrequencyIntervald::point(number(j, "value"));
  throw ValidationError("unknown frequency kind \"" + kind + "\"");
}

EvidenceCountsd counts_from_json(const Json& j) {
  return EvidenceCountsd::make(number(j, "w_plus"), number(j, "w_total"));
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

bool looks_like_mass(const Json& j) { return j.is_object() && j.contains("m_h"); }
bool looks_like_belief(const Json& j) { return j.is_object() && j.contains("bel"); }

}  // namespace evcalc::io
