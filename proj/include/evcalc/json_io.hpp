#ifndef EVCALC_JSON_IO_HPP
#define EVCALC_JSON_IO_HPP

// JSON forms of the value types. Field names are part of the external
// interface and must not change:
//
//   {"m_h":…, "m_not_h":…, "m_theta":…}
//   {"bel":…, "pl":…}
//   {"kind":"finite", "w_plus":…, "w_minus":…} | {"kind":"infinite", "delta":…}
//   {"kind":"interval", "l":…, "u":…} | {"kind":"point", "value":…}
//   {"w_plus":…, "w_total":…}
//   {"conflict":[v1, v2]}
//
// An infinite delta is written as the string "Infinity" or "-Infinity".
// Parsers throw ValidationError on missing fields, wrong types or values
// that break a type invariant.

#include <json.hpp>

#include "evcalc/binary_frame.hpp"
#include "evcalc/convergence.hpp"
#include "evcalc/evidence_scale.hpp"
#include "evcalc/frequency.hpp"

namespace evcalc::io {

using Json = nlohmann::json;

Json to_json(const MassAssignmentd& m);
Json to_json(const BeliefIntervald& iv);
Json to_json(const EvidenceWeightsd& w);
Json to_json(const FrequencyIntervald& fi);
Json to_json(const EvidenceCountsd& c);
Json to_json(const ConflictReportd& c);
Json to_json(const LuOutcomed& outcome);
Json to_json(const lab::Trajectory& traj);

MassAssignmentd mass_from_json(const Json& j);
BeliefIntervald belief_from_json(const Json& j);
EvidenceWeightsd weights_from_json(const Json& j);
FrequencyIntervald frequency_from_json(const Json& j);
EvidenceCountsd counts_from_json(const Json& j);

/// Parses text, turning syntax errors into ValidationError.
Json parse(const std::string& text);

bool looks_like_mass(const Json& j);
bool looks_like_belief(const Json& j);

}  // namespace evcalc::io

#endif  // EVCALC_JSON_IO_HPP
