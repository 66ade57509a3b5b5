#pragma once

#include "loccon/parity.hpp"

#include <json.hpp>

#include <string>

namespace loccon {

using Json = nlohmann::ordered_json;

/// Machine integers become JSON numbers, larger values decimal strings.
Json integer_json(const Integer& x);
/// Accepts a JSON integer or a decimal string; throws std::invalid_argument.
Integer integer_from_json(const Json& j);

/// "good", "split_multiplicative", "nonsplit_multiplicative", "additive", "unknown".
std::string reduction_type_name(const ReductionType& t);
ReductionType reduction_type_from_name(const std::string& s);

/// 1, 2, 3, 4, 6 as numbers; "noncyclic" and "unknown" as strings.
Json defect_json(SemistabilityDefect e);
SemistabilityDefect defect_from_json(const Json& j);

Json site_json(const PrimeSite& v);
PrimeSite site_from_json(const Json& j);

Json tower_json(const TowerSpec& t);
TowerSpec tower_from_json(const Json& j);

/// Throws std::invalid_argument on a schema version or shape mismatch.
Json to_json(const ParityReport& r);
ParityReport report_from_json(const Json& j);

/// Human-readable view of the JSON report.
std::string render_text(const ParityReport& r);

}  // namespace loccon
