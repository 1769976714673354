#pragma once

// JSON report envelope (schema v1) and payload converters.

#include <json.hpp>

#include "repdim/auslander.hpp"
#include "repdim/bounds.hpp"

namespace repdim::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "repdim-report/1";
inline constexpr const char* kToolVersion = "0.1.0";

Json to_json(const Scalar& s);
Json to_json(const Vector& v);
Json to_json(const BoundReport& r);
Json to_json(const GlobalDimReport& r);
Json to_json(const UpperBoundWitness& w);

/// Why no upper bound is attached (empty when one is).
std::string upper_missing_reason(const BoundReport& r);

/// Report minus its "timing" member, for determinism comparisons.
Json without_timing(Json report);

/// One "path: value" line per leaf.
std::string render_text(const Json& report);

} // namespace repdim::cli
