#pragma once

#include <string>
#include <string_view>

#include "coincal/invariant_report.hpp"
#include "coincal/validate.hpp"

namespace coincal {

/// Render a report plus its validation outcome as the stable JSON document
///
///   { "invariants": { "N": ..., "Nsharp": ..., "MCC": ..., "MC": ... },
///     "reidemeister": ..., "notes": [...], "validation": {...} }
///
/// Every integer is encoded as a decimal string and infinity as "inf", so
/// consumers never lose precision. Each invariant carries a "status" tag of
/// "known", "bounded", or "unknown".
std::string report_to_json(const InvariantReport& report,
                           const ValidationResult& validation);

/// Rebuild a report from the JSON document (the "validation" block, being
/// derived data, is ignored). Inverse of report_to_json on report fields.
/// Throws std::invalid_argument on malformed documents.
InvariantReport report_from_json(std::string_view text);

/// Human-readable rendering of the same data.
std::string report_to_text(const InvariantReport& report,
                           const ValidationResult& validation);

}  // namespace coincal
