#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coincal/invariant_report.hpp"

namespace coincal {

struct Violation {
    std::string rule;
    std::string message;

    bool operator==(const Violation&) const = default;
};

/// Outcome of the consistency check; ok exactly when no rule fired.
struct ValidationResult {
    bool ok = true;
    std::vector<Violation> violations;
};

/// Check a report against the inequality chain N <= N# <= MCC <= MC, the
/// Reidemeister bound MCC <= #R (which holds for target dimension n != 2),
/// and the selfcoincidence cap MCC <= 1.
///
/// Interval semantics: a pair of claims is inconsistent exactly when the
/// earlier term's lower bound exceeds the later term's upper bound; an
/// unknown value claims nothing and never violates. Diagnostics only, no
/// exceptions.
ValidationResult validate_chain(const InvariantReport& report, std::size_t n,
                                bool selfcoincidence);

}  // namespace coincal
