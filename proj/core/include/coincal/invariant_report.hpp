#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coincal/extended_nat.hpp"

namespace coincal {

/// Status of a single invariant: an exact value, a two-sided interval, or
/// an honest "not determined here" with a reason.
///
/// bounded(v, v) collapses to known(v); intervals always satisfy lo <= hi.
class InvariantValue {
public:
    enum class Status { known, bounded, unknown };

    InvariantValue() = default;  // known finite 0

    static InvariantValue known(ExtendedNat v, std::string note = "");
    static InvariantValue bounded(ExtendedNat lo, ExtendedNat hi, std::string note = "");
    static InvariantValue unknown(std::string reason);

    Status status() const { return status_; }
    bool is_known() const { return status_ == Status::known; }
    bool is_unknown() const { return status_ == Status::unknown; }

    /// Exact value; throws std::logic_error unless status is known.
    const ExtendedNat& value() const;

    /// Interval bounds; empty when the value is unknown (no claim made).
    std::optional<ExtendedNat> lower() const;
    std::optional<ExtendedNat> upper() const;

    /// Reason for an unknown, or an optional caveat on a bound.
    const std::string& reason() const { return reason_; }

    bool operator==(const InvariantValue& rhs) const {
        return status_ == rhs.status_ && lo_ == rhs.lo_ && hi_ == rhs.hi_ &&
               reason_ == rhs.reason_;
    }

    std::string str() const;

private:
    Status status_ = Status::known;
    ExtendedNat lo_;
    ExtendedNat hi_;
    std::string reason_;
};

/// The computed quadruple N <= N# <= MCC <= MC for one coincidence problem,
/// together with the Reidemeister count where it is computable and
/// free-text notes recording which hypothesis produced each field.
struct InvariantReport {
    InvariantValue n_num;    // Nielsen number N
    InvariantValue n_sharp;  // sharper Nielsen number N#
    InvariantValue mcc;      // minimum number of coincidence components
    InvariantValue mc;       // minimum number of coincidence points
    std::optional<ExtendedNat> reidemeister;
    std::vector<std::string> notes;

    bool operator==(const InvariantReport& rhs) const {
        return n_num == rhs.n_num && n_sharp == rhs.n_sharp && mcc == rhs.mcc &&
               mc == rhs.mc && reidemeister == rhs.reidemeister && notes == rhs.notes;
    }
};

}  // namespace coincal
