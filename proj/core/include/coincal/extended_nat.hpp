#pragma once

#include <compare>
#include <string>

#include <gmpxx.h>

namespace coincal {

/// A natural number or infinity; the value domain of the coincidence
/// invariants (minimum numbers may be infinite). Totally ordered with
/// every finite value below infinity.
class ExtendedNat {
public:
    ExtendedNat() = default;  // finite 0

    static ExtendedNat finite(mpz_class v);
    static ExtendedNat infinity() {
        ExtendedNat e;
        e.infinite_ = true;
        return e;
    }

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }

    /// Finite value; throws std::logic_error on infinity.
    const mpz_class& value() const;

    bool operator==(const ExtendedNat& rhs) const {
        return infinite_ == rhs.infinite_ && (infinite_ || value_ == rhs.value_);
    }
    std::strong_ordering operator<=>(const ExtendedNat& rhs) const;

    /// Decimal digits, or "inf".
    std::string str() const { return infinite_ ? "inf" : value_.get_str(); }

private:
    bool infinite_ = false;
    mpz_class value_ = 0;
};

}  // namespace coincal
