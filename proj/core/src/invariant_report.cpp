#include "coincal/invariant_report.hpp"

#include <stdexcept>
#include <utility>

namespace coincal {

InvariantValue InvariantValue::known(ExtendedNat v, std::string note) {
    InvariantValue x;
    x.status_ = Status::known;
    x.lo_ = v;
    x.hi_ = std::move(v);
    x.reason_ = std::move(note);
    return x;
}

InvariantValue InvariantValue::bounded(ExtendedNat lo, ExtendedNat hi, std::string note) {
    if (lo > hi) throw std::invalid_argument("InvariantValue::bounded: lo > hi");
    if (lo == hi) return known(std::move(lo), std::move(note));
    InvariantValue x;
    x.status_ = Status::bounded;
    x.lo_ = std::move(lo);
    x.hi_ = std::move(hi);
    x.reason_ = std::move(note);
    return x;
}

InvariantValue InvariantValue::unknown(std::string reason) {
    InvariantValue x;
    x.status_ = Status::unknown;
    x.reason_ = std::move(reason);
    return x;
}

const ExtendedNat& InvariantValue::value() const {
    if (status_ != Status::known)
        throw std::logic_error("InvariantValue::value: not a known value");
    return lo_;
}

std::optional<ExtendedNat> InvariantValue::lower() const {
    if (status_ == Status::unknown) return std::nullopt;
    return lo_;
}

std::optional<ExtendedNat> InvariantValue::upper() const {
    if (status_ == Status::unknown) return std::nullopt;
    return hi_;
}

std::string InvariantValue::str() const {
    switch (status_) {
        case Status::known:
            return lo_.str();
        case Status::bounded:
            return "[" + lo_.str() + ", " + hi_.str() + "]";
        case Status::unknown:
            return "unknown";
    }
    return "unknown";
}

}  // namespace coincal
