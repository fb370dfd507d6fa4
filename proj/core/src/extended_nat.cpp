#include "coincal/extended_nat.hpp"

#include <stdexcept>
#include <utility>

namespace coincal {

ExtendedNat ExtendedNat::finite(mpz_class v) {
    if (v < 0) throw std::invalid_argument("ExtendedNat::finite: negative value");
    ExtendedNat e;
    e.value_ = std::move(v);
    return e;
}

const mpz_class& ExtendedNat::value() const {
    if (infinite_) throw std::logic_error("ExtendedNat::value: infinite");
    return value_;
}

std::strong_ordering ExtendedNat::operator<=>(const ExtendedNat& rhs) const {
    if (infinite_ || rhs.infinite_) {
        if (infinite_ && rhs.infinite_) return std::strong_ordering::equal;
        return infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    const int c = cmp(value_, rhs.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace coincal
