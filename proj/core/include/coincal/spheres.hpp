#pragma once

#include <cstddef>
#include <cstdint>

#include "coincal/invariant_report.hpp"

namespace coincal {

/// Degree data of a class h in pi_3(S^2), identified with the integers by
/// the Hopf invariant. The path-space degree keeps the pair (Freudenthal
/// suspension mod 2, Hopf invariant); stabilizing forgets the Hopf slot and
/// the purely homological shadow is identically zero.
struct HopfDegreeReport {
    std::int64_t hopf = 0;        // the class itself
    int suspension = 0;           // mod 2 component of the path-space degree
    std::int64_t hopf_component = 0;  // integer component of the path-space degree
    int omega = 0;                // stabilized degree in the 2-element stem
    int homological = 0;          // always zero

    bool operator==(const HopfDegreeReport&) const = default;
};

/// Root problem f : S^m -> S^n, n >= 2, against a constant map. N# and MCC
/// are 0 or 1 by nullhomotopy alone; N drops to the interval [0, 1] at the
/// dimension pairs where a class with vanishing stabilized degree but
/// essential sharp degree exists. Throws for n < 2 (use circle_invariants).
InvariantReport sphere_root_invariants(std::size_t m, std::size_t n, bool nullhomotopic);

/// Whether (m, n) is one of the dimension pairs admitting a map whose
/// Nielsen number is 0 while the sharp Nielsen number is 1: the explicit
/// list (8,4), (9,4), (9,3), (10,4), (16,8), (17,8), (24,6), the family
/// (10 + n, n) for 3 <= n <= 11, and m = 2n - 1 for odd n not in {1, 3, 7}.
bool exceptional_sphere_pair(std::size_t m, std::size_t n);

/// Degrees of the class h in pi_3(S^2): suspension mod 2 plus the Hopf
/// invariant itself. All three degree maps are additive in h, and the pair
/// (suspension, Hopf component) vanishes only at h = 0.
HopfDegreeReport hopf_degrees(std::int64_t h);

}  // namespace coincal
