#pragma once

#include <cstddef>

#include "coincal/invariant_report.hpp"

namespace coincal {

/// Selfcoincidence of the fiber projection from the unit circle bundle of
/// the r-th tensor power of the canonical line bundle over CP(q), q > 1.
/// The sign of r is immaterial (tensor powers differing by orientation),
/// so negative r is folded to |r|.
struct ProjectiveBundleInstance {
    std::size_t q = 2;  // complex projective dimension, q > 1
    long r = 1;         // tensor power
};

/// Three-branch table keyed by the congruence q = -1 mod |r| and the parity
/// of q. r = 0 makes the congruence demand q = -1, which never holds, so it
/// lands in the infinite-MC branch.
InvariantReport projective_bundle_invariants(const ProjectiveBundleInstance& inst);

}  // namespace coincal
