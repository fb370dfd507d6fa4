#pragma once

#include <cstddef>
#include <utility>

#include <gmpxx.h>

#include "coincal/invariant_report.hpp"

namespace coincal {

/// Selfcoincidence problem for the frame-to-span projection
/// V_{r,k} -> G_{r,k} (orthonormal k-frames to k-planes in R^r).
/// Requires r >= 2k >= 2.
struct GrassmannInstance {
    std::size_t r = 2;
    std::size_t k = 1;
};

/// The framed bordism class 2 * chi(G_{r,k}) * [SO(k)] in the stable stem
/// of degree k(k-1)/2. For k <= 3 the stem is tabulated and the class is
/// evaluated as a residue; from k = 4 on it stays symbolic.
struct StableObstruction {
    enum class Status { evaluated, symbolic };

    std::size_t stem_index = 0;  // k(k-1)/2
    mpz_class chi;
    Status status = Status::symbolic;

    // Meaningful only when evaluated: the order of the stem group
    // (0 encodes the infinite cyclic group) and the reduced residue.
    mpz_class group_order;
    mpz_class residue;
};

/// Euler characteristic of the real Grassmannian G_{r,k}: zero when r is
/// even and k is odd, binomial(floor(r/2), floor(k/2)) otherwise.
/// Requires 1 <= k < r.
mpz_class euler_char_grassmannian(std::size_t r, std::size_t k);

/// (dim V_{r,k}, dim G_{r,k}); the difference is always k(k-1)/2.
/// Requires 1 <= k < r.
std::pair<std::size_t, std::size_t> grassmann_dims(std::size_t r, std::size_t k);

/// Top obstruction for the instance; throws unless r >= 2k >= 2.
/// [SO(3)] is taken as a generator of the 24-element third stem, the unique
/// order for which the class vanishes exactly when chi = 0 mod 12.
StableObstruction top_obstruction(const GrassmannInstance& inst);

/// Decision table for MCC(f,f) and MC(f,f). Zero branch: k even, k in
/// {7, 9}, or chi = 0 mod 12. One branch: k = 1 with r odd, k = 3 with r
/// odd and r != 1 mod 12, or k = 5 with r = 5 mod 6. Remaining cases are
/// reported as the honest interval [0, 1] (selfcoincidence caps MCC at 1)
/// with MC left unknown.
InvariantReport grassmann_selfcoincidence(const GrassmannInstance& inst);

}  // namespace coincal
