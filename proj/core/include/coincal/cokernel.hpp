#pragma once

#include <vector>

#include "coincal/extended_nat.hpp"
#include "coincal/int_matrix.hpp"

namespace coincal {

/// Isomorphism type of Z^rows / image(a): a free part plus a cyclic
/// torsion chain Z/t_1 x ... x Z/t_k with t_1 | t_2 | ... and every
/// t_i > 1 (unit factors are dropped).
struct CokernelStructure {
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion_factors;

    bool operator==(const CokernelStructure& rhs) const {
        return free_rank == rhs.free_rank && torsion_factors == rhs.torsion_factors;
    }
};

/// Cokernel of the homomorphism Z^cols -> Z^rows given by a.
CokernelStructure cokernel(const IntMatrix& a);

/// Number of elements: infinite iff the free rank is positive, otherwise
/// the product of the torsion factors (1 for a surjection).
ExtendedNat cardinality(const CokernelStructure& c);

/// Reidemeister count for maps into a torus: with d the matrix of the
/// difference of the two induced maps on first homology, the Reidemeister
/// set is the cokernel of d and this returns its cardinality.
///
/// Only meaningful for abelian (torus or circle) targets.
ExtendedNat reidemeister_count(const IntMatrix& d);

}  // namespace coincal
