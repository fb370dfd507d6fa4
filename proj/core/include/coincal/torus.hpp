#pragma once

#include <cstddef>

#include "coincal/int_matrix.hpp"
#include "coincal/invariant_report.hpp"

namespace coincal {

/// A coincidence problem f1, f2 : M -> (S^1)^n described by the matrix d of
/// f1* - f2* on first homology (rows = n, cols = rank of H_1(M)).
///
/// When the domain is itself a torus T^m, d is n x m and the full decision
/// procedure applies; otherwise only the vanishing branch is decisive.
struct TorusInstance {
    std::size_t m = 1;  // domain dimension
    std::size_t n = 1;  // target dimension
    IntMatrix d;
    bool domain_is_torus = true;
};

/// Whether the product of the n pulled-back degree-one generator classes is
/// nonzero in H^n of the torus domain T^m. In the exterior algebra the
/// coefficients of that product are exactly the n x n minors of d, so this
/// reduces to a maximal-minor test; it returns false outright when n > m.
bool cup_product_nonzero_torus(const IntMatrix& d, std::size_t m, std::size_t n);

/// Full decision procedure for torus targets. Throws std::invalid_argument
/// when the instance shape is inconsistent (d.rows != n, or a torus domain
/// with d.cols != m).
InvariantReport torus_invariants(const TorusInstance& inst);

/// Circle target special case: row is the 1 x b matrix of f1* - f2* and m
/// the domain dimension. A zero row means the maps are homotopic.
InvariantReport circle_invariants(const IntMatrix& row, std::size_t m);

}  // namespace coincal
