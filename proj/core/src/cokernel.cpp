#include "coincal/cokernel.hpp"

#include "coincal/smith.hpp"

namespace coincal {

CokernelStructure cokernel(const IntMatrix& a) {
    const SmithDecomposition d = smith_normal_form(a);
    CokernelStructure c;
    c.free_rank = a.rows() - d.factors.size();
    for (const auto& f : d.factors)
        if (f > 1) c.torsion_factors.push_back(f);
    return c;
}

ExtendedNat cardinality(const CokernelStructure& c) {
    if (c.free_rank > 0) return ExtendedNat::infinity();
    mpz_class n = 1;
    for (const auto& f : c.torsion_factors) n *= f;
    return ExtendedNat::finite(n);
}

ExtendedNat reidemeister_count(const IntMatrix& d) {
    return cardinality(cokernel(d));
}

}  // namespace coincal
