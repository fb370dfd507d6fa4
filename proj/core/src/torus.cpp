#include "coincal/torus.hpp"

#include <stdexcept>

#include "coincal/cokernel.hpp"
#include "coincal/smith.hpp"

namespace coincal {

bool cup_product_nonzero_torus(const IntMatrix& d, std::size_t m, std::size_t n) {
    if (d.rows() != n || d.cols() != m)
        throw std::invalid_argument("cup_product_nonzero_torus: d must be n x m");
    // A product of more than m degree-one classes in H*(T^m) vanishes.
    if (n > m) return false;
    return nonzero_minor_exists(d, n);
}

InvariantReport torus_invariants(const TorusInstance& inst) {
    if (inst.m == 0 || inst.n == 0)
        throw std::invalid_argument("torus_invariants: dimensions must be positive");
    if (inst.d.rows() != inst.n)
        throw std::invalid_argument("torus_invariants: d must have n rows");
    if (inst.domain_is_torus && inst.d.cols() != inst.m)
        throw std::invalid_argument(
            "torus_invariants: torus domain requires d to have m columns");

    const std::size_t image_rank = rank(inst.d);
    const CokernelStructure coker = cokernel(inst.d);
    const ExtendedNat card = cardinality(coker);

    InvariantReport rep;
    rep.reidemeister = card;
    rep.notes.push_back("Reidemeister set = cokernel of the difference map on H_1; "
                        "cardinality " + card.str());

    const ExtendedNat zero = ExtendedNat::finite(0);

    if (image_rank < inst.n) {
        // Infinite cokernel: the maps can be deformed away from each other.
        rep.n_num = InvariantValue::known(zero);
        rep.n_sharp = InvariantValue::known(zero);
        rep.mcc = InvariantValue::known(zero);
        rep.mc = InvariantValue::known(zero);
        rep.notes.push_back("image rank " + std::to_string(image_rank) +
                            " < n = " + std::to_string(inst.n) +
                            ": infinite cokernel, all invariants vanish");
        return rep;
    }

    if (inst.domain_is_torus) {
        // Full-rank d on a torus domain: the top cup product is nonzero
        // (its coefficients are the maximal minors of d).
        rep.notes.push_back("image rank = n and the domain is a torus: the product of "
                            "the pulled-back generators is nonzero");
        rep.n_num = InvariantValue::known(card);
        rep.n_sharp = InvariantValue::known(card);
        if (inst.n != 2) {
            rep.mcc = InvariantValue::known(card);
        } else {
            rep.mcc = InvariantValue::bounded(
                card, ExtendedNat::infinity(),
                "MCC equals the cokernel cardinality only for n != 2; "
                "n = 2 is left open");
        }
        if (inst.m > inst.n) {
            rep.mc = InvariantValue::known(ExtendedNat::infinity());
            rep.notes.push_back("m > n with nonzero cup product: MC is infinite");
        } else {
            // m == n here: an n x m matrix of rank n forces m >= n.
            rep.mc = InvariantValue::bounded(
                card, ExtendedNat::infinity(),
                "MC is determined only for m > n; reporting the chain lower bound");
        }
        return rep;
    }

    // Full rank but unknown domain cohomology: the cup-product criterion is
    // out of reach, so only the Reidemeister count bounds survive.
    rep.n_num = InvariantValue::bounded(zero, card);
    rep.n_sharp = InvariantValue::bounded(zero, card);
    rep.mcc = InvariantValue::unknown(
        "domain is not a torus: the cup-product criterion is unavailable");
    rep.mc = InvariantValue::unknown(
        "domain is not a torus: the cup-product criterion is unavailable");
    rep.notes.push_back("image rank = n but the domain is not a torus: "
                        "only bounds are reported");
    return rep;
}

InvariantReport circle_invariants(const IntMatrix& row, std::size_t m) {
    if (row.rows() != 1)
        throw std::invalid_argument("circle_invariants: expected a single-row matrix");
    if (m == 0)
        throw std::invalid_argument("circle_invariants: domain dimension must be positive");

    InvariantReport rep;
    const ExtendedNat zero = ExtendedNat::finite(0);

    if (row.is_zero()) {
        rep.n_num = InvariantValue::known(zero);
        rep.n_sharp = InvariantValue::known(zero);
        rep.mcc = InvariantValue::known(zero);
        rep.mc = InvariantValue::known(zero);
        rep.reidemeister = ExtendedNat::infinity();
        rep.notes.push_back("f1* = f2* on H_1, so f1 is homotopic to f2: "
                            "all invariants vanish");
        return rep;
    }

    const ExtendedNat g = ExtendedNat::finite(gcd_entries(row));
    rep.reidemeister = g;
    rep.n_num = InvariantValue::known(g);
    rep.n_sharp = InvariantValue::known(g);
    rep.mcc = InvariantValue::known(g);
    rep.notes.push_back("MCC = cokernel cardinality = gcd of the row entries = " +
                        g.str());
    if (m > 1) {
        rep.mc = InvariantValue::known(ExtendedNat::infinity());
        rep.notes.push_back("m > 1 with f1 not homotopic to f2: MC is infinite");
    } else {
        rep.mc = InvariantValue::bounded(
            g, ExtendedNat::infinity(),
            "MC is determined only for m > 1; reporting the chain lower bound");
    }
    return rep;
}

}  // namespace coincal
