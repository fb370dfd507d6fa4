#include "coincal/projective_bundle.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace coincal {

InvariantReport projective_bundle_invariants(const ProjectiveBundleInstance& inst) {
    if (inst.q <= 1)
        throw std::invalid_argument("projective_bundle_invariants: requires q > 1");

    const unsigned long q = inst.q;
    const unsigned long r_abs =
        inst.r < 0 ? static_cast<unsigned long>(-(inst.r + 1)) + 1UL
                   : static_cast<unsigned long>(inst.r);

    InvariantReport rep;
    rep.notes.push_back("selfcoincidence of the circle-bundle projection over CP(" +
                        std::to_string(q) + "), tensor power " + std::to_string(inst.r));
    if (inst.r < 0)
        rep.notes.push_back("negative tensor power folded to |r| = " +
                            std::to_string(r_abs) +
                            " (the congruence is orientation-independent)");

    // q = -1 mod r; modulus 0 would force q = -1, impossible for q > 1.
    const bool congruent = r_abs == 0 ? false : (q + 1) % r_abs == 0;
    const bool q_odd = q % 2 == 1;

    const ExtendedNat zero = ExtendedNat::finite(0);
    const ExtendedNat one = ExtendedNat::finite(1);

    if (congruent && q_odd) {
        rep.n_num = InvariantValue::known(zero);
        rep.n_sharp = InvariantValue::known(zero);
        rep.mcc = InvariantValue::known(zero);
        rep.mc = InvariantValue::known(zero);
        rep.notes.push_back("q = -1 mod r with q odd: all invariants vanish");
        return rep;
    }

    rep.n_num = InvariantValue::known(one);
    rep.n_sharp = InvariantValue::known(one);
    rep.mcc = InvariantValue::known(one);
    if (congruent) {
        rep.mc = InvariantValue::known(one);
        rep.notes.push_back("q = -1 mod r with q even: a single coincidence point remains");
    } else {
        rep.mc = InvariantValue::known(ExtendedNat::infinity());
        rep.notes.push_back("q != -1 mod r: MC is infinite while MCC = 1");
    }
    return rep;
}

}  // namespace coincal
