#include "coincal/grassmann.hpp"

#include <stdexcept>
#include <string>

namespace coincal {

namespace {

void require_instance(const GrassmannInstance& inst) {
    if (!(inst.k >= 1 && inst.r >= 2 * inst.k))
        throw std::invalid_argument("grassmann: requires r >= 2k >= 2");
}

}  // namespace

mpz_class euler_char_grassmannian(std::size_t r, std::size_t k) {
    if (k < 1 || k >= r)
        throw std::invalid_argument("euler_char_grassmannian: requires 1 <= k < r");
    if (r % 2 == 0 && k % 2 == 1) return 0;
    mpz_class chi;
    mpz_bin_uiui(chi.get_mpz_t(), static_cast<unsigned long>(r / 2),
                 static_cast<unsigned long>(k / 2));
    return chi;
}

std::pair<std::size_t, std::size_t> grassmann_dims(std::size_t r, std::size_t k) {
    if (k < 1 || k >= r)
        throw std::invalid_argument("grassmann_dims: requires 1 <= k < r");
    const std::size_t m = r * k - k * (k + 1) / 2;  // Stiefel manifold V_{r,k}
    const std::size_t n = k * (r - k);              // Grassmannian G_{r,k}
    return {m, n};
}

StableObstruction top_obstruction(const GrassmannInstance& inst) {
    require_instance(inst);
    StableObstruction ob;
    ob.stem_index = inst.k * (inst.k - 1) / 2;
    ob.chi = euler_char_grassmannian(inst.r, inst.k);

    switch (inst.k) {
        case 1:
            // Stem 0 is infinite cyclic; [SO(1)] is the positively framed point.
            ob.status = StableObstruction::Status::evaluated;
            ob.group_order = 0;
            ob.residue = 2 * ob.chi;
            break;
        case 2:
            // Stem 1 has two elements; any even multiple dies.
            ob.status = StableObstruction::Status::evaluated;
            ob.group_order = 2;
            ob.residue = 0;
            break;
        case 3: {
            // Stem 3 has 24 elements with [SO(3)] a generator.
            ob.status = StableObstruction::Status::evaluated;
            ob.group_order = 24;
            mpz_class twice = 2 * ob.chi;
            mpz_mod(ob.residue.get_mpz_t(), twice.get_mpz_t(), ob.group_order.get_mpz_t());
            break;
        }
        default:
            ob.status = StableObstruction::Status::symbolic;
            break;
    }
    return ob;
}

InvariantReport grassmann_selfcoincidence(const GrassmannInstance& inst) {
    require_instance(inst);
    const mpz_class chi = euler_char_grassmannian(inst.r, inst.k);
    const std::size_t r = inst.r;
    const std::size_t k = inst.k;

    InvariantReport rep;
    rep.notes.push_back("selfcoincidence of the frame-to-span projection V_{" +
                        std::to_string(r) + "," + std::to_string(k) + "} -> G_{" +
                        std::to_string(r) + "," + std::to_string(k) +
                        "}; chi = " + chi.get_str());
    if (k == 3)
        rep.notes.push_back("obstruction evaluated with [SO(3)] of order 24 "
                            "in the third stable stem");

    const bool zero_branch = (k % 2 == 0) || k == 7 || k == 9 || chi % 12 == 0;
    if (zero_branch) {
        const ExtendedNat zero = ExtendedNat::finite(0);
        rep.n_num = InvariantValue::known(zero);
        rep.n_sharp = InvariantValue::known(zero);
        rep.mcc = InvariantValue::known(zero);
        rep.mc = InvariantValue::known(zero);
        rep.notes.push_back("k even, k in {7, 9}, or chi = 0 mod 12: "
                            "the maps can be deformed away from each other");
        return rep;
    }

    const bool one_branch = (k == 1 && r % 2 == 1) ||
                            (k == 3 && r % 2 == 1 && r % 12 != 1) ||
                            (k == 5 && r % 6 == 5);
    if (one_branch) {
        const ExtendedNat one = ExtendedNat::finite(1);
        rep.n_num = InvariantValue::known(one);
        rep.n_sharp = InvariantValue::known(one);
        rep.mcc = InvariantValue::known(one);
        rep.mc = InvariantValue::known(one);
        rep.notes.push_back("k = 1 with r odd, k = 3 with r odd and r != 1 mod 12, "
                            "or k = 5 with r = 5 mod 6: the coincidence cannot be removed");
        return rep;
    }

    const ExtendedNat zero = ExtendedNat::finite(0);
    const ExtendedNat one = ExtendedNat::finite(1);
    const std::string open = "no decision clause applies at (r, k) = (" +
                             std::to_string(r) + ", " + std::to_string(k) + ")";
    rep.n_num = InvariantValue::bounded(zero, one, open);
    rep.n_sharp = InvariantValue::bounded(zero, one, open);
    rep.mcc = InvariantValue::bounded(
        zero, one, open + "; selfcoincidence always caps MCC at 1");
    rep.mc = InvariantValue::unknown(open + "; no upper bound for MC is available");
    rep.notes.push_back("open case: reporting the selfcoincidence interval [0, 1]");
    return rep;
}

}  // namespace coincal
