#include "coincal/spheres.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace coincal {

InvariantReport sphere_root_invariants(std::size_t m, std::size_t n, bool nullhomotopic) {
    if (n < 2)
        throw std::invalid_argument(
            "sphere_root_invariants: requires n >= 2; the circle target is "
            "handled by circle_invariants");
    if (m == 0)
        throw std::invalid_argument("sphere_root_invariants: requires m >= 1");

    InvariantReport rep;
    const ExtendedNat zero = ExtendedNat::finite(0);
    const ExtendedNat one = ExtendedNat::finite(1);

    if (nullhomotopic) {
        rep.n_num = InvariantValue::known(zero);
        rep.n_sharp = InvariantValue::known(zero);
        rep.mcc = InvariantValue::known(zero);
        // MCC = 0 and MC = 0 are equivalent (an empty coincidence set).
        rep.mc = InvariantValue::known(zero);
        rep.notes.push_back("f is nullhomotopic: f can be deformed off the root point");
        return rep;
    }

    rep.n_sharp = InvariantValue::known(one);
    rep.mcc = InvariantValue::known(one);
    if (exceptional_sphere_pair(m, n)) {
        rep.n_num = InvariantValue::bounded(
            zero, one,
            "a gap map with N = 0 < N# = 1 exists at (m, n) = (" + std::to_string(m) +
                ", " + std::to_string(n) + "), so N depends on the class of f");
        rep.notes.push_back("(m, n) is an exceptional pair: N and N# can differ");
    } else {
        rep.n_num = InvariantValue::known(one);
    }
    rep.mc = InvariantValue::bounded(
        one, ExtendedNat::infinity(),
        "only the chain lower bound MC >= MCC is claimed");
    rep.notes.push_back("f is essential: N# = MCC = 1");
    return rep;
}

bool exceptional_sphere_pair(std::size_t m, std::size_t n) {
    static constexpr std::pair<std::size_t, std::size_t> listed[] = {
        {8, 4}, {9, 4}, {9, 3}, {10, 4}, {16, 8}, {17, 8}, {24, 6}};
    for (const auto& p : listed)
        if (p.first == m && p.second == n) return true;
    if (n >= 3 && n <= 11 && m == 10 + n) return true;
    if (n % 2 == 1 && n != 1 && n != 3 && n != 7 && m == 2 * n - 1) return true;
    return false;
}

HopfDegreeReport hopf_degrees(std::int64_t h) {
    HopfDegreeReport r;
    r.hopf = h;
    r.suspension = static_cast<int>(((h % 2) + 2) % 2);
    r.hopf_component = h;
    r.omega = r.suspension;
    r.homological = 0;
    return r;
}

}  // namespace coincal
