#include "coincal/validate.hpp"

#include <array>

namespace coincal {

ValidationResult validate_chain(const InvariantReport& report, std::size_t n,
                                bool selfcoincidence) {
    ValidationResult result;
    auto flag = [&result](std::string rule, std::string message) {
        result.ok = false;
        result.violations.push_back({std::move(rule), std::move(message)});
    };

    const std::array<std::pair<const char*, const InvariantValue*>, 4> chain = {{
        {"N", &report.n_num},
        {"N#", &report.n_sharp},
        {"MCC", &report.mcc},
        {"MC", &report.mc},
    }};

    for (std::size_t i = 0; i < chain.size(); ++i)
        for (std::size_t j = i + 1; j < chain.size(); ++j) {
            const auto lo = chain[i].second->lower();
            const auto hi = chain[j].second->upper();
            if (lo && hi && *lo > *hi)
                flag(std::string("chain:") + chain[i].first + "<=" + chain[j].first,
                     std::string(chain[i].first) + " has lower bound " + lo->str() +
                         " but " + chain[j].first + " has upper bound " + hi->str());
        }

    if (n != 2 && report.reidemeister) {
        const auto lo = report.mcc.lower();
        if (lo && *lo > *report.reidemeister)
            flag("reidemeister-bound",
                 "MCC lower bound " + lo->str() + " exceeds the Reidemeister count " +
                     report.reidemeister->str());
    }

    if (selfcoincidence) {
        const auto hi = report.mcc.upper();
        if (hi && *hi > ExtendedNat::finite(1))
            flag("selfcoincidence-cap",
                 "MCC upper bound " + hi->str() + " exceeds the selfcoincidence cap 1");
    }

    return result;
}

}  // namespace coincal
