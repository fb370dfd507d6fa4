#include "coincal/report_io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace coincal {

namespace {

using json = nlohmann::ordered_json;

json extended_to_json(const ExtendedNat& e) { return e.str(); }

ExtendedNat extended_from_json(const json& j) {
    if (!j.is_string())
        throw std::invalid_argument("report_from_json: expected a string-encoded value");
    const std::string s = j.get<std::string>();
    if (s == "inf") return ExtendedNat::infinity();
    return ExtendedNat::finite(mpz_class(s, 10));
}

json value_to_json(const InvariantValue& v) {
    json j;
    switch (v.status()) {
        case InvariantValue::Status::known:
            j["status"] = "known";
            j["value"] = extended_to_json(v.value());
            break;
        case InvariantValue::Status::bounded:
            j["status"] = "bounded";
            j["lo"] = extended_to_json(*v.lower());
            j["hi"] = extended_to_json(*v.upper());
            break;
        case InvariantValue::Status::unknown:
            j["status"] = "unknown";
            break;
    }
    if (!v.reason().empty()) j["reason"] = v.reason();
    return j;
}

InvariantValue value_from_json(const json& j) {
    const std::string status = j.at("status").get<std::string>();
    const std::string reason = j.contains("reason") ? j["reason"].get<std::string>() : "";
    if (status == "known")
        return InvariantValue::known(extended_from_json(j.at("value")), reason);
    if (status == "bounded")
        return InvariantValue::bounded(extended_from_json(j.at("lo")),
                                       extended_from_json(j.at("hi")), reason);
    if (status == "unknown") return InvariantValue::unknown(reason);
    throw std::invalid_argument("report_from_json: unknown status tag '" + status + "'");
}

json validation_to_json(const ValidationResult& v) {
    json j;
    j["ok"] = v.ok;
    j["violations"] = json::array();
    for (const auto& viol : v.violations)
        j["violations"].push_back({{"rule", viol.rule}, {"message", viol.message}});
    return j;
}

}  // namespace

std::string report_to_json(const InvariantReport& report,
                           const ValidationResult& validation) {
    json j;
    j["invariants"] = {{"N", value_to_json(report.n_num)},
                       {"Nsharp", value_to_json(report.n_sharp)},
                       {"MCC", value_to_json(report.mcc)},
                       {"MC", value_to_json(report.mc)}};
    j["reidemeister"] =
        report.reidemeister ? extended_to_json(*report.reidemeister) : json(nullptr);
    j["notes"] = report.notes;
    j["validation"] = validation_to_json(validation);
    return j.dump(2);
}

InvariantReport report_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("report_from_json: ") + e.what());
    }
    try {
        InvariantReport rep;
        const json& inv = j.at("invariants");
        rep.n_num = value_from_json(inv.at("N"));
        rep.n_sharp = value_from_json(inv.at("Nsharp"));
        rep.mcc = value_from_json(inv.at("MCC"));
        rep.mc = value_from_json(inv.at("MC"));
        if (j.contains("reidemeister") && !j["reidemeister"].is_null())
            rep.reidemeister = extended_from_json(j["reidemeister"]);
        if (j.contains("notes"))
            rep.notes = j["notes"].get<std::vector<std::string>>();
        return rep;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("report_from_json: ") + e.what());
    }
}

std::string report_to_text(const InvariantReport& report,
                           const ValidationResult& validation) {
    std::string out;
    auto line = [&out](const char* name, const InvariantValue& v) {
        out += name;
        out += " = ";
        out += v.str();
        if (!v.reason().empty()) {
            out += "    (";
            out += v.reason();
            out += ")";
        }
        out += '\n';
    };
    line("N   ", report.n_num);
    line("N#  ", report.n_sharp);
    line("MCC ", report.mcc);
    line("MC  ", report.mc);
    out += "reidemeister = ";
    out += report.reidemeister ? report.reidemeister->str() : "unknown";
    out += '\n';
    if (!report.notes.empty()) {
        out += "notes:\n";
        for (const auto& n : report.notes) out += "  - " + n + '\n';
    }
    out += "validation: ";
    if (validation.ok) {
        out += "ok\n";
    } else {
        out += "FAILED\n";
        for (const auto& v : validation.violations)
            out += "  ! " + v.rule + ": " + v.message + '\n';
    }
    return out;
}

}  // namespace coincal
