#include "sqfr/report.hpp"

namespace sqfr {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Skipped: return "skipped";
        case Verdict::Error: return "error";
    }
    return "?";
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["graph6"] = graph6;
    j["check"] = check;
    if (s) j["s"] = *s;
    j["computed"] = computed;
    j["verdict"] = to_string(verdict);
    if (!reason.empty()) j["reason"] = reason;
    if (!witness.is_null()) j["witness"] = witness;
    return j;
}

}  // namespace sqfr
