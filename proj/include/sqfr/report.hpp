#pragma once

#include <optional>
#include <string>

#include "json.hpp"

namespace sqfr {

enum class Verdict { Pass, Fail, Skipped, Error };

std::string to_string(Verdict v);

/// Structured outcome of one theorem check on one graph. A fail always
/// carries a witness of the violation; a skip always carries a reason.
struct Report {
    std::string graph6;
    std::string check;
    std::optional<int> s;
    nlohmann::ordered_json computed = nlohmann::ordered_json::object();
    Verdict verdict = Verdict::Pass;
    std::string reason;
    nlohmann::ordered_json witness;  // null unless set

    nlohmann::ordered_json to_json() const;
};

}  // namespace sqfr
