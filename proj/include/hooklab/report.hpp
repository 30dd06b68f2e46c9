#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

namespace hooklab {

/// First point of disagreement found by a check. `property` names the
/// violated sub-property where one applies (e.g. "SC3", "round-trip");
/// q_exp/x_exp locate coefficient mismatches. lhs/rhs hold both computed
/// sides, rendered exactly.
struct Mismatch {
    std::string property;
    std::optional<int> q_exp;
    std::optional<int> x_exp;
    std::string lhs;
    std::string rhs;

    nlohmann::ordered_json to_json() const;
};

struct VerificationReport {
    std::string target;
    std::map<std::string, std::string> parameters;
    bool pass = true;
    std::optional<Mismatch> mismatch;
    double runtime_ms = 0.0;

    void fail(Mismatch m) {
        if (pass) {
            pass = false;
            mismatch = std::move(m);
        }
    }

    nlohmann::ordered_json to_json() const;
};

} // namespace hooklab
