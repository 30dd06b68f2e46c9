#include "hooklab/report.hpp"

namespace hooklab {

nlohmann::ordered_json Mismatch::to_json() const {
    nlohmann::ordered_json j;
    if (!property.empty()) j["property"] = property;
    if (q_exp) j["q"] = *q_exp;
    if (x_exp) j["x"] = *x_exp;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    return j;
}

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["target"] = target;
    j["parameters"] = parameters;
    j["status"] = pass ? "pass" : "fail";
    if (mismatch) j["mismatch"] = mismatch->to_json();
    j["runtime_ms"] = runtime_ms;
    return j;
}

} // namespace hooklab
