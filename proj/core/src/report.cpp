#include "knroot/report.hpp"

namespace knroot {

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["suite"] = suite_;
    j["parameters"] = parameters_;
    j["passed"] = passed();
    j["cases_run"] = cases_run_;
    j["failures"] = nlohmann::json::array();
    for (const FailureRecord& f : failures_) {
        nlohmann::json e;
        e["input"] = f.input;
        e["expected"] = f.expected;
        e["actual"] = f.actual;
        e["detail"] = f.detail;
        j["failures"].push_back(std::move(e));
    }
    return j;
}

}  // namespace knroot
