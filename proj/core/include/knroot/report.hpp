#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace knroot {

struct FailureRecord {
    nlohmann::json input;
    std::string expected;
    std::string actual;
    std::string detail;
};

/// Structured pass/fail record of one verification suite. `passed` is true
/// exactly when no failure was recorded; output is deterministic given the
/// suite's seed.
class VerificationReport {
public:
    VerificationReport(std::string suite, nlohmann::json parameters)
        : suite_(std::move(suite)), parameters_(std::move(parameters)) {}

    void add_case() { ++cases_run_; }
    void add_failure(FailureRecord f) { failures_.push_back(std::move(f)); }

    const std::string& suite() const { return suite_; }
    bool passed() const { return failures_.empty(); }
    std::size_t cases_run() const { return cases_run_; }
    const std::vector<FailureRecord>& failures() const { return failures_; }

    nlohmann::json to_json() const;

private:
    std::string suite_;
    nlohmann::json parameters_;
    std::size_t cases_run_ = 0;
    std::vector<FailureRecord> failures_;
};

}  // namespace knroot
