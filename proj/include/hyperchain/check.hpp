#pragma once

#include <string>
#include <vector>

namespace hyperchain {

enum class CheckStatus { Pass, Fail, ExpectedFail, Skipped };

std::string to_string(CheckStatus s);

/// One verified claim. `detail` carries the witness for failures and
/// expected failures, or a short note otherwise.
struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }
    void add(std::string id, bool ok, std::string detail = "") {
        checks.push_back({std::move(id), ok ? CheckStatus::Pass : CheckStatus::Fail,
                          std::move(detail)});
    }
    void add_status(std::string id, CheckStatus st, std::string detail = "") {
        checks.push_back({std::move(id), st, std::move(detail)});
    }
    void append(const CheckReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
};

} // namespace hyperchain
