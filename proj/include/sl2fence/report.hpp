#pragma once

#include <string>
#include <vector>

namespace sl2fence {

// Outcome of one exhaustive exact-identity verification run.  Every failure
// is recorded with enough context to reproduce the case by hand.
struct VerificationReport {
    std::string name;
    long checked = 0;
    long passed = 0;
    long vacuous = 0;  // cases where the projection target is absent
    long skipped = 0;  // cases excluded by a singularity precondition
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    void record(bool pass, const std::string& context) {
        ++checked;
        if (pass)
            ++passed;
        else
            failures.push_back(context);
    }
};

enum class CheckStatus { Pass, Fail, Flagged };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "flagged";
    }
}

struct CheckResult {
    std::string name;      // stable identifier of the identity being checked
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    long count(CheckStatus s) const {
        long n = 0;
        for (const auto& c : checks)
            if (c.status == s) ++n;
        return n;
    }
    bool ok() const { return count(CheckStatus::Fail) == 0; }
    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
    }
    void flag(std::string name, std::string detail) {
        checks.push_back({std::move(name), CheckStatus::Flagged, std::move(detail)});
    }
};

}  // namespace sl2fence
