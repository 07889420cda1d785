#pragma once

#include <string>
#include <vector>

namespace ltskit {

/// Outcome of one structural check. Skips record why a check's hypotheses do
/// not apply: the field characteristic, a hypothesis of the statement (e.g. a
/// zero center), or a minimal polynomial that fails to split over the field.
enum class CheckStatus { Pass, Fail, SkippedChar, SkippedHypothesis, SkippedField };

inline std::string status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::SkippedChar: return "skipped(char)";
        case CheckStatus::SkippedHypothesis: return "skipped(hypothesis)";
        case CheckStatus::SkippedField: return "skipped(field)";
    }
    return "?";
}

struct CheckResult {
    std::string id;         // stable machine-readable identifier
    std::string statement;  // the property verified, in mathematical notation
    CheckStatus status = CheckStatus::Pass;
    std::string details;    // dimensions, counterexample witness on failure
};

inline bool any_failed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (r.status == CheckStatus::Fail) return true;
    return false;
}

}  // namespace ltskit
