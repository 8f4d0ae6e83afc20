#pragma once

#include <optional>
#include <string>
#include <vector>

namespace zetapair::verify {

struct CheckResult {
    std::string group;
    std::string name;
    bool passed = false;
    std::string detail;  // worst observed value vs the threshold
};

struct VerifyOptions {
    // Empty runs everything; otherwise restrict to these groups
    // (kernels, bounds, paircorr, zeros).
    std::vector<std::string> groups;
    // Replaces every check's comparison tolerance; mainly for fault injection.
    std::optional<double> tolerance_override;
};

std::vector<CheckResult> run_verify(const VerifyOptions& opts);

}  // namespace zetapair::verify
