#pragma once

#include <string>
#include <vector>

namespace nabla::cli {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

/// scope: counting, recurrence, calculus or all. Throws std::invalid_argument
/// for an unknown scope.
std::vector<CheckResult> run_checks(const std::string& scope);

}  // namespace nabla::cli
