#pragma once

#include <string>
#include <vector>

namespace oscillab {

/// One release-gate check: name, verdict, human-readable margins, runtime.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

int acceptance_check_count();

// Runs check `index` (0-based). Throws std::out_of_range for a bad index;
// any exception inside a check is converted into a failing result.
CheckResult run_acceptance_check(int index);

// Runs every check in order.
std::vector<CheckResult> run_acceptance_suite();

}  // namespace oscillab
