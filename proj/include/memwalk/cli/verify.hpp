// verify.hpp
// Seeded invariant suite behind `memwalk verify`: oracle equivalence, memory
// bijection, spectral health, closed-form identities and convergence checks.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "memwalk/cli/config.hpp"

namespace memwalk::cli {

// Default threshold per check name; --tol NAME=VAL overrides.
const std::map<std::string, double>& default_tolerances();

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

VerifyReport run_verify(const RunConfig& cfg);

// One line per check: "PASS name measured=... threshold=... detail".
std::string format_report(const VerifyReport& r);

}  // namespace memwalk::cli
