#pragma once

#include <string>
#include <vector>

namespace octaves::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool checks_passed = false;
    std::string detail;
    double seconds = 0;
    double budget_seconds = 0;

    bool within_budget() const { return seconds < budget_seconds; }
    bool passed() const { return checks_passed && within_budget(); }
};

/// Runs every acceptance criterion in order.
std::vector<CriterionResult> run_all();

/// One line per criterion: "[PASS] 1. name: detail". Elapsed times are
/// appended only when `timings` is set, so default output is reproducible.
std::string render(const std::vector<CriterionResult>& results, bool timings);

} // namespace octaves::acceptance
