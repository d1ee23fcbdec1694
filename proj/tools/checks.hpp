#pragma once

#include <string>
#include <vector>

namespace twistgraph::checks {

struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<Check> checks;
    double seconds = 0.0;

    bool pass() const;
    std::size_t failed_count() const;
};

// Runs one of the ten suite criteria (1-based id).
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_criteria(const std::vector<int>& ids);

// Scope names accepted by the verify command: "paper-values", "cross-routes",
// "recursion", "all".
std::vector<int> criteria_for_scope(const std::string& scope);

}  // namespace twistgraph::checks
