// Acceptance suite: one line per criterion, failure details underneath.

#include "checks.hpp"

#include <cstdio>

int main() {
    int failed_criteria = 0;
    for (int id = 1; id <= 10; ++id) {
        const auto result = twistgraph::checks::run_criterion(id);
        std::printf("criterion %2d: %-60s %s (%.2fs)\n", id, result.title.c_str(),
                    result.pass() ? "PASS" : "FAIL", result.seconds);
        if (!result.pass()) {
            ++failed_criteria;
            for (const auto& check : result.checks) {
                if (check.pass) continue;
                std::printf("    failed: %s\n        expected: %s\n        actual:   %s\n",
                            check.name.c_str(), check.expected.c_str(), check.actual.c_str());
            }
        }
        std::fflush(stdout);
    }
    if (failed_criteria == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", failed_criteria);
    return 1;
}
