// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is nonzero if any criterion fails.

#include "figraph/verify.hpp"

#include <iostream>

int main() {
    int failed = 0;
    for (const auto& criterion : figraph::all_criteria()) {
        const auto result = figraph::run_criterion(criterion);
        std::cout << figraph::result_line(result) << std::endl;
        for (const auto& f : result.findings)
            std::cout << "    finding: " << f << "\n";
        failed += result.passed ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
              << std::endl;
    return failed == 0 ? 0 : 1;
}
