#ifndef WB_REPRO_HPP
#define WB_REPRO_HPP

#include <string>
#include <vector>

namespace wb {

/// One acceptance row: a numbered end-to-end check over the full stack.
struct CriterionResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string detail;   // measured values or the first failure reason
    double seconds = 0.0;
};

/// Runs the eleven end-to-end checks. quick=true shrinks the search bounds of
/// the expensive rows (7, 9, 10, 11) for a fast smoke pass.
std::vector<CriterionResult> run_criteria(bool quick = false);

/// Fixed-width pass/fail table with timings.
std::string render_criteria(const std::vector<CriterionResult>& rows);

bool all_passed(const std::vector<CriterionResult>& rows);

}  // namespace wb

#endif
