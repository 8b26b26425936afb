#pragma once

#include <string>
#include <vector>

namespace bteo::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;      // one-line metrics summary
    double seconds = 0.0;
};

// Runs acceptance criterion 1..9; throws std::out_of_range otherwise.
CriterionResult run_criterion(int id);

// Criteria making up a named suite: rw, stiff, kasner, conformal-limit,
// unitarity, appendix.  Unknown names throw std::out_of_range.
std::vector<int> suite_criteria(const std::string& suite);

const std::vector<std::string>& suite_names();

}  // namespace bteo::verify
