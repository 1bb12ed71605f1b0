#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "algforge/report.hpp"

namespace algforge {

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<Check> checks;
    bool passed() const;
};

inline constexpr int kCriterionCount = 19;

/// Throws Error for an id outside 1..kCriterionCount.
CriterionResult run_criterion(int id, std::uint64_t seed);

/// Every criterion against the built-ins; check names are prefixed by the criterion title.
Report acceptance_report(std::uint64_t seed);

}  // namespace algforge
