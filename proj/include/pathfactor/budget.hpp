#pragma once

#include <stdexcept>
#include <string>

namespace pathfactor {

// Max graph order for the subset-enumeration operations.
inline constexpr int kDefaultBudget = 18;

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded(const std::string& op, int n, int budget)
        : std::runtime_error(op + ": order " + std::to_string(n) +
                             " exceeds enumeration budget " + std::to_string(budget)) {}
};

}  // namespace pathfactor
