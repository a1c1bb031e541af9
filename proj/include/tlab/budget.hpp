#pragma once

#include <cstddef>
#include <stdexcept>

namespace tlab {

// Global cap on subdivision and ball budgets, from THOMPSON_LAB_BUDGET.
// Returns the cap (SIZE_MAX when the variable is unset or malformed).
std::size_t global_budget_cap();

inline std::size_t capped_budget(std::size_t requested) {
    std::size_t cap = global_budget_cap();
    return requested < cap ? requested : cap;
}

struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tlab
