#include "tlab/budget.hpp"

#include <cstdlib>

namespace tlab {

std::size_t global_budget_cap() {
    const char* env = std::getenv("THOMPSON_LAB_BUDGET");
    if (!env) return static_cast<std::size_t>(-1);
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || v == 0) return static_cast<std::size_t>(-1);
    return static_cast<std::size_t>(v);
}

}  // namespace tlab
