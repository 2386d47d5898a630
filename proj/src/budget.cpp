#include "tdl/budget.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace tdl {

Budget Budget::from_env()
{
    const char* raw = std::getenv("TDL_BUDGET_SECS");
    if (raw == nullptr || *raw == '\0')
        return Budget{};
    char* end = nullptr;
    const double secs = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !std::isfinite(secs) || secs < 0)
        throw std::invalid_argument(std::string("TDL_BUDGET_SECS must be a non-negative number of seconds, got '") +
                                    raw + "'");
    return Budget(std::chrono::duration<double>(secs));
}

}  // namespace tdl
