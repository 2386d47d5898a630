#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace tdl {

// An exhaustive search ran out of its time or size allowance. Never
// converted into a partial answer.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Wall-clock allowance shared by a search; TDL_BUDGET_SECS sets it from the
// environment.
class Budget {
public:
    Budget() = default;
    explicit Budget(std::chrono::duration<double> limit)
        : deadline_(std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(limit))
    {
    }

    static Budget from_env();
    static Budget unlimited() { return Budget{}; }

    bool limited() const { return deadline_.has_value(); }

    // Cheap enough to call in inner loops; the clock is read every 4096 calls.
    void tick(const char* what)
    {
        if (!deadline_ || (++ticks_ & 4095U) != 0)
            return;
        if (std::chrono::steady_clock::now() > *deadline_)
            throw BudgetExceeded(std::string(what) + ": time budget exhausted (TDL_BUDGET_SECS)");
    }

private:
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::uint64_t ticks_ = 0;
};

}  // namespace tdl
