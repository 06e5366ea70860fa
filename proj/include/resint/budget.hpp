#pragma once

#include <atomic>
#include <cstdint>
#include <string>

#include "resint/errors.hpp"

namespace resint {

/// Work-step accounting shared by every expensive routine. One unit is one
/// elementary reduction step (a leading-term cancellation) or one candidate
/// evaluated in a combinatorial search. Exceeding the limit raises
/// budget_error; computations never truncate silently.
///
/// The counter is atomic so that concurrent trials or jet levels may share
/// one budget.
class Budget {
public:
    static constexpr std::uint64_t kDefaultLimit = 10'000'000;

    explicit Budget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}

    Budget(const Budget&) = delete;
    Budget& operator=(const Budget&) = delete;

    void charge(std::uint64_t n = 1, const char* what = "reduction steps") {
        const std::uint64_t used = used_.fetch_add(n, std::memory_order_relaxed) + n;
        if (used > limit_)
            throw budget_error("step budget exceeded (" + std::to_string(limit_) +
                               " " + what + "); raise --budget to continue");
    }

    std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
    std::atomic<std::uint64_t> used_{0};
};

} // namespace resint
