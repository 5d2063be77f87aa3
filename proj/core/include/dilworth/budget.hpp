#pragma once

#include <chrono>
#include <cstdint>

namespace dilworth {

/// Wall-clock allowance for one solver call. Solvers poll `expired()` and
/// return a flagged non-optimal result instead of running past the deadline.
class Budget {
public:
    using clock = std::chrono::steady_clock;

    Budget() : Budget(default_seconds()) {}
    explicit Budget(double seconds)
        : deadline_(clock::now() + std::chrono::duration_cast<clock::duration>(
                                       std::chrono::duration<double>(seconds))) {}

    static Budget unlimited() { return Budget(1e9); }

    /// Seconds from DILWORTH_BUDGET when set and positive, else 60.
    static double default_seconds();

    bool expired() const {
        if (++polls_ % 256 != 0) {
            return tripped_;
        }
        if (clock::now() >= deadline_) {
            tripped_ = true;
        }
        return tripped_;
    }

    /// Forces an immediate clock check.
    bool expired_now() const {
        if (clock::now() >= deadline_) {
            tripped_ = true;
        }
        return tripped_;
    }

    double remaining_seconds() const {
        return std::chrono::duration<double>(deadline_ - clock::now()).count();
    }

private:
    clock::time_point deadline_;
    mutable std::uint64_t polls_ = 0;
    mutable bool tripped_ = false;
};

}  // namespace dilworth
