#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace worm {

// Thrown on invalid arguments and violated preconditions.
class contract_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Node/time limits for exhaustive searches. Defaults are unlimited.
// Exceeding a limit turns the outcome into "unknown"/aborted, never into a
// wrong answer.
struct SearchBudget {
    std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max();
    double time_limit_seconds = std::numeric_limits<double>::infinity();

    bool unlimited() const
    {
        return node_limit == std::numeric_limits<std::uint64_t>::max()
            && time_limit_seconds == std::numeric_limits<double>::infinity();
    }
};

namespace detail {

// Counts search nodes and polls the wall clock every few thousand charges.
class BudgetMeter {
public:
    explicit BudgetMeter(const SearchBudget& budget)
        : node_limit_(budget.node_limit)
    {
        if (budget.time_limit_seconds != std::numeric_limits<double>::infinity()) {
            has_deadline_ = true;
            deadline_ = std::chrono::steady_clock::now()
                + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(budget.time_limit_seconds));
        }
    }

    // Returns false once the budget is exhausted.
    bool charge(std::uint64_t amount = 1)
    {
        nodes_ += amount;
        if (nodes_ > node_limit_)
            return false;
        if (has_deadline_ && (nodes_ & 0xfffULL) < amount)
            if (std::chrono::steady_clock::now() > deadline_)
                return false;
        return true;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    std::uint64_t nodes_ = 0;
    std::uint64_t node_limit_;
    bool has_deadline_ = false;
    std::chrono::steady_clock::time_point deadline_;
};

} // namespace detail

inline long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

inline long long binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace worm
