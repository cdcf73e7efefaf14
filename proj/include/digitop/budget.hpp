#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>

namespace digitop {

/// Resource caps for enumeration and search. Absent fields are unlimited.
struct EnumerationBudget {
    std::optional<std::uint64_t> max_results;
    std::optional<std::uint64_t> max_nodes;
    std::optional<std::chrono::milliseconds> time_budget;

    static EnumerationBudget unlimited() { return {}; }
    static EnumerationBudget nodes(std::uint64_t n) { return {std::nullopt, n, std::nullopt}; }

    /// Throws InvalidInput if a present limit is zero or negative.
    void validate() const;
};

/// Running tally against one budget. Thread-safe; once tripped it stays
/// tripped.
class BudgetMeter {
public:
    explicit BudgetMeter(const EnumerationBudget& budget = {});

    /// Counts one search node. Returns false once any limit is exceeded.
    bool charge_node();
    /// Counts k nodes at once (batched kernel work).
    bool charge_nodes(std::uint64_t k);
    /// Counts one produced result. Returns false (and trips) when the result
    /// would exceed max_results; that result must be discarded.
    bool charge_result();
    bool tripped() const { return tripped_.load(std::memory_order_relaxed); }
    void trip() { tripped_.store(true, std::memory_order_relaxed); }

    std::uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }
    std::uint64_t results() const { return results_.load(std::memory_order_relaxed); }
    const EnumerationBudget& budget() const { return budget_; }

private:
    EnumerationBudget budget_;
    std::chrono::steady_clock::time_point deadline_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<std::uint64_t> results_{0};
    std::atomic<bool> tripped_{false};
};

} // namespace digitop
