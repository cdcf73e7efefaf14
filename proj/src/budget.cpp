#include "digitop/budget.hpp"
#include "digitop/errors.hpp"

namespace digitop {

void EnumerationBudget::validate() const
{
    if (max_results && *max_results == 0)
        throw InvalidInput("budget: max_results must be positive");
    if (max_nodes && *max_nodes == 0)
        throw InvalidInput("budget: max_nodes must be positive");
    if (time_budget && time_budget->count() <= 0)
        throw InvalidInput("budget: time budget must be positive");
}

BudgetMeter::BudgetMeter(const EnumerationBudget& budget) : budget_(budget)
{
    budget_.validate();
    if (budget_.time_budget)
        deadline_ = std::chrono::steady_clock::now() + *budget_.time_budget;
}

bool BudgetMeter::charge_node() { return charge_nodes(1); }

bool BudgetMeter::charge_nodes(std::uint64_t k)
{
    if (tripped())
        return false;
    auto before = nodes_.fetch_add(k, std::memory_order_relaxed);
    auto n = before + k;
    if (budget_.max_nodes && n > *budget_.max_nodes) {
        trip();
        return false;
    }
    if (budget_.time_budget && (n >> 10) != (before >> 10) && std::chrono::steady_clock::now() > deadline_) {
        trip();
        return false;
    }
    return true;
}

bool BudgetMeter::charge_result()
{
    if (tripped())
        return false;
    auto n = results_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (budget_.max_results && n > *budget_.max_results) {
        trip();
        return false;
    }
    return true;
}

} // namespace digitop
