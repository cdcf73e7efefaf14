#pragma once

#include "digitop/budget.hpp"
#include "digitop/map.hpp"

#include <functional>
#include <span>

namespace digitop::detail {

/// Streams one-step neighbours of f. Charges nodes to the meter but not
/// results, so callers can apply their own result semantics.
bool visit_one_step(const DigitalMap& f, BudgetMeter& meter,
                    const std::function<bool(std::span<const PointIndex>)>& visit);

} // namespace digitop::detail
