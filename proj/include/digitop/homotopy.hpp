#pragma once

#include "digitop/budget.hpp"
#include "digitop/enumeration.hpp"
#include "digitop/map.hpp"
#include "digitop/row_set.hpp"

#include <optional>
#include <vector>

namespace digitop {

/// Closure of a map under one-step homotopy, possibly truncated by a budget.
/// members are in breadth-first discovery order; row 0 is the representative.
class HomotopyClass {
public:
    const DigitalMap& representative() const { return representative_; }
    std::size_t size() const { return members_.size(); }
    /// True iff the closure finished within budget.
    bool complete() const { return complete_; }
    bool contains(const DigitalMap& g) const { return members_.contains(g.assignment()); }
    bool contains(std::span<const PointIndex> assignment) const { return members_.contains(assignment); }
    DigitalMap member(std::size_t i) const;
    /// Members as a dense table (kernel layout).
    MapTable table() const;
    const RowSet& rows() const { return members_; }

private:
    friend HomotopyClass homotopy_class(const DigitalMap& f, BudgetMeter& meter);
    HomotopyClass(DigitalMap rep, RowSet members, bool complete)
        : representative_(std::move(rep)), members_(std::move(members)), complete_(complete)
    {
    }

    DigitalMap representative_;
    RowSet members_;
    bool complete_;
};

/// A chain f = H_0, ..., H_m = g of continuous maps, each one-step homotopic
/// to the next.
struct HomotopyWitness {
    std::vector<DigitalMap> chain;

    /// Consecutive entries one-step homotopic, all continuous, shared images.
    bool validate() const;
};

enum class Decision { yes, no, unknown };

const char* to_string(Decision d);

struct HomotopyAnswer {
    Decision decision = Decision::unknown;
    std::optional<HomotopyWitness> witness; ///< present iff decision is yes
};

/// f(x) = g(x) or f(x) ~ g(x) for every x.
bool one_step_homotopic(const DigitalMap& f, const DigitalMap& g);

/// Breadth-first closure of {f} under one_step_neighbors. max_results caps
/// the number of members.
HomotopyClass homotopy_class(const DigitalMap& f, const EnumerationBudget& budget = {});
HomotopyClass homotopy_class(const DigitalMap& f, BudgetMeter& meter);

/// yes with a shortest chain, no when f's class closed without meeting g,
/// unknown when the budget tripped first.
HomotopyAnswer are_homotopic(const DigitalMap& f, const DigitalMap& g, const EnumerationBudget& budget = {});

/// Exact: f is rigid iff its only one-step neighbour is f itself.
bool is_rigid_map(const DigitalMap& f);
bool is_rigid_image(const ImageRef& x);

/// Whether f's class contains a constant map. Tries a greedy chain that
/// pulls every value toward a fixed target first, then a bounded BFS.
HomotopyAnswer is_nullhomotopic(const DigitalMap& f, const EnumerationBudget& budget = {});
HomotopyAnswer is_contractible(const ImageRef& x, const EnumerationBudget& budget = {});

} // namespace digitop
