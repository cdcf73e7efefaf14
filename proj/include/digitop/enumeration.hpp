#pragma once

#include "digitop/budget.hpp"
#include "digitop/map.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace digitop {

/// Dense row-major table of maps sharing one domain and codomain: row r is
/// the assignment of map r. This is the layout the agreement kernels consume.
class MapTable {
public:
    MapTable() = default;
    MapTable(ImageRef domain, ImageRef codomain);

    const ImageRef& domain() const { return domain_; }
    const ImageRef& codomain() const { return codomain_; }
    std::size_t size() const { return width_ ? data_.size() / width_ : 0; }
    std::size_t width() const { return width_; }
    bool empty() const { return size() == 0; }

    std::span<const PointIndex> row(std::size_t r) const
    {
        return std::span<const PointIndex>(data_).subspan(r * width_, width_);
    }
    DigitalMap at(std::size_t r) const;
    std::vector<DigitalMap> to_maps() const;

    void push_back(std::span<const PointIndex> assignment);
    /// Sorts rows lexicographically and removes duplicates.
    void sort_unique();
    /// Index of the row equal to `assignment`, if any (linear scan).
    std::optional<std::size_t> find(std::span<const PointIndex> assignment) const;

    const std::vector<PointIndex>& data() const { return data_; }

private:
    ImageRef domain_, codomain_;
    std::size_t width_ = 0;
    std::vector<PointIndex> data_;
};

struct EnumerationOutcome {
    MapTable maps;
    bool exhausted = true; ///< false iff a budget tripped
};

/// Every continuous map X -> Y, each exactly once, in a fixed order: domain
/// points are visited in per-component BFS order, candidates in ascending
/// index, components combined as a product with the first component most
/// significant. The order is lexicographic in the values along that visit
/// order.
EnumerationOutcome enumerate_continuous_maps(const ImageRef& x, const ImageRef& y,
                                             const EnumerationBudget& budget = {});
EnumerationOutcome enumerate_continuous_maps(const ImageRef& x, const ImageRef& y, BudgetMeter& meter);

/// Same maps, explored by `threads` workers that each own the branches with
/// a given value at the first visited domain point. The merged result is in
/// the same order as the sequential enumeration.
EnumerationOutcome enumerate_continuous_maps_parallel(const ImageRef& x, const ImageRef& y,
                                                      const EnumerationBudget& budget, unsigned threads);

/// Streams the enumeration. The callback returns false to stop early (the
/// outcome is then reported as not exhausted). Returns exhausted.
bool visit_continuous_maps(const ImageRef& x, const ImageRef& y, BudgetMeter& meter,
                           const std::function<bool(std::span<const PointIndex>)>& visit);

struct MapCount {
    std::uint64_t count = 0;
    bool exhausted = true;
};

/// Counts without materializing. Throws InvalidInput if the count overflows
/// 64 bits.
MapCount count_continuous_maps(const ImageRef& x, const ImageRef& y, const EnumerationBudget& budget = {});

/// Every continuous g with g(x) in N*(f(x)) for all x, f included.
EnumerationOutcome one_step_neighbors(const DigitalMap& f, const EnumerationBudget& budget = {});
EnumerationOutcome one_step_neighbors(const DigitalMap& f, BudgetMeter& meter);

} // namespace digitop
