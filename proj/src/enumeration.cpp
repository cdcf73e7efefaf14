#include "digitop/enumeration.hpp"
#include "digitop/errors.hpp"

#include <algorithm>
#include <future>
#include <limits>

namespace digitop {

MapTable::MapTable(ImageRef domain, ImageRef codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), width_(domain_->size())
{
}

DigitalMap MapTable::at(std::size_t r) const
{
    auto a = row(r);
    return DigitalMap::trusted(domain_, codomain_, {a.begin(), a.end()});
}

std::vector<DigitalMap> MapTable::to_maps() const
{
    std::vector<DigitalMap> out;
    out.reserve(size());
    for (std::size_t r = 0; r < size(); ++r)
        out.push_back(at(r));
    return out;
}

void MapTable::push_back(std::span<const PointIndex> assignment)
{
    data_.insert(data_.end(), assignment.begin(), assignment.end());
}

void MapTable::sort_unique()
{
    const auto rows = size();
    std::vector<std::size_t> idx(rows);
    for (std::size_t r = 0; r < rows; ++r)
        idx[r] = r;
    auto less = [&](std::size_t a, std::size_t b) {
        auto ra = row(a), rb = row(b);
        return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
    };
    std::sort(idx.begin(), idx.end(), less);
    std::vector<PointIndex> sorted;
    sorted.reserve(data_.size());
    for (std::size_t k = 0; k < rows; ++k) {
        auto r = row(idx[k]);
        if (k > 0 && std::equal(r.begin(), r.end(), row(idx[k - 1]).begin()))
            continue;
        sorted.insert(sorted.end(), r.begin(), r.end());
    }
    data_ = std::move(sorted);
}

std::optional<std::size_t> MapTable::find(std::span<const PointIndex> assignment) const
{
    for (std::size_t r = 0; r < size(); ++r) {
        auto rr = row(r);
        if (std::equal(rr.begin(), rr.end(), assignment.begin(), assignment.end()))
            return r;
    }
    return std::nullopt;
}

namespace {

// Backtracking over one connected component of the domain. Each point after
// the component root has its BFS parent already assigned, so its candidates
// are the closed neighbourhood of the parent's value; the remaining earlier
// neighbours are checked before descending.
class ComponentSearch {
public:
    ComponentSearch(const DigitalImage& x, const DigitalImage& y, const TraversalOrder& t,
                    std::span<const std::size_t> position, std::size_t begin, std::size_t end,
                    std::span<const PointIndex> anchor, std::optional<PointIndex> root_value, BudgetMeter& meter)
        : y_(y), t_(t), begin_(begin), anchor_(anchor), root_value_(root_value), meter_(meter), values_(end - begin)
    {
        back_edges_.resize(end - begin);
        for (auto k = begin; k < end; ++k)
            for (auto nb : x.neighbors(t.order[k])) {
                auto j = position[nb];
                if (j < k && j != t.parent[k])
                    back_edges_[k - begin].push_back(j - begin);
            }
    }

    /// Calls emit(values) for every consistent assignment of the component,
    /// values indexed by position - begin. Returns false if stopped.
    template <typename Emit>
    bool run(Emit&& emit)
    {
        return descend(0, emit);
    }

private:
    bool allowed(std::size_t k, PointIndex c) const
    {
        if (anchor_.empty())
            return true;
        return y_.weakly_adjacent(anchor_[t_.order[begin_ + k]], c);
    }

    template <typename Emit>
    bool try_value(std::size_t k, PointIndex c, Emit& emit)
    {
        if (!meter_.charge_node())
            return false;
        for (auto j : back_edges_[k])
            if (!y_.weakly_adjacent(values_[j], c))
                return true;
        values_[k] = c;
        return descend(k + 1, emit);
    }

    template <typename Emit>
    bool descend(std::size_t k, Emit& emit)
    {
        if (k == values_.size())
            return emit(std::span<const PointIndex>(values_));
        auto parent = t_.parent[begin_ + k];
        if (parent != TraversalOrder::npos) {
            for (auto c : y_.closed_neighbors(values_[parent - begin_]))
                if (allowed(k, c) && !try_value(k, c, emit))
                    return false;
            return true;
        }
        if (root_value_) {
            if (allowed(k, *root_value_))
                return try_value(k, *root_value_, emit);
            return true;
        }
        if (!anchor_.empty()) {
            for (auto c : y_.closed_neighbors(anchor_[t_.order[begin_ + k]]))
                if (!try_value(k, c, emit))
                    return false;
            return true;
        }
        for (PointIndex c = 0; c < y_.size(); ++c)
            if (!try_value(k, c, emit))
                return false;
        return true;
    }

    const DigitalImage& y_;
    const TraversalOrder& t_;
    std::size_t begin_;
    std::span<const PointIndex> anchor_;
    std::optional<PointIndex> root_value_;
    BudgetMeter& meter_;
    std::vector<PointIndex> values_;
    std::vector<std::vector<std::size_t>> back_edges_;
};

using Visit = std::function<bool(std::span<const PointIndex>)>;

// Product over components. Lists for all but the last component are
// materialized; the last one is streamed.
bool run_product(const DigitalImage& x, const DigitalImage& y, std::span<const PointIndex> anchor,
                 std::optional<PointIndex> root_value, BudgetMeter& meter, bool charge_results, const Visit& visit)
{
    const auto t = bfs_order(x);
    const auto comps = t.component_ranges.size();
    std::vector<std::size_t> position(x.size());
    for (std::size_t k = 0; k < t.order.size(); ++k)
        position[t.order[k]] = k;
    std::vector<std::vector<PointIndex>> lists(comps);
    for (std::size_t c = 0; c + 1 < comps; ++c) {
        auto [b, e] = t.component_ranges[c];
        ComponentSearch search(x, y, t, position, b, e, anchor, c == 0 ? root_value : std::nullopt, meter);
        search.run([&](std::span<const PointIndex> v) {
            lists[c].insert(lists[c].end(), v.begin(), v.end());
            return true;
        });
        if (lists[c].empty())
            return !meter.tripped();
    }

    std::vector<PointIndex> row(x.size());
    std::vector<std::size_t> digit(comps, 0);
    auto place = [&](std::size_t c, std::span<const PointIndex> v) {
        auto b = t.component_ranges[c].first;
        for (std::size_t k = 0; k < v.size(); ++k)
            row[t.order[b + k]] = v[k];
    };
    auto [lb, le] = t.component_ranges.back();
    ComponentSearch last(x, y, t, position, lb, le, anchor, comps == 1 ? root_value : std::nullopt, meter);
    bool stopped = false;

    for (;;) {
        for (std::size_t c = 0; c + 1 < comps; ++c) {
            auto len = t.component_ranges[c].second - t.component_ranges[c].first;
            place(c, std::span<const PointIndex>(lists[c]).subspan(digit[c] * len, len));
        }
        bool completed = last.run([&](std::span<const PointIndex> v) {
            place(comps - 1, v);
            if (charge_results && !meter.charge_result())
                return false;
            if (!visit(row)) {
                stopped = true;
                return false;
            }
            return true;
        });
        if (!completed)
            return false;
        // Advance the odometer over the materialized components; the last
        // materialized component is the least significant.
        std::size_t c = comps - 1;
        for (;;) {
            if (c == 0)
                return !stopped && !meter.tripped();
            --c;
            auto len = t.component_ranges[c].second - t.component_ranges[c].first;
            if (++digit[c] < lists[c].size() / len)
                break;
            digit[c] = 0;
        }
    }
}

EnumerationOutcome collect(const ImageRef& x, const ImageRef& y, std::span<const PointIndex> anchor,
                           std::optional<PointIndex> root_value, BudgetMeter& meter)
{
    EnumerationOutcome out{MapTable(x, y), true};
    out.exhausted = run_product(*x, *y, anchor, root_value, meter, true, [&](std::span<const PointIndex> row) {
        out.maps.push_back(row);
        return true;
    });
    return out;
}

} // namespace

namespace detail {

bool visit_one_step(const DigitalMap& f, BudgetMeter& meter, const Visit& visit)
{
    return run_product(*f.domain(), *f.codomain(), f.assignment(), std::nullopt, meter, false, visit);
}

} // namespace detail

EnumerationOutcome enumerate_continuous_maps(const ImageRef& x, const ImageRef& y, const EnumerationBudget& budget)
{
    BudgetMeter meter(budget);
    return enumerate_continuous_maps(x, y, meter);
}

EnumerationOutcome enumerate_continuous_maps(const ImageRef& x, const ImageRef& y, BudgetMeter& meter)
{
    return collect(x, y, {}, std::nullopt, meter);
}

EnumerationOutcome enumerate_continuous_maps_parallel(const ImageRef& x, const ImageRef& y,
                                                      const EnumerationBudget& budget, unsigned threads)
{
    if (threads <= 1)
        return enumerate_continuous_maps(x, y, budget);
    BudgetMeter meter(budget);
    const auto values = static_cast<PointIndex>(y->size());
    std::vector<EnumerationOutcome> parts(values);
    std::vector<std::future<void>> running;
    std::atomic<PointIndex> next{0};
    for (unsigned w = 0; w < threads && w < values; ++w)
        running.push_back(std::async(std::launch::async, [&] {
            for (PointIndex v; (v = next.fetch_add(1)) < values;)
                parts[v] = collect(x, y, {}, v, meter);
        }));
    for (auto& r : running)
        r.get();
    EnumerationOutcome out{MapTable(x, y), !meter.tripped()};
    for (auto& p : parts) {
        out.exhausted = out.exhausted && p.exhausted;
        for (std::size_t r = 0; r < p.maps.size(); ++r)
            out.maps.push_back(p.maps.row(r));
    }
    return out;
}

bool visit_continuous_maps(const ImageRef& x, const ImageRef& y, BudgetMeter& meter, const Visit& visit)
{
    return run_product(*x, *y, {}, std::nullopt, meter, true, visit);
}

MapCount count_continuous_maps(const ImageRef& x, const ImageRef& y, const EnumerationBudget& budget)
{
    BudgetMeter meter(budget);
    const auto t = bfs_order(*x);
    std::vector<std::size_t> position(x->size());
    for (std::size_t k = 0; k < t.order.size(); ++k)
        position[t.order[k]] = k;
    MapCount total{1, true};
    for (auto [b, e] : t.component_ranges) {
        ComponentSearch search(*x, *y, t, position, b, e, {}, std::nullopt, meter);
        std::uint64_t count = 0;
        bool done = search.run([&](std::span<const PointIndex>) {
            ++count;
            return true;
        });
        if (!done) {
            total.exhausted = false;
            return {0, false};
        }
        if (count != 0 && total.count > std::numeric_limits<std::uint64_t>::max() / count)
            throw InvalidInput("count_continuous_maps: count exceeds 64 bits");
        total.count *= count;
    }
    return total;
}

EnumerationOutcome one_step_neighbors(const DigitalMap& f, const EnumerationBudget& budget)
{
    BudgetMeter meter(budget);
    return one_step_neighbors(f, meter);
}

EnumerationOutcome one_step_neighbors(const DigitalMap& f, BudgetMeter& meter)
{
    return collect(f.domain(), f.codomain(), f.assignment(), std::nullopt, meter);
}

} // namespace digitop
