#include "digitop/homotopy.hpp"
#include "digitop/errors.hpp"
#include "enumeration_internal.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace digitop {

namespace {

constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

void require_same_images(const DigitalMap& f, const DigitalMap& g, const char* what)
{
    if (!same_image(f.domain(), g.domain()) || !same_image(f.codomain(), g.codomain()))
        throw InvalidInput(std::string(what) + ": maps do not share domain and codomain");
}

struct BfsResult {
    RowSet visited;
    std::vector<std::size_t> parent;
    std::optional<std::size_t> found;
    bool complete = true;
};

// Breadth-first exploration of f's homotopy class, stopping at the first
// member satisfying `goal`.
BfsResult explore(const DigitalMap& f, BudgetMeter& meter,
                  const std::function<bool(std::span<const PointIndex>)>& goal)
{
    BfsResult r{RowSet(f.size()), {}, std::nullopt, true};
    r.visited.insert(f.assignment());
    r.parent.push_back(kNoParent);
    if (goal && goal(f.assignment())) {
        r.found = 0;
        return r;
    }
    const auto cap = meter.budget().max_results;
    for (std::size_t head = 0; head < r.visited.size() && !r.found; ++head) {
        auto current = r.visited.row(head);
        auto g = DigitalMap::trusted(f.domain(), f.codomain(), {current.begin(), current.end()});
        bool ok = detail::visit_one_step(g, meter, [&](std::span<const PointIndex> row) {
            if (r.visited.contains(row))
                return true;
            if (cap && r.visited.size() >= *cap) {
                meter.trip();
                return false;
            }
            auto id = r.visited.insert(row).first;
            r.parent.push_back(head);
            if (goal && goal(row)) {
                r.found = id;
                return false;
            }
            return true;
        });
        if (!ok && !r.found) {
            r.complete = false;
            return r;
        }
    }
    return r;
}

HomotopyWitness chain_to(const BfsResult& r, std::size_t id, const DigitalMap& f)
{
    std::vector<std::size_t> ids;
    for (auto k = id; k != kNoParent; k = r.parent[k])
        ids.push_back(k);
    std::reverse(ids.begin(), ids.end());
    HomotopyWitness w;
    for (auto k : ids) {
        auto row = r.visited.row(k);
        w.chain.push_back(DigitalMap::trusted(f.domain(), f.codomain(), {row.begin(), row.end()}));
    }
    return w;
}

bool constant_row(std::span<const PointIndex> row)
{
    return std::adjacent_find(row.begin(), row.end(), std::not_equal_to<>()) == row.end();
}

// Moves every value one step closer to `target` along shortest paths in the
// codomain, keeping continuity. Returns the chain if it reaches the constant.
std::optional<HomotopyWitness> pull_toward(const DigitalMap& f, PointIndex target, std::size_t max_steps)
{
    const auto& y = *f.codomain();
    const auto& x = *f.domain();
    constexpr auto far = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(y.size(), far);
    std::vector<PointIndex> queue{target};
    dist[target] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (auto nb : y.neighbors(queue[h]))
            if (dist[nb] == far) {
                dist[nb] = dist[queue[h]] + 1;
                queue.push_back(nb);
            }
    for (auto v : f.assignment())
        if (dist[v] == far)
            return std::nullopt;

    auto closer = [&](PointIndex v) {
        for (auto nb : y.neighbors(v))
            if (dist[nb] + 1 == dist[v])
                return nb;
        return v;
    };
    auto continuous_at = [&](const std::vector<PointIndex>& a, PointIndex p) {
        for (auto q : x.neighbors(p))
            if (!y.weakly_adjacent(a[p], a[q]))
                return false;
        return true;
    };

    HomotopyWitness w{{f}};
    std::vector<PointIndex> current(f.assignment().begin(), f.assignment().end());
    for (std::size_t step = 0; step < max_steps; ++step) {
        if (constant_row(current) && current[0] == target)
            return w;
        std::vector<PointIndex> next(current.size());
        for (std::size_t p = 0; p < current.size(); ++p)
            next[p] = closer(current[p]);
        if (!is_continuous(x, y, next)) {
            // Fall back to moving single points while continuity holds.
            next = current;
            bool moved = false;
            for (PointIndex p = 0; p < next.size(); ++p) {
                auto old = next[p];
                next[p] = closer(old);
                if (next[p] != old && continuous_at(next, p))
                    moved = true;
                else
                    next[p] = old;
            }
            if (!moved)
                return std::nullopt;
        }
        current = next;
        w.chain.push_back(DigitalMap::trusted(f.domain(), f.codomain(), current));
    }
    return std::nullopt;
}

} // namespace

DigitalMap HomotopyClass::member(std::size_t i) const
{
    auto row = members_.row(i);
    return DigitalMap::trusted(representative_.domain(), representative_.codomain(), {row.begin(), row.end()});
}

MapTable HomotopyClass::table() const
{
    MapTable t(representative_.domain(), representative_.codomain());
    for (std::size_t i = 0; i < members_.size(); ++i)
        t.push_back(members_.row(i));
    return t;
}

bool HomotopyWitness::validate() const
{
    if (chain.empty())
        return false;
    for (std::size_t k = 0; k < chain.size(); ++k) {
        const auto& h = chain[k];
        if (!same_image(h.domain(), chain[0].domain()) || !same_image(h.codomain(), chain[0].codomain()))
            return false;
        if (!is_continuous(*h.domain(), *h.codomain(), h.assignment()))
            return false;
        if (k > 0 && !one_step_homotopic(chain[k - 1], h))
            return false;
    }
    return true;
}

const char* to_string(Decision d)
{
    switch (d) {
    case Decision::yes:
        return "yes";
    case Decision::no:
        return "no";
    case Decision::unknown:
        break;
    }
    return "unknown";
}

bool one_step_homotopic(const DigitalMap& f, const DigitalMap& g)
{
    require_same_images(f, g, "one_step_homotopic");
    const auto& y = *f.codomain();
    for (PointIndex x = 0; x < f.size(); ++x)
        if (!y.weakly_adjacent(f(x), g(x)))
            return false;
    return true;
}

HomotopyClass homotopy_class(const DigitalMap& f, const EnumerationBudget& budget)
{
    BudgetMeter meter(budget);
    return homotopy_class(f, meter);
}

HomotopyClass homotopy_class(const DigitalMap& f, BudgetMeter& meter)
{
    auto r = explore(f, meter, {});
    return HomotopyClass(f, std::move(r.visited), r.complete && !meter.tripped());
}

HomotopyAnswer are_homotopic(const DigitalMap& f, const DigitalMap& g, const EnumerationBudget& budget)
{
    require_same_images(f, g, "are_homotopic");
    BudgetMeter meter(budget);
    auto target = g.assignment();
    auto r = explore(f, meter, [&](std::span<const PointIndex> row) {
        return std::equal(row.begin(), row.end(), target.begin(), target.end());
    });
    if (r.found)
        return {Decision::yes, chain_to(r, *r.found, f)};
    return {r.complete && !meter.tripped() ? Decision::no : Decision::unknown, std::nullopt};
}

bool is_rigid_map(const DigitalMap& f)
{
    BudgetMeter meter;
    std::size_t seen = 0;
    detail::visit_one_step(f, meter, [&](std::span<const PointIndex>) { return ++seen < 2; });
    return seen == 1;
}

bool is_rigid_image(const ImageRef& x) { return is_rigid_map(DigitalMap::identity(x)); }

HomotopyAnswer is_nullhomotopic(const DigitalMap& f, const EnumerationBudget& budget)
{
    if (f.is_constant())
        return {Decision::yes, HomotopyWitness{{f}}};
    const auto& y = *f.codomain();
    // Greedy first: targets are the codomain points f actually hits.
    std::vector<PointIndex> targets(f.assignment().begin(), f.assignment().end());
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (auto t : targets)
        if (auto w = pull_toward(f, t, f.size() * y.size() + 2))
            return {Decision::yes, std::move(w)};

    BudgetMeter meter(budget);
    auto r = explore(f, meter, constant_row);
    if (r.found)
        return {Decision::yes, chain_to(r, *r.found, f)};
    return {r.complete && !meter.tripped() ? Decision::no : Decision::unknown, std::nullopt};
}

HomotopyAnswer is_contractible(const ImageRef& x, const EnumerationBudget& budget)
{
    return is_nullhomotopic(DigitalMap::identity(x), budget);
}

} // namespace digitop
