#include "equalizer_search.hpp"

#include "digitop/kernels.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace digitop::detail {

namespace {

constexpr PointIndex kOutside = std::numeric_limits<PointIndex>::max();
constexpr std::size_t kChunk = 1024;

std::vector<std::uint64_t> full_mask(std::size_t n)
{
    std::vector<std::uint64_t> m(word_count(n), ~std::uint64_t{0});
    if (n % 64)
        m.back() = (std::uint64_t{1} << (n % 64)) - 1;
    return m;
}

std::size_t popcount(const std::uint64_t* m, std::size_t words)
{
    std::size_t c = 0;
    for (std::size_t w = 0; w < words; ++w)
        c += static_cast<std::size_t>(std::popcount(m[w]));
    return c;
}

bool same_mask(const std::uint64_t* a, const std::uint64_t* b, std::size_t words)
{
    return std::equal(a, a + words, b);
}

enum class Scan { done, stopped, budget };

// Calls visit(row index, mask) with agreement(ref, row) & within for rows
// [begin, pool.count).
template <class Visit>
Scan scan_pool(const PointIndex* ref, const std::uint64_t* within, Pool pool, std::size_t begin, std::size_t n,
               BudgetMeter& meter, std::vector<std::uint64_t>& buf, Visit&& visit)
{
    const auto words = word_count(n);
    const auto& k = kernels::active_kernels();
    buf.resize(kChunk * words);
    for (auto r = begin; r < pool.count; r += kChunk) {
        auto c = std::min(kChunk, pool.count - r);
        if (!meter.charge_nodes(c))
            return Scan::budget;
        k.batch_agreement(ref, pool.data + r * n, c, n, within, buf.data());
        for (std::size_t i = 0; i < c; ++i)
            if (!visit(r + i, buf.data() + i * words))
                return Scan::stopped;
    }
    return Scan::done;
}

struct ValueTracker {
    std::vector<std::optional<std::size_t>> first;
    std::size_t found = 0;
    StopRule stop;

    ValueTracker(std::size_t n, StopRule s) : first(n + 1), stop(s) {}

    // Returns true once the stop rule is met.
    bool record(std::size_t value, std::size_t depth)
    {
        if (!first[value]) {
            first[value] = depth;
            ++found;
        }
        return satisfied();
    }
    bool satisfied() const
    {
        switch (stop) {
        case StopRule::full_range:
            return found == first.size();
        case StopRule::reaches_zero:
            return first[0].has_value();
        case StopRule::none:
            break;
        }
        return false;
    }
};

} // namespace

StateStore::StateStore(std::size_t n) : n_(n), words_(word_count(n)), keys_(n), scratch_(n) {}

std::pair<std::size_t, bool> StateStore::add(const std::uint64_t* mask, const PointIndex* ref)
{
    for (std::size_t x = 0; x < n_; ++x)
        scratch_[x] = (mask[x / 64] >> (x % 64)) & 1 ? ref[x] : kOutside;
    auto [id, inserted] = keys_.insert(scratch_);
    if (inserted) {
        masks_.insert(masks_.end(), mask, mask + words_);
        refs_.push_back(ref);
    }
    return {id, inserted};
}

std::size_t StateStore::count(std::size_t id) const { return popcount(mask(id), words_); }

std::vector<std::size_t> LayeredResult::values_at(std::size_t depth) const
{
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < first_depth.size(); ++v)
        if (first_depth[v] && *first_depth[v] <= depth)
            out.push_back(v);
    return out;
}

LayeredResult layered_search(std::size_t n, Pool pool, const PointIndex* forced, std::size_t max_depth,
                             StopRule stop, BudgetMeter& meter)
{
    LayeredResult result;
    ValueTracker values(n, stop);
    StateStore store(n);
    const auto words = store.words();
    const auto full = full_mask(n);
    std::vector<std::uint64_t> buf;
    std::vector<std::size_t> frontier;
    // Pool row behind each depth-1 state (no forced row), for the pair
    // symmetry at depth 2.
    std::vector<std::size_t> source_row;

    auto finish = [&](std::size_t through, bool closed) {
        result.first_depth = values.first;
        result.complete_through = through;
        result.closed = closed;
        return result;
    };

    std::size_t depth = 1;
    if (forced) {
        frontier.push_back(store.add(full.data(), forced).first);
    } else {
        if (max_depth == 0 || pool.count == 0)
            return finish(max_depth, pool.count == 0);
        for (std::size_t r = 0; r < pool.count; ++r) {
            auto [id, inserted] = store.add(full.data(), pool.data + r * n);
            if (inserted) {
                frontier.push_back(id);
                source_row.push_back(r);
            }
        }
        if (!meter.charge_nodes(pool.count))
            return finish(0, false);
        if (values.record(n, 1))
            return finish(max_depth, true);
        depth = 2;
    }

    for (; depth <= max_depth; ++depth) {
        std::vector<std::size_t> next;
        for (std::size_t k = 0; k < frontier.size(); ++k) {
            auto s = frontier[k];
            const auto begin = (!forced && depth == 2) ? source_row[k] + 1 : 0;
            bool met = false;
            auto scan = scan_pool(store.ref(s), store.mask(s), pool, begin, n, meter, buf,
                                  [&](std::size_t, const std::uint64_t* m) {
                                      if (same_mask(m, store.mask(s), words)) {
                                          met = values.record(popcount(m, words), depth);
                                          return !met;
                                      }
                                      auto [id, inserted] = store.add(m, store.ref(s));
                                      if (!inserted)
                                          return true;
                                      next.push_back(id);
                                      met = values.record(popcount(m, words), depth);
                                      return !met;
                                  });
            if (scan == Scan::budget)
                return finish(depth - 1, false);
            if (met)
                return finish(max_depth, true);
        }
        if (next.empty())
            return finish(max_depth, true);
        frontier = std::move(next);
    }
    return finish(max_depth, false);
}

ProductResult class_product_search(std::size_t n, std::span<const ClassPool> classes, const PointIndex* forced,
                                   StopRule stop, BudgetMeter& meter)
{
    ProductResult result;
    result.values.assign(n + 1, false);
    if (classes.empty())
        return result;
    const auto full = full_mask(n);
    const auto words = full.size();
    std::vector<std::uint64_t> buf;
    ValueTracker values(n, stop);

    StateStore previous(n);
    if (forced)
        previous.add(full.data(), forced);

    for (std::size_t a = 0; a < classes.size(); ++a) {
        const auto& cls = classes[a];
        const bool last = a + 1 == classes.size();
        StateStore current(n);
        std::vector<std::size_t> frontier;
        bool met = false;

        auto admit = [&](const std::uint64_t* m, const PointIndex* ref, bool skip_unchanged,
                         const std::uint64_t* parent, std::vector<std::size_t>& out) {
            if (skip_unchanged && same_mask(m, parent, words))
                return true;
            auto [id, inserted] = current.add(m, ref);
            if (!inserted)
                return true;
            out.push_back(id);
            if (last)
                met = values.record(popcount(m, words), 1);
            return !met;
        };

        // Mandatory member of class a.
        if (a == 0 && !forced) {
            if (!meter.charge_nodes(cls.rows.count)) {
                result.exact = false;
                break;
            }
            for (std::size_t r = 0; r < cls.rows.count && !met; ++r)
                admit(full.data(), cls.rows.data + r * n, false, nullptr, frontier);
        } else {
            for (std::size_t s = 0; s < previous.size() && !met; ++s) {
                auto scan = scan_pool(previous.ref(s), previous.mask(s), cls.rows, 0, n, meter, buf,
                                      [&](std::size_t, const std::uint64_t* m) {
                                          return admit(m, previous.ref(s), false, nullptr, frontier);
                                      });
                if (scan == Scan::budget) {
                    result.exact = false;
                    break;
                }
            }
        }
        // Optional further members, up to the multiplicity.
        for (std::size_t extra = 1; extra < cls.multiplicity && result.exact && !met && !frontier.empty(); ++extra) {
            std::vector<std::size_t> next;
            for (auto s : frontier) {
                auto scan = scan_pool(current.ref(s), current.mask(s), cls.rows, 0, n, meter, buf,
                                      [&](std::size_t, const std::uint64_t* m) {
                                          return admit(m, current.ref(s), true, current.mask(s), next);
                                      });
                if (scan == Scan::budget)
                    result.exact = false;
                if (scan != Scan::done)
                    break;
            }
            frontier = std::move(next);
        }
        if (!result.exact || met)
            break;
        previous = std::move(current);
    }
    for (std::size_t v = 0; v <= n; ++v)
        result.values[v] = values.first[v].has_value();
    return result;
}

} // namespace digitop::detail
