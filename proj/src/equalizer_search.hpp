#pragma once

// Breadth-first search over equalizer states. A state stands for every set
// S of maps with the same equalizer E and the same common values v on E;
// extending S by h depends only on (E, v|E), so that pair is the memo key.

#include "digitop/budget.hpp"
#include "digitop/point_set.hpp"
#include "digitop/row_set.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace digitop::detail {

/// Contiguous rows of width n (a MapTable's storage).
struct Pool {
    const PointIndex* data = nullptr;
    std::size_t count = 0;
};

class StateStore {
public:
    explicit StateStore(std::size_t n);

    /// Adds (mask, ref|mask). Returns (id, inserted).
    std::pair<std::size_t, bool> add(const std::uint64_t* mask, const PointIndex* ref);

    std::size_t size() const { return refs_.size(); }
    std::size_t words() const { return words_; }
    const std::uint64_t* mask(std::size_t id) const { return masks_.data() + id * words_; }
    const PointIndex* ref(std::size_t id) const { return refs_[id]; }
    std::size_t count(std::size_t id) const;

private:
    std::size_t n_, words_;
    RowSet keys_;
    std::vector<std::uint64_t> masks_;
    std::vector<const PointIndex*> refs_;
    std::vector<PointIndex> scratch_;
};

enum class StopRule { none, full_range, reaches_zero };

struct LayeredResult {
    /// first_depth[v]: fewest pool maps whose equalizer has v points.
    std::vector<std::optional<std::size_t>> first_depth;
    /// Depths 1..complete_through were searched exhaustively.
    std::size_t complete_through = 0;
    /// No state exists beyond those found: every deeper depth adds nothing.
    bool closed = false;

    /// Values reachable with at most `depth` maps.
    std::vector<std::size_t> values_at(std::size_t depth) const;
    bool exact_at(std::size_t depth) const { return closed || depth <= complete_through; }
};

/// Layered search over sets S of pool rows, 1 <= #S <= max_depth. With
/// `forced` set, that row joins every equalizer (common fixed sets).
LayeredResult layered_search(std::size_t n, Pool pool, const PointIndex* forced, std::size_t max_depth,
                             StopRule stop, BudgetMeter& meter);

struct ClassPool {
    Pool rows;
    std::size_t multiplicity = 1;
};

struct ProductResult {
    std::vector<bool> values; ///< indexed 0..n
    bool exact = true;
};

/// Values #Eq(S) over sets S = S_1 u ... u S_r with S_a a nonempty subset of
/// class a of size at most its multiplicity. Classes must be pairwise
/// disjoint.
ProductResult class_product_search(std::size_t n, std::span<const ClassPool> classes, const PointIndex* forced,
                                   StopRule stop, BudgetMeter& meter);

} // namespace digitop::detail
