#pragma once

#include "digitop/point_set.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace digitop {

/// Insertion-ordered set of fixed-width rows of point indices, with
/// open-addressing lookup. Row ids are dense and stable.
class RowSet {
public:
    explicit RowSet(std::size_t width = 0) : width_(width) {}

    std::size_t width() const { return width_; }
    std::size_t size() const { return hashes_.size(); }

    /// Returns (id, true) if newly inserted, (existing id, false) otherwise.
    std::pair<std::size_t, bool> insert(std::span<const PointIndex> row);
    std::optional<std::size_t> find(std::span<const PointIndex> row) const;
    bool contains(std::span<const PointIndex> row) const { return find(row).has_value(); }

    std::span<const PointIndex> row(std::size_t id) const
    {
        return std::span<const PointIndex>(data_).subspan(id * width_, width_);
    }
    const std::vector<PointIndex>& data() const { return data_; }

private:
    static constexpr std::uint32_t kEmpty = 0xFFFFFFFFu;

    std::size_t probe(std::span<const PointIndex> row, std::size_t hash) const;
    void grow();

    std::size_t width_;
    std::vector<PointIndex> data_;
    std::vector<std::size_t> hashes_;
    std::vector<std::uint32_t> slots_;
};

} // namespace digitop
