#include "digitop/row_set.hpp"
#include "digitop/map.hpp"

#include <algorithm>

namespace digitop {

std::size_t RowSet::probe(std::span<const PointIndex> row, std::size_t hash) const
{
    const auto mask = slots_.size() - 1;
    for (auto s = hash & mask;; s = (s + 1) & mask) {
        auto id = slots_[s];
        if (id == kEmpty)
            return s;
        if (hashes_[id] == hash) {
            auto existing = this->row(id);
            if (std::equal(existing.begin(), existing.end(), row.begin(), row.end()))
                return s;
        }
    }
}

void RowSet::grow()
{
    std::vector<std::uint32_t> slots(std::max<std::size_t>(16, slots_.size() * 2), kEmpty);
    const auto mask = slots.size() - 1;
    for (std::uint32_t id = 0; id < hashes_.size(); ++id) {
        auto s = hashes_[id] & mask;
        while (slots[s] != kEmpty)
            s = (s + 1) & mask;
        slots[s] = id;
    }
    slots_ = std::move(slots);
}

std::pair<std::size_t, bool> RowSet::insert(std::span<const PointIndex> row)
{
    if ((hashes_.size() + 1) * 2 > slots_.size())
        grow();
    auto hash = hash_assignment(row);
    auto s = probe(row, hash);
    if (slots_[s] != kEmpty)
        return {slots_[s], false};
    auto id = hashes_.size();
    slots_[s] = static_cast<std::uint32_t>(id);
    hashes_.push_back(hash);
    data_.insert(data_.end(), row.begin(), row.end());
    return {id, true};
}

std::optional<std::size_t> RowSet::find(std::span<const PointIndex> row) const
{
    if (slots_.empty())
        return std::nullopt;
    auto s = probe(row, hash_assignment(row));
    if (slots_[s] == kEmpty)
        return std::nullopt;
    return slots_[s];
}

} // namespace digitop
