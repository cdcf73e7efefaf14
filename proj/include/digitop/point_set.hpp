#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace digitop {

using PointIndex = std::uint32_t;

inline constexpr std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

/// A subset of the point indices {0, ..., universe-1} of one image, stored as
/// a dense bitset. Iteration order (members()) is ascending.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::size_t universe, bool full = false);
    PointSet(std::size_t universe, std::span<const std::uint64_t> words);

    static PointSet of(std::size_t universe, std::span<const PointIndex> members);

    std::size_t universe() const { return universe_; }
    std::size_t size() const;
    bool empty() const { return size() == 0; }
    bool contains(PointIndex x) const { return (words_[x / 64] >> (x % 64)) & 1U; }

    void insert(PointIndex x) { words_[x / 64] |= std::uint64_t{1} << (x % 64); }
    void erase(PointIndex x) { words_[x / 64] &= ~(std::uint64_t{1} << (x % 64)); }

    std::vector<PointIndex> members() const;
    bool is_subset_of(const PointSet& other) const;

    PointSet& operator&=(const PointSet& other);
    PointSet& operator|=(const PointSet& other);
    friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
    friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
    friend bool operator==(const PointSet&, const PointSet&) = default;

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct PointSetHash {
    std::size_t operator()(const PointSet& s) const;
};

} // namespace digitop
