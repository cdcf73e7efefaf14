#include "digitop/point_set.hpp"

#include <algorithm>
#include <cassert>

namespace digitop {

PointSet::PointSet(std::size_t universe, bool full) : universe_(universe), words_(word_count(universe), 0)
{
    if (full) {
        std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
        if (universe % 64 != 0)
            words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    }
}

PointSet::PointSet(std::size_t universe, std::span<const std::uint64_t> words)
    : universe_(universe), words_(words.begin(), words.end())
{
    assert(words_.size() == word_count(universe));
}

PointSet PointSet::of(std::size_t universe, std::span<const PointIndex> members)
{
    PointSet s(universe);
    for (auto x : members)
        s.insert(x);
    return s;
}

std::size_t PointSet::size() const
{
    std::size_t total = 0;
    for (auto w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::vector<PointIndex> PointSet::members() const
{
    std::vector<PointIndex> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto bits = words_[w];
        while (bits) {
            out.push_back(static_cast<PointIndex>(w * 64 + std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

bool PointSet::is_subset_of(const PointSet& other) const
{
    assert(universe_ == other.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & ~other.words_[w])
            return false;
    return true;
}

PointSet& PointSet::operator&=(const PointSet& other)
{
    assert(universe_ == other.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] &= other.words_[w];
    return *this;
}

PointSet& PointSet::operator|=(const PointSet& other)
{
    assert(universe_ == other.universe_);
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] |= other.words_[w];
    return *this;
}

std::size_t PointSetHash::operator()(const PointSet& s) const
{
    std::size_t h = s.universe();
    for (auto w : s.words())
        h = h * 0x9E3779B97F4A7C15ULL ^ (w + (h >> 29));
    return h;
}

} // namespace digitop
