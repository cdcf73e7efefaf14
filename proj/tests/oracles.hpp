#pragma once

// Brute-force reference computations. They only use adjacency queries on
// images and never touch the search code under test.

#include "digitop/image.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Row = std::vector<std::uint32_t>;

inline bool weak(const digitop::DigitalImage& y, std::uint32_t a, std::uint32_t b)
{
    return a == b || y.adjacent(a, b);
}

inline bool continuous(const digitop::DigitalImage& x, const digitop::DigitalImage& y, const Row& f)
{
    for (std::uint32_t a = 0; a < x.size(); ++a)
        for (std::uint32_t b = a + 1; b < x.size(); ++b)
            if (x.adjacent(a, b) && !weak(y, f[a], f[b]))
                return false;
    return true;
}

/// Every assignment filtered by continuity, sorted.
inline std::vector<Row> all_maps(const digitop::DigitalImage& x, const digitop::DigitalImage& y)
{
    std::vector<Row> out;
    Row f(x.size(), 0);
    for (;;) {
        if (continuous(x, y, f))
            out.push_back(f);
        std::size_t k = 0;
        while (k < f.size() && ++f[k] == y.size())
            f[k++] = 0;
        if (k == f.size())
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::size_t agree(const std::vector<const Row*>& tuple)
{
    std::size_t c = 0;
    for (std::size_t p = 0; p < tuple[0]->size(); ++p) {
        bool all = true;
        for (auto* r : tuple)
            all = all && (*r)[p] == (*tuple[0])[p];
        c += all;
    }
    return c;
}

/// #C over every i-tuple drawn from `pools[k]` for position k.
inline std::set<std::size_t> tuple_values(const std::vector<const std::vector<Row>*>& pools)
{
    std::set<std::size_t> out;
    std::vector<std::size_t> idx(pools.size(), 0);
    for (auto* p : pools)
        if (p->empty())
            return out;
    for (;;) {
        std::vector<const Row*> t;
        for (std::size_t k = 0; k < pools.size(); ++k)
            t.push_back(&(*pools[k])[idx[k]]);
        out.insert(agree(t));
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == pools[k]->size())
            idx[k++] = 0;
        if (k == idx.size())
            break;
    }
    return out;
}

inline Row identity(std::size_t n)
{
    Row r(n);
    for (std::size_t i = 0; i < n; ++i)
        r[i] = static_cast<std::uint32_t>(i);
    return r;
}

/// CS_i by enumerating all i-tuples.
inline std::set<std::size_t> cs(const digitop::DigitalImage& x, const digitop::DigitalImage& y, std::size_t i)
{
    auto maps = all_maps(x, y);
    return tuple_values(std::vector<const std::vector<Row>*>(i, &maps));
}

inline std::set<std::size_t> fixed_spectrum(const digitop::DigitalImage& x)
{
    std::set<std::size_t> out;
    auto id = identity(x.size());
    for (auto& f : all_maps(x, x))
        out.insert(agree({&f, &id}));
    return out;
}

/// CFS_i: i-tuples plus the identity.
inline std::set<std::size_t> cfs(const digitop::DigitalImage& x, std::size_t i)
{
    auto maps = all_maps(x, x);
    std::vector<Row> id{identity(x.size())};
    std::vector<const std::vector<Row>*> pools(i, &maps);
    pools.push_back(&id);
    return tuple_values(pools);
}

inline bool one_step(const digitop::DigitalImage& y, const Row& f, const Row& g)
{
    for (std::size_t p = 0; p < f.size(); ++p)
        if (!weak(y, f[p], g[p]))
            return false;
    return true;
}

/// Connected component of f in the one-step graph on all continuous maps.
inline std::vector<Row> homotopy_class(const digitop::DigitalImage& x, const digitop::DigitalImage& y, const Row& f)
{
    auto maps = all_maps(x, y);
    std::vector<bool> in(maps.size(), false);
    std::vector<std::size_t> queue;
    for (std::size_t k = 0; k < maps.size(); ++k)
        if (maps[k] == f) {
            in[k] = true;
            queue.push_back(k);
        }
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (std::size_t k = 0; k < maps.size(); ++k)
            if (!in[k] && one_step(y, maps[queue[h]], maps[k])) {
                in[k] = true;
                queue.push_back(k);
            }
    std::vector<Row> out;
    for (auto k : queue)
        out.push_back(maps[k]);
    std::sort(out.begin(), out.end());
    return out;
}

/// HCS / HFS over the full product of classes.
inline std::set<std::size_t> hcs(const digitop::DigitalImage& x, const digitop::DigitalImage& y,
                                 const std::vector<Row>& maps, bool with_identity)
{
    std::vector<std::vector<Row>> classes;
    for (auto& f : maps)
        classes.push_back(homotopy_class(x, y, f));
    std::vector<const std::vector<Row>*> pools;
    for (auto& c : classes)
        pools.push_back(&c);
    std::vector<Row> id{identity(x.size())};
    if (with_identity)
        pools.push_back(&id);
    return tuple_values(pools);
}

inline std::size_t mj(const digitop::DigitalImage& x, std::size_t j)
{
    auto cls = homotopy_class(x, x, identity(x.size()));
    auto values = tuple_values(std::vector<const std::vector<Row>*>(j, &cls));
    return *values.begin();
}

} // namespace oracle
