#pragma once

#include "digitop/image.hpp"
#include "digitop/spectra.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace support {

inline std::vector<std::size_t> sorted(const std::set<std::size_t>& s) { return {s.begin(), s.end()}; }

inline std::vector<std::size_t> range(std::size_t lo, std::size_t hi)
{
    std::vector<std::size_t> v;
    for (auto k = lo; k <= hi; ++k)
        v.push_back(k);
    return v;
}

/// Graph on k points of Z^1 at even coordinates with random explicit edges.
inline digitop::ImageRef random_graph(std::mt19937_64& rng, std::size_t k)
{
    digitop::ImageSpec spec;
    spec.dimension = 1;
    for (std::size_t i = 0; i < k; ++i)
        spec.points.push_back({{static_cast<std::int64_t>(2 * i)}});
    digitop::ExplicitAdjacency adj;
    std::bernoulli_distribution coin(0.5);
    for (digitop::PointIndex a = 0; a < k; ++a)
        for (digitop::PointIndex b = a + 1; b < k; ++b)
            if (coin(rng))
                adj.edges.emplace_back(a, b);
    spec.adjacency = adj;
    return digitop::DigitalImage::build(spec);
}

/// Random nonempty subset of [0,2]^d under c_t.
inline digitop::ImageRef random_lattice(std::mt19937_64& rng, std::size_t d, std::size_t max_points)
{
    std::vector<digitop::Point> all;
    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i)
        total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        digitop::Point p;
        auto c = code;
        for (std::size_t i = 0; i < d; ++i) {
            p.coords.push_back(static_cast<std::int64_t>(c % 3));
            c /= 3;
        }
        all.push_back(p);
    }
    std::shuffle(all.begin(), all.end(), rng);
    auto k = std::uniform_int_distribution<std::size_t>(1, std::min(max_points, all.size()))(rng);
    digitop::ImageSpec spec;
    spec.dimension = d;
    spec.points.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
    spec.adjacency = digitop::CtAdjacency{std::uniform_int_distribution<int>(1, static_cast<int>(d))(rng)};
    return digitop::DigitalImage::build(spec);
}

inline digitop::ImageRef random_image(std::mt19937_64& rng, std::size_t max_points)
{
    if (std::bernoulli_distribution(0.5)(rng))
        return random_graph(rng, std::uniform_int_distribution<std::size_t>(1, max_points)(rng));
    return random_lattice(rng, std::uniform_int_distribution<std::size_t>(1, 3)(rng), max_points);
}

} // namespace support
