#include "digitop/map.hpp"
#include "digitop/errors.hpp"
#include "digitop/kernels.hpp"

#include <algorithm>
#include <numeric>

namespace digitop {

namespace {

void check_shape(const DigitalImage& domain, const DigitalImage& codomain, std::span<const PointIndex> assignment)
{
    if (assignment.size() != domain.size())
        throw InvalidInput("assignment has " + std::to_string(assignment.size()) + " entries, domain has " +
                           std::to_string(domain.size()) + " points");
    for (std::size_t x = 0; x < assignment.size(); ++x)
        if (assignment[x] >= codomain.size())
            throw InvalidInput("assignment[" + std::to_string(x) + "] = " + std::to_string(assignment[x]) +
                               " is not a codomain point (codomain has " + std::to_string(codomain.size()) +
                               " points)");
}

void require_common_images(std::span<const DigitalMap> maps, const char* what)
{
    if (maps.empty())
        throw InvalidInput(std::string(what) + ": needs at least one map");
    for (const auto& f : maps.subspan(1))
        if (!same_image(f.domain(), maps[0].domain()) || !same_image(f.codomain(), maps[0].codomain()))
            throw InvalidInput(std::string(what) + ": maps do not share domain and codomain");
}

} // namespace

DigitalMap DigitalMap::from_assignment(ImageRef domain, ImageRef codomain, std::vector<PointIndex> assignment)
{
    if (!domain || !codomain)
        throw InvalidInput("map: null image");
    if (auto bad = first_discontinuity(*domain, *codomain, assignment))
        throw ContinuityError(bad->first, bad->second, assignment[bad->first], assignment[bad->second]);
    return DigitalMap(std::move(domain), std::move(codomain), std::move(assignment));
}

DigitalMap DigitalMap::identity(ImageRef image)
{
    std::vector<PointIndex> a(image->size());
    std::iota(a.begin(), a.end(), PointIndex{0});
    auto copy = image;
    return DigitalMap(std::move(image), std::move(copy), std::move(a));
}

DigitalMap DigitalMap::constant(ImageRef domain, ImageRef codomain, PointIndex value)
{
    if (value >= codomain->size())
        throw InvalidInput("constant map value " + std::to_string(value) + " is not a codomain point");
    std::vector<PointIndex> a(domain->size(), value);
    return DigitalMap(std::move(domain), std::move(codomain), std::move(a));
}

DigitalMap DigitalMap::trusted(ImageRef domain, ImageRef codomain, std::vector<PointIndex> assignment)
{
    return DigitalMap(std::move(domain), std::move(codomain), std::move(assignment));
}

bool DigitalMap::is_constant() const
{
    return std::adjacent_find(assignment_.begin(), assignment_.end(), std::not_equal_to<>()) == assignment_.end();
}

std::size_t hash_assignment(std::span<const PointIndex> assignment)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto v : assignment) {
        h ^= v;
        h *= 0x100000001b3ULL;
    }
    h ^= h >> 31;
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
}

std::size_t DigitalMapHash::operator()(const DigitalMap& f) const { return hash_assignment(f.assignment()); }

std::optional<std::pair<PointIndex, PointIndex>> first_discontinuity(const DigitalImage& domain,
                                                                      const DigitalImage& codomain,
                                                                      std::span<const PointIndex> assignment)
{
    check_shape(domain, codomain, assignment);
    for (auto [a, b] : domain.edges())
        if (!codomain.weakly_adjacent(assignment[a], assignment[b]))
            return std::make_pair(a, b);
    return std::nullopt;
}

bool is_continuous(const DigitalImage& domain, const DigitalImage& codomain, std::span<const PointIndex> assignment)
{
    return !first_discontinuity(domain, codomain, assignment);
}

DigitalMap compose(const DigitalMap& g, const DigitalMap& f)
{
    if (!same_image(f.codomain(), g.domain()))
        throw InvalidInput("compose: codomain of f is not the domain of g");
    std::vector<PointIndex> a(f.size());
    for (PointIndex x = 0; x < f.size(); ++x)
        a[x] = g(f(x));
    return DigitalMap::trusted(f.domain(), g.codomain(), std::move(a));
}

DigitalMap conjugate(const DigitalMap& f, const Isomorphism& phi)
{
    if (!f.is_self_map())
        throw InvalidInput("conjugate: f must be a self-map");
    if (!same_image(f.domain(), phi.domain()))
        throw InvalidInput("conjugate: f is not a self-map of the isomorphism's domain");
    const auto n = phi.codomain()->size();
    std::vector<PointIndex> a(n);
    for (PointIndex y = 0; y < n; ++y)
        a[y] = phi(f(phi.inverse(y)));
    return DigitalMap::trusted(phi.codomain(), phi.codomain(), std::move(a));
}

PointSet coincidence_set(std::span<const DigitalMap> maps)
{
    require_common_images(maps, "coincidence_set");
    const auto n = maps[0].size();
    PointSet result(n, true);
    std::vector<std::uint64_t> mask(word_count(n));
    for (const auto& f : maps.subspan(1)) {
        kernels::agreement(maps[0].assignment(), f.assignment(), mask.data());
        for (std::size_t w = 0; w < mask.size(); ++w)
            result.words()[w] &= mask[w];
    }
    return result;
}

PointSet fixed_point_set(const DigitalMap& f)
{
    if (!f.is_self_map())
        throw InvalidInput("fixed_point_set: f must be a self-map");
    std::vector<PointIndex> id(f.size());
    std::iota(id.begin(), id.end(), PointIndex{0});
    PointSet result(f.size());
    kernels::agreement(f.assignment(), id, result.words().data());
    return result;
}

PointSet common_fixed_set(std::span<const DigitalMap> maps)
{
    require_common_images(maps, "common_fixed_set");
    if (!maps[0].is_self_map())
        throw InvalidInput("common_fixed_set: maps must be self-maps");
    std::vector<DigitalMap> with_id(maps.begin(), maps.end());
    with_id.push_back(DigitalMap::identity(maps[0].domain()));
    return coincidence_set(with_id);
}

} // namespace digitop
