#include "digitop/isomorphism.hpp"
#include "digitop/errors.hpp"

#include <algorithm>

namespace digitop {

Isomorphism Isomorphism::make(ImageRef domain, ImageRef codomain, std::vector<PointIndex> forward)
{
    if (!domain || !codomain)
        throw InvalidInput("isomorphism: null image");
    const auto n = domain->size();
    if (codomain->size() != n || forward.size() != n)
        throw InvalidInput("isomorphism: size mismatch");
    std::vector<PointIndex> inverse(n, static_cast<PointIndex>(n));
    for (PointIndex x = 0; x < n; ++x) {
        auto y = forward[x];
        if (y >= n || inverse[y] != n)
            throw InvalidInput("isomorphism: assignment is not a bijection");
        inverse[y] = x;
    }
    if (domain->edge_count() != codomain->edge_count())
        throw InvalidInput("isomorphism: edge counts differ");
    // Equal edge counts plus forward preservation implies the inverse preserves too.
    for (auto [a, b] : domain->edges())
        if (!codomain->adjacent(forward[a], forward[b]))
            throw InvalidInput("isomorphism: edge (" + std::to_string(a) + "," + std::to_string(b) +
                               ") is not preserved");
    Isomorphism iso;
    iso.domain_ = std::move(domain);
    iso.codomain_ = std::move(codomain);
    iso.forward_ = std::move(forward);
    iso.inverse_ = std::move(inverse);
    return iso;
}

namespace {

std::vector<std::size_t> neighbour_degrees(const DigitalImage& g, PointIndex x)
{
    std::vector<std::size_t> d;
    for (auto y : g.neighbors(x))
        d.push_back(g.degree(y));
    std::sort(d.begin(), d.end());
    return d;
}

struct IsoSearch {
    const DigitalImage& x;
    const DigitalImage& y;
    TraversalOrder order;
    std::vector<std::vector<std::size_t>> x_signature, y_signature;
    std::vector<PointIndex> forward;
    std::vector<bool> used;

    bool compatible(PointIndex a, PointIndex b) const
    {
        return x.degree(a) == y.degree(b) && x_signature[a] == y_signature[b];
    }

    bool extend(std::size_t depth)
    {
        if (depth == order.order.size())
            return true;
        auto a = order.order[depth];
        auto try_candidate = [&](PointIndex b) {
            if (used[b] || !compatible(a, b))
                return false;
            for (std::size_t k = 0; k < depth; ++k) {
                auto c = order.order[k];
                if (x.adjacent(a, c) != y.adjacent(b, forward[c]))
                    return false;
            }
            forward[a] = b;
            used[b] = true;
            if (extend(depth + 1))
                return true;
            used[b] = false;
            return false;
        };
        auto parent = order.parent[depth];
        if (parent != TraversalOrder::npos) {
            for (auto b : y.neighbors(forward[order.order[parent]]))
                if (try_candidate(b))
                    return true;
            return false;
        }
        for (PointIndex b = 0; b < y.size(); ++b)
            if (try_candidate(b))
                return true;
        return false;
    }
};

} // namespace

std::optional<Isomorphism> find_isomorphism(const ImageRef& x, const ImageRef& y)
{
    if (x->size() != y->size() || x->edge_count() != y->edge_count())
        return std::nullopt;
    if (degree_sequence(*x) != degree_sequence(*y))
        return std::nullopt;
    IsoSearch search{*x, *y, bfs_order(*x), {}, {}, std::vector<PointIndex>(x->size()),
                     std::vector<bool>(y->size(), false)};
    for (PointIndex i = 0; i < x->size(); ++i) {
        search.x_signature.push_back(neighbour_degrees(*x, i));
        search.y_signature.push_back(neighbour_degrees(*y, i));
    }
    if (!search.extend(0))
        return std::nullopt;
    return Isomorphism::make(x, y, std::move(search.forward));
}

} // namespace digitop
