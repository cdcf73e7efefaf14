#pragma once

#include "digitop/image.hpp"

#include <optional>
#include <vector>

namespace digitop {

/// Adjacency-preserving bijection between two images (x ~ y iff Φ(x) ~ Φ(y)).
class Isomorphism {
public:
    /// Validates bijectivity and preservation of adjacency in both directions.
    static Isomorphism make(ImageRef domain, ImageRef codomain, std::vector<PointIndex> forward);

    const ImageRef& domain() const { return domain_; }
    const ImageRef& codomain() const { return codomain_; }
    PointIndex operator()(PointIndex x) const { return forward_[x]; }
    PointIndex inverse(PointIndex y) const { return inverse_[y]; }
    const std::vector<PointIndex>& forward() const { return forward_; }
    const std::vector<PointIndex>& backward() const { return inverse_; }

private:
    Isomorphism() = default;
    ImageRef domain_, codomain_;
    std::vector<PointIndex> forward_, inverse_;
};

/// Exhaustive search with degree and neighbourhood-degree pruning.
std::optional<Isomorphism> find_isomorphism(const ImageRef& x, const ImageRef& y);

} // namespace digitop
