#pragma once

#include "digitop/image.hpp"
#include "digitop/isomorphism.hpp"
#include "digitop/point_set.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace digitop {

/// A digitally continuous map between two images: adjacent domain points go
/// to equal or adjacent codomain points. Equality is structural.
class DigitalMap {
public:
    /// Throws ContinuityError naming one offending edge, or InvalidInput on
    /// length/range violations.
    static DigitalMap from_assignment(ImageRef domain, ImageRef codomain, std::vector<PointIndex> assignment);
    static DigitalMap identity(ImageRef image);
    static DigitalMap constant(ImageRef domain, ImageRef codomain, PointIndex value);

    /// Skips validation. For producers that construct maps continuous by
    /// construction (enumeration, composition).
    static DigitalMap trusted(ImageRef domain, ImageRef codomain, std::vector<PointIndex> assignment);

    const ImageRef& domain() const { return domain_; }
    const ImageRef& codomain() const { return codomain_; }
    std::span<const PointIndex> assignment() const { return assignment_; }
    PointIndex operator()(PointIndex x) const { return assignment_[x]; }
    std::size_t size() const { return assignment_.size(); }
    bool is_self_map() const { return same_image(domain_, codomain_); }
    bool is_constant() const;

    friend bool operator==(const DigitalMap& a, const DigitalMap& b)
    {
        return a.assignment_ == b.assignment_ && same_image(a.domain_, b.domain_) &&
               same_image(a.codomain_, b.codomain_);
    }

private:
    DigitalMap(ImageRef d, ImageRef c, std::vector<PointIndex> a)
        : domain_(std::move(d)), codomain_(std::move(c)), assignment_(std::move(a))
    {
    }

    ImageRef domain_, codomain_;
    std::vector<PointIndex> assignment_;
};

/// Hashes the assignment only; maps compared together share their images.
struct DigitalMapHash {
    std::size_t operator()(const DigitalMap& f) const;
};

std::size_t hash_assignment(std::span<const PointIndex> assignment);

/// First domain edge (in edge order) sent to non-adjacent distinct points.
/// Throws InvalidInput if the assignment has the wrong length or values out
/// of range.
std::optional<std::pair<PointIndex, PointIndex>> first_discontinuity(const DigitalImage& domain,
                                                                      const DigitalImage& codomain,
                                                                      std::span<const PointIndex> assignment);

bool is_continuous(const DigitalImage& domain, const DigitalImage& codomain, std::span<const PointIndex> assignment);

/// (g ∘ f)(x) = g(f(x)). Requires codomain(f) = domain(g).
DigitalMap compose(const DigitalMap& g, const DigitalMap& f);

/// Φ ∘ f ∘ Φ⁻¹ for a self-map f of Φ's domain.
DigitalMap conjugate(const DigitalMap& f, const Isomorphism& phi);

/// Points where every map agrees. A single map yields the whole domain.
PointSet coincidence_set(std::span<const DigitalMap> maps);

/// {x : f(x) = x}; f must be a self-map.
PointSet fixed_point_set(const DigitalMap& f);

/// {x : f_1(x) = ... = f_i(x) = x}; equals coincidence_set(maps ++ [id]).
PointSet common_fixed_set(std::span<const DigitalMap> maps);

} // namespace digitop
