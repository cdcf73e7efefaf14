#pragma once

#include "digitop/budget.hpp"
#include "digitop/image.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace digitop {

/// Sorted set of achievable sizes. exact is false iff a budget tripped, in
/// which case values is a subset of the true spectrum.
struct Spectrum {
    std::vector<std::size_t> values;
    bool exact = true;
    std::optional<std::size_t> arity; ///< absent for unions over arities

    bool contains(std::size_t v) const;
    bool is_subset_of(const Spectrum& other) const;
    std::optional<std::size_t> min() const;
    bool operator==(const Spectrum& other) const { return values == other.values; }
};

/// "{0,1,2}"
std::string to_string(const Spectrum& s);

/// Union over arities 2..i_max together with the per-arity spectra.
struct SpectrumUnion {
    Spectrum spectrum;
    std::vector<Spectrum> per_arity; ///< ascending arity, each tagged
    /// Smallest arity from which every computed arity gives the union.
    std::optional<std::size_t> stabilized_at;
    /// The search ran out of new equalizers, so arities beyond i_max add
    /// nothing either.
    bool closed = false;
};

/// CS_i(X,Y): sizes #C(f_1..f_i) over continuous f_j : X -> Y. i = 1 gives
/// {#X}.
Spectrum coincidence_spectrum(const ImageRef& x, const ImageRef& y, std::size_t i,
                              const EnumerationBudget& budget = {});
SpectrumUnion coincidence_spectrum_union(const ImageRef& x, const ImageRef& y, std::size_t i_max,
                                         const EnumerationBudget& budget = {});

/// F(X) = {#Fix(f) : f continuous self-map}.
Spectrum fixed_point_spectrum(const ImageRef& x, const EnumerationBudget& budget = {});

/// CFS_i(X): sizes of common fixed sets of i continuous self-maps.
Spectrum common_fixed_spectrum(const ImageRef& x, std::size_t i, const EnumerationBudget& budget = {});
SpectrumUnion common_fixed_spectrum_union(const ImageRef& x, std::size_t i_max,
                                          const EnumerationBudget& budget = {});

} // namespace digitop
