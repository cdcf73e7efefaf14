#pragma once

#include "digitop/budget.hpp"
#include "digitop/map.hpp"
#include "digitop/spectra.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace digitop {

/// values is a lower approximation and min_value an upper bound whenever a
/// class was truncated or the search budget tripped.
struct HomotopySpectrumResult {
    Spectrum values;
    bool classes_complete = true;
    std::size_t min_value = 0;
};

struct MinimumResult {
    std::size_t value = 0;
    bool exact = true;
};

struct SelfCoincidenceEntry {
    std::size_t j = 0;
    std::size_t value = 0;
    bool exact = true;
};

struct SelfCoincidenceSequence {
    std::vector<SelfCoincidenceEntry> entries;
    bool non_increasing() const;
};

/// HCS(f_1..f_i): #C(g_1..g_i) with each g_j homotopic to f_j.
HomotopySpectrumResult hcs(std::span<const DigitalMap> maps, const EnumerationBudget& budget = {});
/// HFS(f_1..f_i): #CF(g_1..g_i) with each g_j homotopic to f_j.
HomotopySpectrumResult hfs(std::span<const DigitalMap> maps, const EnumerationBudget& budget = {});

/// min HCS, stopping as soon as an empty coincidence set turns up.
MinimumResult mc(std::span<const DigitalMap> maps, const EnumerationBudget& budget = {});
MinimumResult mcf(std::span<const DigitalMap> maps, const EnumerationBudget& budget = {});

/// m_j(f) = MC(f,...,f) with j copies.
MinimumResult m_j_of_map(const DigitalMap& f, std::size_t j, const EnumerationBudget& budget = {});
/// m_1(X) .. m_{j_max}(X) for f = id.
SelfCoincidenceSequence self_coincidence_sequence(const ImageRef& x, std::size_t j_max,
                                                  const EnumerationBudget& budget = {});

/// HCS(maps) against HCS(maps ++ [last]).
struct InclusionFinding {
    HomotopySpectrumResult shorter, longer;
    bool included = false; ///< shorter is a subset of longer
    bool strict = false;   ///< and the sets differ
};
InclusionFinding hcs_extension(std::span<const DigitalMap> maps, const EnumerationBudget& budget = {});

} // namespace digitop
