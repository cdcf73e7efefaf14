#include "digitop/homotopy_spectra.hpp"
#include "digitop/errors.hpp"
#include "digitop/homotopy.hpp"
#include "equalizer_search.hpp"

#include <algorithm>
#include <numeric>

namespace digitop {

namespace {

void require_family(std::span<const DigitalMap> maps, bool self_maps, const char* what)
{
    if (maps.empty())
        throw InvalidInput(std::string(what) + ": needs at least one map");
    for (const auto& f : maps) {
        if (!same_image(f.domain(), maps[0].domain()) || !same_image(f.codomain(), maps[0].codomain()))
            throw InvalidInput(std::string(what) + ": maps do not share domain and codomain");
        if (self_maps && !f.is_self_map())
            throw InvalidInput(std::string(what) + ": maps must be self-maps");
    }
}

struct Classes {
    std::vector<MapTable> tables;
    std::vector<std::size_t> multiplicity;
    bool complete = true;
};

// Homotopy classes of the maps with identical classes merged.
Classes collect_classes(std::span<const DigitalMap> maps, const EnumerationBudget& budget)
{
    Classes out;
    std::vector<HomotopyClass> seen;
    for (const auto& f : maps) {
        auto hit = std::find_if(seen.begin(), seen.end(), [&](const HomotopyClass& c) { return c.contains(f); });
        if (hit != seen.end()) {
            ++out.multiplicity[static_cast<std::size_t>(hit - seen.begin())];
            continue;
        }
        BudgetMeter meter(budget);
        auto cls = homotopy_class(f, meter);
        out.complete = out.complete && cls.complete();
        out.tables.push_back(cls.table());
        out.multiplicity.push_back(1);
        seen.push_back(std::move(cls));
    }
    return out;
}

HomotopySpectrumResult spectrum_search(std::span<const DigitalMap> maps, bool fixed, detail::StopRule stop,
                                       const EnumerationBudget& budget)
{
    budget.validate();
    const auto n = maps[0].size();
    auto classes = collect_classes(maps, budget);
    std::vector<detail::ClassPool> pools;
    for (std::size_t a = 0; a < classes.tables.size(); ++a)
        pools.push_back({{classes.tables[a].data().data(), classes.tables[a].size()}, classes.multiplicity[a]});
    std::vector<PointIndex> id(n);
    std::iota(id.begin(), id.end(), PointIndex{0});
    BudgetMeter meter(budget);
    auto r = detail::class_product_search(n, pools, fixed ? id.data() : nullptr, stop, meter);

    HomotopySpectrumResult out;
    for (std::size_t v = 0; v <= n; ++v)
        if (r.values[v])
            out.values.values.push_back(v);
    out.classes_complete = classes.complete;
    out.values.exact = classes.complete && r.exact;
    out.values.arity = maps.size();
    out.min_value = out.values.values.empty() ? n : out.values.values.front();
    return out;
}

MinimumResult minimum(const HomotopySpectrumResult& r)
{
    return {r.min_value, r.values.exact || r.min_value == 0};
}

} // namespace

bool SelfCoincidenceSequence::non_increasing() const
{
    for (std::size_t k = 1; k < entries.size(); ++k)
        if (entries[k].exact && entries[k - 1].exact && entries[k].value > entries[k - 1].value)
            return false;
    return true;
}

HomotopySpectrumResult hcs(std::span<const DigitalMap> maps, const EnumerationBudget& budget)
{
    require_family(maps, false, "hcs");
    return spectrum_search(maps, false, detail::StopRule::full_range, budget);
}

HomotopySpectrumResult hfs(std::span<const DigitalMap> maps, const EnumerationBudget& budget)
{
    require_family(maps, true, "hfs");
    return spectrum_search(maps, true, detail::StopRule::full_range, budget);
}

MinimumResult mc(std::span<const DigitalMap> maps, const EnumerationBudget& budget)
{
    require_family(maps, false, "mc");
    return minimum(spectrum_search(maps, false, detail::StopRule::reaches_zero, budget));
}

MinimumResult mcf(std::span<const DigitalMap> maps, const EnumerationBudget& budget)
{
    require_family(maps, true, "mcf");
    return minimum(spectrum_search(maps, true, detail::StopRule::reaches_zero, budget));
}

MinimumResult m_j_of_map(const DigitalMap& f, std::size_t j, const EnumerationBudget& budget)
{
    if (j == 0)
        throw InvalidInput("m_j: j must be at least 1");
    std::vector<DigitalMap> copies(j, f);
    return mc(copies, budget);
}

SelfCoincidenceSequence self_coincidence_sequence(const ImageRef& x, std::size_t j_max,
                                                  const EnumerationBudget& budget)
{
    if (j_max == 0)
        throw InvalidInput("self-coincidence sequence: j_max must be at least 1");
    budget.validate();
    BudgetMeter class_meter(budget);
    auto cls = homotopy_class(DigitalMap::identity(x), class_meter);
    auto table = cls.table();
    BudgetMeter meter(budget);
    auto r = detail::layered_search(x->size(), {table.data().data(), table.size()}, nullptr, j_max,
                                    detail::StopRule::reaches_zero, meter);
    SelfCoincidenceSequence seq;
    for (std::size_t j = 1; j <= j_max; ++j) {
        auto values = r.values_at(j);
        auto value = values.empty() ? x->size() : values.front();
        seq.entries.push_back({j, value, value == 0 || (cls.complete() && r.exact_at(j))});
    }
    return seq;
}

InclusionFinding hcs_extension(std::span<const DigitalMap> maps, const EnumerationBudget& budget)
{
    require_family(maps, false, "hcs");
    std::vector<DigitalMap> longer(maps.begin(), maps.end());
    longer.push_back(maps.back());
    InclusionFinding f{hcs(maps, budget), hcs(longer, budget), false, false};
    f.included = f.shorter.values.is_subset_of(f.longer.values);
    f.strict = f.included && f.shorter.values.values != f.longer.values.values;
    return f;
}

} // namespace digitop
