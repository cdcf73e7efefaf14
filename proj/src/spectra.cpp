#include "digitop/spectra.hpp"
#include "digitop/enumeration.hpp"
#include "digitop/errors.hpp"
#include "digitop/kernels.hpp"
#include "equalizer_search.hpp"

#include <algorithm>
#include <numeric>

namespace digitop {

namespace {

detail::Pool pool_of(const MapTable& t) { return {t.data().data(), t.size()}; }

Spectrum make_spectrum(std::vector<std::size_t> values, bool exact, std::optional<std::size_t> arity)
{
    return Spectrum{std::move(values), exact, arity};
}

SpectrumUnion assemble_union(const detail::LayeredResult& r, std::size_t from, std::size_t i_max, bool enumerated)
{
    SpectrumUnion u;
    for (auto i = from; i <= i_max; ++i)
        u.per_arity.push_back(make_spectrum(r.values_at(i), enumerated && r.exact_at(i), i));
    u.spectrum = make_spectrum(r.values_at(i_max), enumerated && r.exact_at(i_max), std::nullopt);
    for (auto i = from; i <= i_max; ++i)
        if (u.per_arity[i - from].values == u.spectrum.values) {
            u.stabilized_at = i;
            break;
        }
    u.closed = enumerated && r.closed;
    return u;
}

struct Search {
    EnumerationOutcome maps;
    detail::LayeredResult layers;
};

Search run(const ImageRef& x, const ImageRef& y, bool forced_id, std::size_t depth, const EnumerationBudget& budget)
{
    budget.validate();
    BudgetMeter meter(budget);
    Search s{enumerate_continuous_maps(x, y, meter), {}};
    std::vector<PointIndex> id(x->size());
    std::iota(id.begin(), id.end(), PointIndex{0});
    s.layers = detail::layered_search(x->size(), pool_of(s.maps.maps), forced_id ? id.data() : nullptr, depth,
                                      detail::StopRule::full_range, meter);
    return s;
}

} // namespace

bool Spectrum::contains(std::size_t v) const { return std::binary_search(values.begin(), values.end(), v); }

bool Spectrum::is_subset_of(const Spectrum& other) const
{
    return std::includes(other.values.begin(), other.values.end(), values.begin(), values.end());
}

std::optional<std::size_t> Spectrum::min() const
{
    if (values.empty())
        return std::nullopt;
    return values.front();
}

std::string to_string(const Spectrum& s)
{
    std::string out = "{";
    for (std::size_t k = 0; k < s.values.size(); ++k) {
        if (k)
            out += ",";
        out += std::to_string(s.values[k]);
    }
    return out + "}";
}

Spectrum coincidence_spectrum(const ImageRef& x, const ImageRef& y, std::size_t i, const EnumerationBudget& budget)
{
    if (i == 0)
        throw InvalidInput("coincidence spectrum: arity must be at least 1");
    if (i == 1)
        return make_spectrum({x->size()}, true, 1);
    auto s = run(x, y, false, i, budget);
    return make_spectrum(s.layers.values_at(i), s.maps.exhausted && s.layers.exact_at(i), i);
}

SpectrumUnion coincidence_spectrum_union(const ImageRef& x, const ImageRef& y, std::size_t i_max,
                                         const EnumerationBudget& budget)
{
    if (i_max < 2)
        throw InvalidInput("coincidence spectrum union: i_max must be at least 2");
    auto s = run(x, y, false, i_max, budget);
    return assemble_union(s.layers, 2, i_max, s.maps.exhausted);
}

Spectrum fixed_point_spectrum(const ImageRef& x, const EnumerationBudget& budget)
{
    budget.validate();
    BudgetMeter meter(budget);
    const auto n = x->size();
    std::vector<PointIndex> id(n);
    std::iota(id.begin(), id.end(), PointIndex{0});
    std::vector<bool> seen(n + 1, false);
    std::size_t found = 0;
    const auto& k = kernels::active_kernels();
    bool exhausted = visit_continuous_maps(x, x, meter, [&](std::span<const PointIndex> row) {
        auto c = k.count_equal(row.data(), id.data(), n);
        if (!seen[c]) {
            seen[c] = true;
            ++found;
        }
        return found < n + 1;
    });
    std::vector<std::size_t> values;
    for (std::size_t v = 0; v <= n; ++v)
        if (seen[v])
            values.push_back(v);
    return make_spectrum(std::move(values), exhausted || found == n + 1, 1);
}

Spectrum common_fixed_spectrum(const ImageRef& x, std::size_t i, const EnumerationBudget& budget)
{
    if (i == 0)
        throw InvalidInput("common fixed spectrum: arity must be at least 1");
    auto s = run(x, x, true, i, budget);
    return make_spectrum(s.layers.values_at(i), s.maps.exhausted && s.layers.exact_at(i), i);
}

SpectrumUnion common_fixed_spectrum_union(const ImageRef& x, std::size_t i_max, const EnumerationBudget& budget)
{
    if (i_max < 1)
        throw InvalidInput("common fixed spectrum union: i_max must be at least 1");
    auto s = run(x, x, true, i_max, budget);
    return assemble_union(s.layers, 1, i_max, s.maps.exhausted);
}

} // namespace digitop
