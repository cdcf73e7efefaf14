#include "doctest.h"

#include "digitop/builders.hpp"
#include "digitop/errors.hpp"
#include "digitop/spectra.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <random>

using namespace digitop;
using support::range;
using support::sorted;

TEST_CASE("coincidence spectra of named pairs")
{
    auto one = builders::singleton();
    auto cube = builders::cube();
    CHECK(coincidence_spectrum(cube, one, 2).values == std::vector<std::size_t>{8});
    CHECK(coincidence_spectrum(cube, one, 5).values == std::vector<std::size_t>{8});
    CHECK(coincidence_spectrum(builders::interval(0, 4), builders::interval(0, 1), 2).values == range(0, 5));
    CHECK(coincidence_spectrum(builders::cycle(5), builders::discrete(3), 3).values ==
          std::vector<std::size_t>{0, 5});
    auto d2 = builders::discrete(2);
    CHECK(coincidence_spectrum(d2, d2, 2).values == range(0, 2));
    CHECK(coincidence_spectrum(cube, cube, 1).values == std::vector<std::size_t>{8});
    CHECK(coincidence_spectrum(cube, cube, 2).values == range(0, 8));
    CHECK_THROWS_AS(coincidence_spectrum(cube, cube, 0), InvalidInput);
}

TEST_CASE("coincidence spectrum unions")
{
    auto cube = builders::cube();
    for (std::size_t i_max = 2; i_max <= 4; ++i_max) {
        auto u = coincidence_spectrum_union(cube, cube, i_max);
        CHECK(u.spectrum.values == range(0, 8));
        CHECK(u.spectrum.exact);
        CHECK_FALSE(u.spectrum.arity.has_value());
        CHECK(u.stabilized_at == 2);
        CHECK(u.per_arity.size() == i_max - 1);
    }
    auto one = coincidence_spectrum_union(builders::cycle(4), builders::singleton(), 3);
    CHECK(one.spectrum.values == std::vector<std::size_t>{4});
    CHECK(one.closed);
    auto d2 = builders::discrete(2);
    CHECK(coincidence_spectrum_union(d2, d2, 3).spectrum.values == range(0, 2));
    CHECK_THROWS_AS(coincidence_spectrum_union(cube, cube, 1), InvalidInput);
}

TEST_CASE("fixed point spectra")
{
    CHECK(fixed_point_spectrum(builders::cycle(1)).values == std::vector<std::size_t>{1});
    CHECK(fixed_point_spectrum(builders::cycle(4)).values == range(0, 4));
    CHECK(fixed_point_spectrum(builders::cycle(5)).values == std::vector<std::size_t>{0, 1, 2, 3, 5});
    CHECK(fixed_point_spectrum(builders::cube()).values == std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 8});
    // Brute force over the 7-point image: every size appears.
    CHECK(fixed_point_spectrum(builders::cube_minus_vertex()).values == range(0, 7));
}

TEST_CASE("common fixed point spectra")
{
    auto c4 = builders::cycle(4);
    CHECK(common_fixed_spectrum(c4, 1).values == fixed_point_spectrum(c4).values);
    // Brute force over all pairs of the 84 self-maps.
    CHECK(common_fixed_spectrum(c4, 2).values == range(0, 4));
    CHECK(common_fixed_spectrum(builders::singleton(), 3).values == std::vector<std::size_t>{1});
    auto cube = common_fixed_spectrum(builders::cube(), 3);
    CHECK(cube.exact);
    CHECK(cube.values == std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 8});
    auto u = common_fixed_spectrum_union(builders::cycle(5), 3);
    CHECK(u.closed);
    CHECK(u.per_arity.front().arity == 1);
}

TEST_CASE("spectra agree with tuple enumeration on small pairs")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 120; ++trial) {
        auto x = support::random_image(rng, 4);
        auto y = support::random_image(rng, 4);
        CHECK(coincidence_spectrum(x, y, 2).values == sorted(oracle::cs(*x, *y, 2)));
        if (x->size() <= 3)
            CHECK(coincidence_spectrum(x, y, 3).values == sorted(oracle::cs(*x, *y, 3)));
        CHECK(fixed_point_spectrum(x).values == sorted(oracle::fixed_spectrum(*x)));
        CHECK(common_fixed_spectrum(x, 2).values == sorted(oracle::cfs(*x, 2)));
    }
}

TEST_CASE("spectrum laws on random pairs")
{
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 80; ++trial) {
        auto x = support::random_image(rng, 5);
        auto y = support::random_image(rng, 4);
        auto u = coincidence_spectrum_union(x, y, 4);
        REQUIRE(u.spectrum.exact);
        for (std::size_t k = 0; k + 1 < u.per_arity.size(); ++k)
            CHECK(u.per_arity[k].is_subset_of(u.per_arity[k + 1]));
        for (auto& s : u.per_arity) {
            CHECK(s.contains(x->size()));
            if (y->size() > 1)
                CHECK(s.contains(0));
        }
        if (y->edge_count() > 0)
            CHECK(u.per_arity.front().values == range(0, x->size()));
        CHECK(fixed_point_spectrum(x).is_subset_of(coincidence_spectrum(x, x, 2)));
    }
}

TEST_CASE("budget flags partial spectra")
{
    auto s = coincidence_spectrum(builders::cycle(7), builders::cycle(7), 3, EnumerationBudget::nodes(50));
    CHECK_FALSE(s.exact);
    auto f = fixed_point_spectrum(builders::cube(), EnumerationBudget::nodes(50));
    CHECK_FALSE(f.exact);
    CHECK(f.is_subset_of(fixed_point_spectrum(builders::cube())));
}

TEST_CASE("spectrum formatting")
{
    Spectrum s{{0, 2, 5}, true, 2};
    CHECK(to_string(s) == "{0,2,5}");
    CHECK(to_string(Spectrum{}) == "{}");
    CHECK(s.min() == 0);
}
