#include "doctest.h"

#include "digitop/builders.hpp"
#include "digitop/errors.hpp"
#include "digitop/homotopy.hpp"
#include "digitop/homotopy_spectra.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <random>

using namespace digitop;
using support::range;
using support::sorted;

namespace {

DigitalMap pick(std::mt19937_64& rng, const ImageRef& x, const ImageRef& y)
{
    auto all = oracle::all_maps(*x, *y);
    auto& r = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    return DigitalMap::from_assignment(x, y, {r.begin(), r.end()});
}

oracle::Row row(const DigitalMap& f) { return {f.assignment().begin(), f.assignment().end()}; }

} // namespace

TEST_CASE("homotopy coincidence spectra")
{
    auto fig = builders::figure1();
    auto id = DigitalMap::identity(fig);
    auto r = hcs(std::vector{id, id});
    CHECK(r.values.values == std::vector<std::size_t>{18});
    CHECK(r.min_value == 18);
    CHECK(r.classes_complete);

    auto i3 = builders::interval(0, 3);
    auto c = DigitalMap::constant(i3, i3, 0);
    auto rc = hcs(std::vector{c, c});
    CHECK(rc.values.values == range(0, 4));
    CHECK(rc.values.exact);

    auto c4 = builders::cycle(4);
    auto idc = DigitalMap::identity(c4);
    CHECK(hcs(std::vector{idc, idc}).values.values == range(0, 4));
    CHECK(hcs(std::vector{idc}).values.values == std::vector<std::size_t>{4});
}

TEST_CASE("minimum coincidence numbers")
{
    auto c4 = builders::cycle(4);
    auto m = mc(std::vector{DigitalMap::constant(c4, c4, 0), DigitalMap::constant(c4, c4, 1)});
    CHECK(m.value == 0);
    CHECK(m.exact);
    auto fig = builders::figure1();
    auto id = DigitalMap::identity(fig);
    CHECK(mc(std::vector{id, id}).value == 18);
    CHECK(mc(std::vector{DigitalMap::identity(c4), DigitalMap::constant(c4, c4, 2)}).value == 0);
    CHECK(mcf(std::vector{id}).value == 18);
    CHECK(mcf(std::vector{DigitalMap::identity(c4)}).value == 0);
    CHECK_THROWS_AS(mcf(std::vector{DigitalMap::constant(c4, builders::singleton(), 0)}), InvalidInput);
}

TEST_CASE("homotopy fixed point spectra")
{
    auto fig = builders::figure1();
    CHECK(hfs(std::vector{DigitalMap::identity(fig)}).values.values == std::vector<std::size_t>{18});
    auto c4 = builders::cycle(4);
    // The class of a constant is all 84 self-maps; their fixed-point counts.
    CHECK(hfs(std::vector{DigitalMap::constant(c4, c4, 0)}).values.values == range(0, 4));
}

TEST_CASE("self-coincidence sequences")
{
    auto fig = self_coincidence_sequence(builders::figure1(), 4);
    REQUIRE(fig.entries.size() == 4);
    for (auto& e : fig.entries) {
        CHECK(e.value == 18);
        CHECK(e.exact);
    }
    for (std::size_t n : {4, 5, 6}) {
        auto s = self_coincidence_sequence(builders::cycle(n), 4);
        CHECK(s.entries[0].value == n);
        for (std::size_t j = 1; j < 4; ++j) {
            CHECK(s.entries[j].value == 0);
            CHECK(s.entries[j].exact);
        }
        CHECK(s.non_increasing());
    }
    auto c4 = builders::cycle(4);
    CHECK(m_j_of_map(DigitalMap::identity(c4), 1).value == 4);
    CHECK(m_j_of_map(DigitalMap::identity(c4), 2).value == 0);
}

TEST_CASE("homotopy spectra agree with the class-product oracle")
{
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 80; ++trial) {
        auto x = support::random_image(rng, 4);
        auto y = support::random_image(rng, 3);
        auto k = 1 + trial % 3;
        std::vector<DigitalMap> maps;
        std::vector<oracle::Row> rows;
        for (int i = 0; i < k; ++i) {
            maps.push_back(pick(rng, x, y));
            rows.push_back(row(maps.back()));
        }
        if (trial % 4 == 0) {
            maps.push_back(maps.back());
            rows.push_back(rows.back());
        }
        auto got = hcs(maps);
        CHECK(got.values.exact);
        auto want = oracle::hcs(*x, *y, rows, false);
        CHECK(got.values.values == sorted(want));
        CHECK(got.min_value == *want.begin());
        CHECK(mc(maps).value == *want.begin());

        std::vector<DigitalMap> selfs;
        std::vector<oracle::Row> srows;
        for (int i = 0; i < std::min(k, 2); ++i) {
            selfs.push_back(pick(rng, x, x));
            srows.push_back(row(selfs.back()));
        }
        auto fixed = oracle::hcs(*x, *x, srows, true);
        CHECK(hfs(selfs).values.values == sorted(fixed));
        CHECK(mcf(selfs).value == *fixed.begin());

        if (x->size() <= 3)
            for (std::size_t j = 1; j <= 3; ++j)
                CHECK(self_coincidence_sequence(x, 3).entries[j - 1].value == oracle::mj(*x, j));
    }
}

TEST_CASE("homotopy invariance and extension inclusion")
{
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 60; ++trial) {
        auto x = support::random_image(rng, 4);
        auto y = support::random_image(rng, 4);
        std::vector<DigitalMap> maps{pick(rng, x, y), pick(rng, x, y)};
        auto base = hcs(maps);
        // Swap each map for another member of its class.
        auto moved = maps;
        for (auto& f : moved) {
            auto cls = homotopy_class(f);
            f = cls.member(std::uniform_int_distribution<std::size_t>(0, cls.size() - 1)(rng));
        }
        CHECK(hcs(moved).values.values == base.values.values);
        auto ext = hcs_extension(maps);
        CHECK(ext.included);
        CHECK(ext.shorter.values.values == base.values.values);
    }
}

TEST_CASE("truncated classes surface in flags")
{
    auto c6 = builders::cycle(6);
    EnumerationBudget cap;
    cap.max_results = 3;
    auto r = hcs(std::vector{DigitalMap::identity(c6), DigitalMap::identity(c6)}, cap);
    CHECK_FALSE(r.classes_complete);
    CHECK_FALSE(r.values.exact);
}
