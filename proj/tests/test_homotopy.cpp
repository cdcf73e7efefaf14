#include "doctest.h"

#include "digitop/builders.hpp"
#include "digitop/errors.hpp"
#include "digitop/homotopy.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <algorithm>
#include <random>

using namespace digitop;

namespace {

std::vector<oracle::Row> members(const HomotopyClass& c)
{
    std::vector<oracle::Row> out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        auto r = c.rows().row(i);
        out.emplace_back(r.begin(), r.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

DigitalMap as_map(const ImageRef& x, const ImageRef& y, const oracle::Row& r)
{
    return DigitalMap::from_assignment(x, y, {r.begin(), r.end()});
}

} // namespace

TEST_CASE("one-step homotopy")
{
    auto c4 = builders::cycle(4);
    auto id = DigitalMap::identity(c4);
    auto rot = DigitalMap::from_assignment(c4, c4, {1, 2, 3, 0});
    CHECK(one_step_homotopic(id, id));
    CHECK(one_step_homotopic(id, rot));
    CHECK_FALSE(one_step_homotopic(DigitalMap::constant(c4, c4, 0), DigitalMap::constant(c4, c4, 2)));
    CHECK_THROWS_AS(one_step_homotopic(id, DigitalMap::identity(builders::cycle(5))), InvalidInput);
}

TEST_CASE("homotopy classes")
{
    auto fig = builders::figure1();
    auto rigid = homotopy_class(DigitalMap::identity(fig));
    CHECK(rigid.complete());
    CHECK(rigid.size() == 1);

    auto i1 = builders::interval(0, 1);
    auto all = homotopy_class(DigitalMap::constant(i1, i1, 0));
    CHECK(all.size() == 4);

    auto c4 = builders::cycle(4);
    auto cls = homotopy_class(DigitalMap::identity(c4));
    CHECK(cls.complete());
    CHECK(cls.size() == 84);
    for (PointIndex v = 0; v < 4; ++v)
        CHECK(cls.contains(DigitalMap::constant(c4, c4, v)));
    CHECK(cls.member(0) == DigitalMap::identity(c4));

    EnumerationBudget cap;
    cap.max_results = 5;
    auto truncated = homotopy_class(DigitalMap::identity(c4), cap);
    CHECK_FALSE(truncated.complete());
    CHECK(truncated.size() <= 5);
}

TEST_CASE("homotopy classes agree with the homotopy-graph oracle")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        auto x = support::random_image(rng, 4);
        auto y = support::random_image(rng, 4);
        auto all = oracle::all_maps(*x, *y);
        auto& row = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
        auto cls = homotopy_class(as_map(x, y, row));
        CHECK(cls.complete());
        CHECK(members(cls) == oracle::homotopy_class(*x, *y, row));
    }
}

TEST_CASE("are_homotopic")
{
    auto c4 = builders::cycle(4);
    auto id = DigitalMap::identity(c4);
    auto same = are_homotopic(id, id);
    CHECK(same.decision == Decision::yes);
    REQUIRE(same.witness);
    CHECK(same.witness->chain.size() == 1);

    auto to_const = are_homotopic(id, DigitalMap::constant(c4, c4, 0));
    CHECK(to_const.decision == Decision::yes);
    REQUIRE(to_const.witness);
    CHECK(to_const.witness->validate());
    CHECK(to_const.witness->chain.front() == id);
    CHECK(to_const.witness->chain.back() == DigitalMap::constant(c4, c4, 0));

    auto fig = builders::figure1();
    auto other = DigitalMap::constant(fig, fig, 0);
    CHECK(are_homotopic(DigitalMap::identity(fig), other).decision == Decision::no);

    auto budgeted = are_homotopic(DigitalMap::identity(builders::cycle(6)),
                                  DigitalMap::constant(builders::cycle(6), builders::cycle(6), 3),
                                  EnumerationBudget::nodes(3));
    CHECK(budgeted.decision != Decision::no);
}

TEST_CASE("homotopy is an equivalence relation on small pairs")
{
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 30; ++trial) {
        auto x = support::random_image(rng, 3);
        auto y = support::random_image(rng, 3);
        auto all = oracle::all_maps(*x, *y);
        std::vector<DigitalMap> maps;
        for (auto& r : all)
            maps.push_back(as_map(x, y, r));
        const auto m = maps.size();
        std::vector<std::vector<bool>> rel(m, std::vector<bool>(m));
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                auto ans = are_homotopic(maps[a], maps[b]);
                REQUIRE(ans.decision != Decision::unknown);
                rel[a][b] = ans.decision == Decision::yes;
                if (ans.witness)
                    CHECK(ans.witness->validate());
            }
        for (std::size_t a = 0; a < m; ++a) {
            CHECK(rel[a][a]);
            for (std::size_t b = 0; b < m; ++b) {
                CHECK(rel[a][b] == rel[b][a]);
                for (std::size_t c = 0; c < m; ++c)
                    if (rel[a][b] && rel[b][c])
                        CHECK(rel[a][c]);
            }
        }
    }
}

TEST_CASE("rigidity")
{
    CHECK(is_rigid_image(builders::figure1()));
    CHECK_FALSE(is_rigid_image(builders::cycle(4)));
    CHECK(is_rigid_image(builders::singleton()));
    CHECK_FALSE(is_rigid_image(builders::cube()));
    // A rigid image's identity class is {id}.
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 60; ++trial) {
        auto x = support::random_image(rng, 5);
        if (is_rigid_image(x))
            CHECK(homotopy_class(DigitalMap::identity(x)).size() == 1);
    }
}

TEST_CASE("nullhomotopy and contractibility")
{
    auto c4 = builders::cycle(4);
    CHECK(is_nullhomotopic(DigitalMap::constant(c4, c4, 1)).decision == Decision::yes);
    auto cube = is_contractible(builders::cube());
    CHECK(cube.decision == Decision::yes);
    REQUIRE(cube.witness);
    CHECK(cube.witness->validate());
    CHECK(cube.witness->chain.back().is_constant());
    CHECK(is_contractible(builders::cube_minus_vertex()).decision == Decision::yes);
    CHECK(is_contractible(builders::cycle(4)).decision == Decision::yes);
    CHECK(is_contractible(builders::figure1()).decision == Decision::no);
    CHECK(is_contractible(builders::discrete(2)).decision == Decision::no);
    CHECK(is_contractible(builders::cycle(5)).decision == Decision::no);
}
