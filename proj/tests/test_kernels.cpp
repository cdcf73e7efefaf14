#include "doctest.h"

#include "digitop/kernels.hpp"
#include "digitop/point_set.hpp"

#include <random>
#include <vector>

using namespace digitop;

namespace {

std::vector<std::uint32_t> random_row(std::mt19937_64& rng, std::size_t n, std::uint32_t values)
{
    std::uniform_int_distribution<std::uint32_t> d(0, values - 1);
    std::vector<std::uint32_t> r(n);
    for (auto& v : r)
        v = d(rng);
    return r;
}

std::vector<std::uint64_t> reference_mask(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b)
{
    std::vector<std::uint64_t> m(word_count(a.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] == b[i])
            m[i / 64] |= std::uint64_t{1} << (i % 64);
    return m;
}

} // namespace

TEST_CASE("scalar kernel matches the definition")
{
    std::mt19937_64 rng(1);
    const auto& k = kernels::scalar_kernels();
    for (std::size_t n = 1; n < 140; ++n) {
        auto a = random_row(rng, n, 3);
        auto b = random_row(rng, n, 3);
        std::vector<std::uint64_t> out(word_count(n), ~0ULL);
        k.agreement(a.data(), b.data(), n, out.data());
        CHECK(out == reference_mask(a, b));
        std::size_t equal = 0;
        for (std::size_t i = 0; i < n; ++i)
            equal += a[i] == b[i];
        CHECK(k.count_equal(a.data(), b.data(), n) == equal);
    }
}

TEST_CASE("every available kernel variant agrees with scalar")
{
    std::mt19937_64 rng(2);
    const auto& ref = kernels::scalar_kernels();
    auto variants = kernels::available_kernels();
    REQUIRE(!variants.empty());
    CHECK(variants[0]->name == ref.name);
    for (const auto* v : variants) {
        INFO("variant " << v->name);
        for (std::size_t n = 1; n < 200; n += (n < 40 ? 1 : 13)) {
            const auto words = word_count(n);
            auto a = random_row(rng, n, 2);
            auto b = random_row(rng, n, 2);
            std::vector<std::uint64_t> x(words), y(words);
            ref.agreement(a.data(), b.data(), n, x.data());
            v->agreement(a.data(), b.data(), n, y.data());
            CHECK(x == y);
            CHECK(ref.count_equal(a.data(), b.data(), n) == v->count_equal(a.data(), b.data(), n));

            const std::size_t count = 1 + n % 9;
            std::vector<std::uint32_t> rows;
            for (std::size_t r = 0; r < count; ++r) {
                auto row = random_row(rng, n, 2);
                rows.insert(rows.end(), row.begin(), row.end());
            }
            std::vector<std::uint64_t> within(words);
            for (auto& w : within)
                w = rng();
            if (n % 64)
                within.back() &= (std::uint64_t{1} << (n % 64)) - 1;
            std::vector<std::uint64_t> bx(count * words), by(count * words, 0xAAAA);
            ref.batch_agreement(a.data(), rows.data(), count, n, within.data(), bx.data());
            v->batch_agreement(a.data(), rows.data(), count, n, within.data(), by.data());
            CHECK(bx == by);
        }
    }
}

TEST_CASE("kernel selection")
{
    auto before = kernels::active_kernels().name;
    CHECK(kernels::select_kernels("scalar"));
    CHECK(kernels::active_kernels().name == "scalar");
    CHECK_FALSE(kernels::select_kernels("no-such-variant"));
    CHECK(kernels::active_kernels().name == "scalar");
    CHECK(kernels::select_kernels(before));
}
