#include "kernels_impl.hpp"

#include <arm_neon.h>
#include <bit>

namespace digitop::kernels::neon {

namespace {

inline std::uint64_t eq4(const std::uint32_t* a, const std::uint32_t* b)
{
    static constexpr std::uint32_t weights[4] = {1, 2, 4, 8};
    auto eq = vceqq_u32(vld1q_u32(a), vld1q_u32(b));
    return vaddvq_u32(vandq_u32(eq, vld1q_u32(weights)));
}

inline std::uint64_t word_mask(const std::uint32_t* a, const std::uint32_t* b, std::size_t lanes)
{
    std::uint64_t bits = 0;
    std::size_t k = 0;
    for (; k + 4 <= lanes; k += 4)
        bits |= eq4(a + k, b + k) << k;
    for (; k < lanes; ++k)
        bits |= static_cast<std::uint64_t>(a[k] == b[k]) << k;
    return bits;
}

} // namespace

void agreement(const std::uint32_t* a, const std::uint32_t* b, std::size_t n, std::uint64_t* out)
{
    const auto words = (n + 63) / 64;
    for (std::size_t w = 0; w < words; ++w) {
        const auto base = w * 64;
        out[w] = word_mask(a + base, b + base, n - base < 64 ? n - base : 64);
    }
}

void batch_agreement(const std::uint32_t* ref, const std::uint32_t* rows, std::size_t count, std::size_t n,
                     const std::uint64_t* within, std::uint64_t* out)
{
    const auto words = (n + 63) / 64;
    for (std::size_t r = 0; r < count; ++r) {
        auto* dst = out + r * words;
        agreement(ref, rows + r * n, n, dst);
        for (std::size_t w = 0; w < words; ++w)
            dst[w] &= within[w];
    }
}

std::size_t count_equal(const std::uint32_t* a, const std::uint32_t* b, std::size_t n)
{
    std::size_t total = 0;
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4)
        total += static_cast<std::size_t>(std::popcount(eq4(a + k, b + k)));
    for (; k < n; ++k)
        total += a[k] == b[k];
    return total;
}

} // namespace digitop::kernels::neon
