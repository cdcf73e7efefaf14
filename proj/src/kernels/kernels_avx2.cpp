// Built with -mavx2; only reached through the dispatcher after a cpuid check.
#include "kernels_impl.hpp"

#include <bit>
#include <immintrin.h>

namespace digitop::kernels::avx2 {

namespace {

// Lane-equality bits of 8 consecutive uint32 values.
inline std::uint64_t eq8(const std::uint32_t* a, const std::uint32_t* b)
{
    auto va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a));
    auto vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b));
    auto eq = _mm256_cmpeq_epi32(va, vb);
    return static_cast<std::uint32_t>(_mm256_movemask_ps(_mm256_castsi256_ps(eq)));
}

// Partial chunk of `lanes` < 8 values; masked loads never touch memory past the end.
inline std::uint64_t eq_tail(const std::uint32_t* a, const std::uint32_t* b, std::size_t lanes)
{
    alignas(32) static constexpr std::int32_t ramp[8] = {0, 1, 2, 3, 4, 5, 6, 7};
    auto limit = _mm256_set1_epi32(static_cast<int>(lanes));
    auto mask = _mm256_cmpgt_epi32(limit, _mm256_load_si256(reinterpret_cast<const __m256i*>(ramp)));
    auto va = _mm256_maskload_epi32(reinterpret_cast<const int*>(a), mask);
    auto vb = _mm256_maskload_epi32(reinterpret_cast<const int*>(b), mask);
    auto eq = _mm256_and_si256(_mm256_cmpeq_epi32(va, vb), mask);
    return static_cast<std::uint32_t>(_mm256_movemask_ps(_mm256_castsi256_ps(eq)));
}

inline std::uint64_t word_mask(const std::uint32_t* a, const std::uint32_t* b, std::size_t lanes)
{
    std::uint64_t bits = 0;
    std::size_t k = 0;
    for (; k + 8 <= lanes; k += 8)
        bits |= eq8(a + k, b + k) << k;
    if (k < lanes)
        bits |= eq_tail(a + k, b + k, lanes - k) << k;
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
    if (n <= 8) {
        // Whole map fits one register: keep ref resident across rows.
        alignas(32) static constexpr std::int32_t ramp[8] = {0, 1, 2, 3, 4, 5, 6, 7};
        auto mask = _mm256_cmpgt_epi32(_mm256_set1_epi32(static_cast<int>(n)),
                                       _mm256_load_si256(reinterpret_cast<const __m256i*>(ramp)));
        auto vref = _mm256_maskload_epi32(reinterpret_cast<const int*>(ref), mask);
        const auto keep = within[0];
        for (std::size_t r = 0; r < count; ++r) {
            auto vrow = _mm256_maskload_epi32(reinterpret_cast<const int*>(rows + r * n), mask);
            auto eq = _mm256_and_si256(_mm256_cmpeq_epi32(vref, vrow), mask);
            out[r] = static_cast<std::uint32_t>(_mm256_movemask_ps(_mm256_castsi256_ps(eq))) & keep;
        }
        return;
    }
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
    for (; k + 8 <= n; k += 8)
        total += static_cast<std::size_t>(std::popcount(eq8(a + k, b + k)));
    if (k < n)
        total += static_cast<std::size_t>(std::popcount(eq_tail(a + k, b + k, n - k)));
    return total;
}

} // namespace digitop::kernels::avx2
