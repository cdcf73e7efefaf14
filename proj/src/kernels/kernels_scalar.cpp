#include "kernels_impl.hpp"

namespace digitop::kernels::scalar {

void agreement(const std::uint32_t* a, const std::uint32_t* b, std::size_t n, std::uint64_t* out)
{
    const auto words = (n + 63) / 64;
    for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = 0;
        const auto base = w * 64;
        const auto lanes = n - base < 64 ? n - base : 64;
        for (std::size_t k = 0; k < lanes; ++k)
            bits |= static_cast<std::uint64_t>(a[base + k] == b[base + k]) << k;
        out[w] = bits;
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
    for (std::size_t k = 0; k < n; ++k)
        total += a[k] == b[k];
    return total;
}

} // namespace digitop::kernels::scalar
