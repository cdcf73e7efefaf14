#pragma once

// Agreement-mask kernels: the data-parallel inner loop of every coincidence,
// fixed-point and equalizer computation. A map is a row of n uint32 codomain
// indices; comparing two rows lane-by-lane yields a bitmask over the domain.
//
// A scalar reference implementation is always present. Vector variants are
// selected at runtime (AVX2 via cpuid on x86-64, NEON on aarch64) and must
// agree with the scalar kernels bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace digitop::kernels {

/// out[w] bit b is set iff a[64w+b] == b[64w+b]. out has word_count(n)
/// words; bits at positions >= n are cleared.
using AgreementFn = void (*)(const std::uint32_t* a, const std::uint32_t* b, std::size_t n, std::uint64_t* out);

/// For each of `count` rows (row-major, stride n) writes
/// agreement(ref, row) & within into out + r * word_count(n).
using BatchAgreementFn = void (*)(const std::uint32_t* ref, const std::uint32_t* rows, std::size_t count,
                                  std::size_t n, const std::uint64_t* within, std::uint64_t* out);

/// Number of lanes where a and b agree.
using CountEqualFn = std::size_t (*)(const std::uint32_t* a, const std::uint32_t* b, std::size_t n);

struct KernelTable {
    std::string_view name;
    AgreementFn agreement;
    BatchAgreementFn batch_agreement;
    CountEqualFn count_equal;
};

const KernelTable& scalar_kernels();

/// Every variant the running CPU supports, scalar first.
std::span<const KernelTable* const> available_kernels();

/// The variant used by the library. Defaults to the widest supported one;
/// the environment variable DIGITOP_KERNEL=<name> pins a specific variant.
const KernelTable& active_kernels();

/// Pins the active variant by name; returns false if it is unavailable.
bool select_kernels(std::string_view name);

inline void agreement(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::uint64_t* out)
{
    active_kernels().agreement(a.data(), b.data(), a.size(), out);
}

inline std::size_t count_equal(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b)
{
    return active_kernels().count_equal(a.data(), b.data(), a.size());
}

} // namespace digitop::kernels
