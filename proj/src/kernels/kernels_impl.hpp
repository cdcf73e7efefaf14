#pragma once

#include <cstddef>
#include <cstdint>

namespace digitop::kernels {

#define DIGITOP_KERNEL_DECLS                                                                                 \
    void agreement(const std::uint32_t* a, const std::uint32_t* b, std::size_t n, std::uint64_t* out);      \
    void batch_agreement(const std::uint32_t* ref, const std::uint32_t* rows, std::size_t count,             \
                         std::size_t n, const std::uint64_t* within, std::uint64_t* out);                    \
    std::size_t count_equal(const std::uint32_t* a, const std::uint32_t* b, std::size_t n);

namespace scalar {
DIGITOP_KERNEL_DECLS
}

#if defined(DIGITOP_HAVE_AVX2)
namespace avx2 {
DIGITOP_KERNEL_DECLS
}
#endif

#if defined(DIGITOP_HAVE_NEON)
namespace neon {
DIGITOP_KERNEL_DECLS
}
#endif

#undef DIGITOP_KERNEL_DECLS

} // namespace digitop::kernels
