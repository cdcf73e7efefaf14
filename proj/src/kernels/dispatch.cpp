#include "digitop/kernels.hpp"
#include "kernels_impl.hpp"

#include <array>
#include <atomic>
#include <cstdlib>
#include <vector>

namespace digitop::kernels {

namespace {

constexpr KernelTable kScalar{"scalar", scalar::agreement, scalar::batch_agreement, scalar::count_equal};
#if defined(DIGITOP_HAVE_AVX2)
constexpr KernelTable kAvx2{"avx2", avx2::agreement, avx2::batch_agreement, avx2::count_equal};
#endif
#if defined(DIGITOP_HAVE_NEON)
constexpr KernelTable kNeon{"neon", neon::agreement, neon::batch_agreement, neon::count_equal};
#endif

std::vector<const KernelTable*> detect()
{
    std::vector<const KernelTable*> found{&kScalar};
#if defined(DIGITOP_HAVE_AVX2)
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2"))
        found.push_back(&kAvx2);
#endif
#if defined(DIGITOP_HAVE_NEON)
    found.push_back(&kNeon);
#endif
    return found;
}

const std::vector<const KernelTable*>& supported()
{
    static const auto tables = detect();
    return tables;
}

const KernelTable* find(std::string_view name)
{
    for (auto* t : supported())
        if (t->name == name)
            return t;
    return nullptr;
}

std::atomic<const KernelTable*>& active_slot()
{
    static std::atomic<const KernelTable*> slot = [] {
        if (const char* forced = std::getenv("DIGITOP_KERNEL"))
            if (auto* t = find(forced))
                return t;
        return supported().back();
    }();
    return slot;
}

} // namespace

const KernelTable& scalar_kernels() { return kScalar; }

std::span<const KernelTable* const> available_kernels() { return supported(); }

const KernelTable& active_kernels() { return *active_slot().load(std::memory_order_relaxed); }

bool select_kernels(std::string_view name)
{
    auto* t = find(name);
    if (!t)
        return false;
    active_slot().store(t, std::memory_order_relaxed);
    return true;
}

} // namespace digitop::kernels
