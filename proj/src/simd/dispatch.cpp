#include <atomic>
#include <cstdlib>
#include <cstring>

#include "tate/simd/modp_kernels.hpp"

namespace tate::simd {
namespace {

Isa initial_isa() {
    const char* env = std::getenv("TATE_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return Isa::Scalar;
    return detected_isa();
}

std::atomic<Isa>& active() {
    static std::atomic<Isa> isa{initial_isa()};
    return isa;
}

}  // namespace

const char* isa_name(Isa isa) {
    switch (isa) {
        case Isa::Avx2:
            return "avx2";
        case Isa::Scalar:
            break;
    }
    return "scalar";
}

Isa detected_isa() {
#if TATE_HAVE_AVX2_KERNELS
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::Avx2;
#endif
    return Isa::Scalar;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
    if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) isa = Isa::Scalar;
    active().store(isa, std::memory_order_relaxed);
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t c, std::uint32_t p) {
#if TATE_HAVE_AVX2_KERNELS
    if (p < kMaxKernelModulus && active_isa() == Isa::Avx2) return avx2::axpy_mod(dst, src, c, p);
#endif
    scalar::axpy_mod(dst, src, c, p);
}

void scale_mod(std::span<std::uint32_t> row, std::uint32_t c, std::uint32_t p) {
#if TATE_HAVE_AVX2_KERNELS
    if (p < kMaxKernelModulus && active_isa() == Isa::Avx2) return avx2::scale_mod(row, c, p);
#endif
    scalar::scale_mod(row, c, p);
}

}  // namespace tate::simd
