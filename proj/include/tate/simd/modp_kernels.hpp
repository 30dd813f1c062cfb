#pragma once
// Row kernels for dense elimination over F_p.
//
// Residues are stored as uint32 in [0, p). The SIMD variants evaluate
// d + c*s in double precision, which is exact while p < 2^26.

#include <cstdint>
#include <span>

namespace tate::simd {

inline constexpr std::uint32_t kMaxKernelModulus = 1u << 26;

enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa);

/// Best instruction set supported by the running CPU.
Isa detected_isa();
/// Instruction set used by the dispatching entry points. Defaults to
/// detected_isa(); the environment variable TATE_SIMD=scalar forces the
/// reference kernels.
Isa active_isa();
/// Override for tests. Falls back to Scalar if `isa` is unsupported.
void set_active_isa(Isa isa);

/// dst[i] = (dst[i] + c * src[i]) mod p
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t c, std::uint32_t p);
/// row[i] = (c * row[i]) mod p
void scale_mod(std::span<std::uint32_t> row, std::uint32_t c, std::uint32_t p);

namespace scalar {
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t c, std::uint32_t p);
void scale_mod(std::span<std::uint32_t> row, std::uint32_t c, std::uint32_t p);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define TATE_HAVE_AVX2_KERNELS 1
namespace avx2 {
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t c, std::uint32_t p);
void scale_mod(std::span<std::uint32_t> row, std::uint32_t c, std::uint32_t p);
}  // namespace avx2
#else
#define TATE_HAVE_AVX2_KERNELS 0
#endif

}  // namespace tate::simd
