#include "tate/simd/modp_kernels.hpp"

#include <cassert>

namespace tate::simd::scalar {

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t c, std::uint32_t p) {
    assert(dst.size() == src.size());
    const std::uint64_t cc = c;
    for (std::size_t i = 0; i < dst.size(); ++i) {
        dst[i] = static_cast<std::uint32_t>((dst[i] + cc * src[i]) % p);
    }
}

void scale_mod(std::span<std::uint32_t> row, std::uint32_t c, std::uint32_t p) {
    const std::uint64_t cc = c;
    for (auto& x : row) x = static_cast<std::uint32_t>(cc * x % p);
}

}  // namespace tate::simd::scalar
