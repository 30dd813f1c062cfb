#include "tate/simd/modp_kernels.hpp"

#if TATE_HAVE_AVX2_KERNELS

#include <immintrin.h>

#include <cassert>

namespace tate::simd::avx2 {
namespace {

// Four lanes of (d + c*s) mod p, all quantities exact in double.
__attribute__((target("avx2,fma"))) inline __m128i reduce4(__m128i d, __m128i s, __m256d c,
                                                           __m256d p, __m256d inv_p) {
    __m256d x = _mm256_fmadd_pd(c, _mm256_cvtepi32_pd(s), _mm256_cvtepi32_pd(d));
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(x, inv_p));
    __m256d r = _mm256_fnmadd_pd(q, p, x);
    // q may be off by one in either direction.
    __m256d neg = _mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ);
    r = _mm256_add_pd(r, _mm256_and_pd(neg, p));
    __m256d big = _mm256_cmp_pd(r, p, _CMP_GE_OQ);
    r = _mm256_sub_pd(r, _mm256_and_pd(big, p));
    return _mm256_cvttpd_epi32(r);
}

}  // namespace

__attribute__((target("avx2,fma"))) void axpy_mod(std::span<std::uint32_t> dst,
                                                  std::span<const std::uint32_t> src,
                                                  std::uint32_t c, std::uint32_t p) {
    assert(dst.size() == src.size());
    assert(p < kMaxKernelModulus);
    const __m256d vc = _mm256_set1_pd(static_cast<double>(c));
    const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
    const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
    std::size_t i = 0;
    const std::size_t n = dst.size();
    for (; i + 8 <= n; i += 8) {
        auto* d = reinterpret_cast<__m128i*>(dst.data() + i);
        auto* s = reinterpret_cast<const __m128i*>(src.data() + i);
        __m128i lo = reduce4(_mm_loadu_si128(d), _mm_loadu_si128(s), vc, vp, vinv);
        __m128i hi = reduce4(_mm_loadu_si128(d + 1), _mm_loadu_si128(s + 1), vc, vp, vinv);
        _mm_storeu_si128(d, lo);
        _mm_storeu_si128(d + 1, hi);
    }
    for (; i + 4 <= n; i += 4) {
        auto* d = reinterpret_cast<__m128i*>(dst.data() + i);
        auto* s = reinterpret_cast<const __m128i*>(src.data() + i);
        _mm_storeu_si128(d, reduce4(_mm_loadu_si128(d), _mm_loadu_si128(s), vc, vp, vinv));
    }
    scalar::axpy_mod(dst.subspan(i), src.subspan(i), c, p);
}

__attribute__((target("avx2,fma"))) void scale_mod(std::span<std::uint32_t> row,
                                                   std::uint32_t c, std::uint32_t p) {
    assert(p < kMaxKernelModulus);
    const __m256d vc = _mm256_set1_pd(static_cast<double>(c));
    const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
    const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
    const __m128i zero = _mm_setzero_si128();
    std::size_t i = 0;
    for (; i + 4 <= row.size(); i += 4) {
        auto* r = reinterpret_cast<__m128i*>(row.data() + i);
        _mm_storeu_si128(r, reduce4(zero, _mm_loadu_si128(r), vc, vp, vinv));
    }
    scalar::scale_mod(row.subspan(i), c, p);
}

}  // namespace tate::simd::avx2

#endif
