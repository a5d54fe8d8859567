#include "psalg/kernels.hpp"

#include <immintrin.h>

// AVX2 variants for p < 2^15. With c, src[i], dst[i] all < p, the update
// t = dst[i] + c*src[i] stays below p^2 + p < 2^30, so 32-bit lanes suffice.
// Reduction uses Barrett with M = floor(2^32 / p): q = hi32(t*M) satisfies
// t - q*p in [0, 2p), so a single conditional subtract canonicalizes.

namespace psalg::kern {

namespace {

inline __m256i mulhi_u32(__m256i a, __m256i b) {
    __m256i even = _mm256_mul_epu32(a, b);
    __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
    even = _mm256_srli_epi64(even, 32);
    return _mm256_blend_epi32(even, odd, 0b10101010);
}

inline __m256i barrett(__m256i t, __m256i pv, __m256i mv) {
    __m256i q = mulhi_u32(t, mv);
    __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(q, pv));
    // values < 2p < 2^16, so signed compare is safe
    __m256i lt = _mm256_cmpgt_epi32(pv, r);
    return _mm256_sub_epi32(r, _mm256_andnot_si256(lt, pv));
}

} // namespace

void axpy_avx2(std::uint32_t* dst, const std::uint32_t* src,
               std::size_t n, std::uint32_t c, std::uint32_t p) {
    const std::uint32_t m = static_cast<std::uint32_t>((std::uint64_t{1} << 32) / p);
    const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i mv = _mm256_set1_epi32(static_cast<int>(m));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i t = _mm256_add_epi32(d, _mm256_mullo_epi32(s, cv));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), barrett(t, pv, mv));
    }
    if (i < n) axpy_scalar(dst + i, src + i, n - i, c, p);
}

void scale_avx2(std::uint32_t* dst, std::size_t n,
                std::uint32_t c, std::uint32_t p) {
    const std::uint32_t m = static_cast<std::uint32_t>((std::uint64_t{1} << 32) / p);
    const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i mv = _mm256_set1_epi32(static_cast<int>(m));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i t = _mm256_mullo_epi32(d, cv);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), barrett(t, pv, mv));
    }
    if (i < n) scale_scalar(dst + i, n - i, c, p);
}

} // namespace psalg::kern
