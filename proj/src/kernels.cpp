#include "psalg/kernels.hpp"

namespace psalg::kern {

void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src,
                 std::size_t n, std::uint32_t c, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t t = dst[i] + static_cast<std::uint64_t>(c) * src[i];
        dst[i] = static_cast<std::uint32_t>(t % p);
    }
}

void scale_scalar(std::uint32_t* dst, std::size_t n,
                  std::uint32_t c, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(dst[i]) * c % p);
}

namespace {

const Kernels scalar_kernels{axpy_scalar, scale_scalar, "scalar"};

#if PSALG_HAVE_AVX2_TU
const Kernels avx2_kernels{axpy_avx2, scale_avx2, "avx2"};

bool cpu_has_avx2() {
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok;
}
#endif

} // namespace

const Kernels& select(std::uint32_t p) {
#if PSALG_HAVE_AVX2_TU
    if (p < (1u << 15) && cpu_has_avx2()) return avx2_kernels;
#endif
    (void)p;
    return scalar_kernels;
}

} // namespace psalg::kern
