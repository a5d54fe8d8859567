#pragma once

#include <cstddef>
#include <cstdint>

// Mod-p vector kernels for the row-reduction inner loops. A scalar reference
// implementation works for any modulus up to 2^31-1; the AVX2 variant covers
// p < 2^15 (lane values stay below 2^30, reduced with a Barrett step) and is
// selected at runtime. Variants are equivalence-tested against each other.

namespace psalg::kern {

// dst[i] = (dst[i] + c * src[i]) mod p; all values canonical in [0, p).
using AxpyFn = void (*)(std::uint32_t* dst, const std::uint32_t* src,
                        std::size_t n, std::uint32_t c, std::uint32_t p);
// dst[i] = (dst[i] * c) mod p.
using ScaleFn = void (*)(std::uint32_t* dst, std::size_t n,
                         std::uint32_t c, std::uint32_t p);

void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src,
                 std::size_t n, std::uint32_t c, std::uint32_t p);
void scale_scalar(std::uint32_t* dst, std::size_t n,
                  std::uint32_t c, std::uint32_t p);

#if PSALG_HAVE_AVX2_TU
// Requires p < 2^15; the dispatcher enforces this.
void axpy_avx2(std::uint32_t* dst, const std::uint32_t* src,
               std::size_t n, std::uint32_t c, std::uint32_t p);
void scale_avx2(std::uint32_t* dst, std::size_t n,
                std::uint32_t c, std::uint32_t p);
#endif

struct Kernels {
    AxpyFn axpy;
    ScaleFn scale;
    const char* name;
};

/// Picks the best kernel set for this CPU and modulus.
const Kernels& select(std::uint32_t p);

} // namespace psalg::kern
