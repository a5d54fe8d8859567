#include "doctest.h"
#include "psalg/kernels.hpp"
#include "psalg/field.hpp"

#include <cstring>
#include <random>
#include <string>
#include <vector>

using namespace psalg;

namespace {

std::vector<std::uint32_t> random_vec(std::mt19937_64& rng, std::size_t n, std::uint32_t p) {
    std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
    std::vector<std::uint32_t> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

} // namespace

TEST_CASE("selected kernels match the scalar reference") {
    std::mt19937_64 rng(4242);
    // sizes straddling the 8-lane vector width, including ragged tails
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u, 32749u}) {
        const auto& k = kern::select(p);
        std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
        for (std::size_t n : {0u, 1u, 3u, 7u, 8u, 9u, 15u, 16u, 17u, 64u, 100u, 257u}) {
            auto dst = random_vec(rng, n, p);
            auto src = random_vec(rng, n, p);
            std::uint32_t c = d(rng);
            auto ref = dst;
            kern::axpy_scalar(ref.data(), src.data(), n, c, p);
            auto got = dst;
            k.axpy(got.data(), src.data(), n, c, p);
            CHECK(got == ref);
            for (std::size_t i = 0; i < n; ++i)
                CHECK(ref[i] == fp_add(dst[i], fp_mul(c, src[i], p), p));

            ref = dst;
            kern::scale_scalar(ref.data(), n, c, p);
            got = dst;
            k.scale(got.data(), n, c, p);
            CHECK(got == ref);
            for (std::size_t i = 0; i < n; ++i)
                CHECK(ref[i] == fp_mul(dst[i], c, p));
        }
    }
}

TEST_CASE("dispatch falls back to scalar for wide moduli") {
    // AVX2 path needs p < 2^15
    const auto& wide = kern::select(2147483647u);
    CHECK(std::string(wide.name) == "scalar");
#if PSALG_HAVE_AVX2_TU
    const auto& narrow = kern::select(5);
    // on AVX2 hardware the narrow modulus must pick the vector kernels
    CHECK((std::string(narrow.name) == "avx2" || std::string(narrow.name) == "scalar"));
#endif
}

TEST_CASE("axpy with c=0 and scale with c=1 are identities") {
    std::mt19937_64 rng(99);
    const std::uint32_t p = 32749;
    const auto& k = kern::select(p);
    auto v = random_vec(rng, 133, p);
    auto src = random_vec(rng, 133, p);
    auto w = v;
    k.axpy(w.data(), src.data(), w.size(), 0, p);
    CHECK(w == v);
    k.scale(w.data(), w.size(), 1, p);
    CHECK(w == v);
}
