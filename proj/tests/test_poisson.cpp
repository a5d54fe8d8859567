#include "doctest.h"
#include "psalg/poisson.hpp"

#include <random>

using namespace psalg;

namespace {

PoissonElement rand_elem(std::mt19937_64& rng, const PoissonRing& R, bool constant_free = false) {
    std::uniform_int_distribution<std::uint32_t> d(0, R.p() - 1);
    Vec v(R.dim());
    for (auto& x : v) x = d(rng);
    if (constant_free) v[0] = 0;
    return R.from_vec(v);
}

} // namespace

TEST_CASE("truncated symmetric algebra dimensions") {
    auto h3 = make_named("heisenberg", {{"m", 1}}, PrimeModulus(3));
    auto R = PoissonRing::truncated_symmetric(h3);
    CHECK(R->dim() == 27); // 3^3
    CHECK(R->num_generators() == 3);
    CHECK(R->basis()[0] == Monomial{0, 0, 0});

    auto L4 = make_named("filiform", {{"n", 4}}, PrimeModulus(3));
    CHECK(PoissonRing::truncated_symmetric(L4)->dim() == 81);

    auto S6 = PoissonRing::degree_truncated_symmetric(h3, 6);
    CHECK(S6->dim() == 84); // C(6+3,3) monomials of degree <= 6

    auto h2 = PoissonRing::truncated_hamiltonian(1, PrimeModulus(2));
    CHECK(h2->dim() == 4);
    CHECK(h2->bracket_has_constants());
}

TEST_CASE("bracket oracles on s(h3)") {
    auto L = make_named("heisenberg", {{"m", 1}}, PrimeModulus(5));
    auto R = PoissonRing::truncated_symmetric(L);
    auto x = R->generator(0), y = R->generator(1), z = R->generator(2);
    CHECK(R->bracket(x, y) == z);
    CHECK(R->bracket(y, x) == R->scalar_mul(-1, z));
    CHECK(R->bracket(x, z).is_zero());
    // Leibniz by hand: {x, y^2} = 2yz
    auto y2 = R->multiply(y, y);
    CHECK(R->bracket(x, y2) == R->scalar_mul(2, R->multiply(y, z)));
    // {x^2, y^2} = 4xyz
    auto x2 = R->multiply(x, x);
    CHECK(R->bracket(x2, y2) ==
          R->scalar_mul(4, R->multiply(x, R->multiply(y, z))));
    // truncation: x^5 = 0
    CHECK(R->power(x, 5).is_zero());
    CHECK_FALSE(R->power(x, 4).is_zero());
}

TEST_CASE("hamiltonian bracket has a constant term") {
    auto R = PoissonRing::truncated_hamiltonian(1, PrimeModulus(3));
    auto X = R->generator(0), Y = R->generator(1);
    CHECK(R->bracket(X, Y) == R->one());
    // {X, XY} = X by Leibniz
    CHECK(R->bracket(X, R->multiply(X, Y)) == X);
}

TEST_CASE("partial derivatives") {
    auto L = make_named("heisenberg", {{"m", 1}}, PrimeModulus(5));
    auto R = PoissonRing::truncated_symmetric(L);
    auto f = R->from_terms({{{2, 1, 0}, 1}, {{0, 0, 3}, 2}}); // x^2 y + 2 z^3
    CHECK(R->partial(f, 0) == R->from_terms({{{1, 1, 0}, 2}}));
    CHECK(R->partial(f, 1) == R->from_terms({{{2, 0, 0}, 1}}));
    CHECK(R->partial(f, 2) == R->from_terms({{{0, 0, 2}, 6}}));
    CHECK(R->partial(R->one(), 0).is_zero());
}

TEST_CASE("render format") {
    auto L = make_named("heisenberg", {{"m", 1}}, PrimeModulus(5));
    auto R = PoissonRing::truncated_symmetric(L);
    CHECK(R->render(R->zero()) == "0");
    CHECK(R->render(R->one()) == "1");
    CHECK(R->render(R->from_terms({{{1, 0, 2}, 2}, {{0, 1, 0}, 1}})) == "2*x^1*z^2 + y^1");
    CHECK(R->render_monomial(0) == "1");
}

TEST_CASE("shape validation") {
    auto L = make_named("heisenberg", {{"m", 1}}, PrimeModulus(5));
    PoissonRing::RawTable table = {{0, 1, {{Monomial{0, 0, 1}, 1}}}};
    // no finite cap at all
    CHECK_THROWS_AS(PoissonRing::make(PrimeModulus(5), {"x", "y", "z"}, {}, table),
                    ShapeViolation);
    // exponent cap must equal p
    CHECK_THROWS_AS(PoissonRing::make(PrimeModulus(5), {"x", "y", "z"},
                                      {.exponent_cap = 3}, table),
                    ShapeViolation);
    // degree cap over a non-linear table: the cut-off is not a Poisson ideal
    PoissonRing::RawTable quad = {{0, 1, {{Monomial{0, 0, 2}, 1}}}};
    CHECK_THROWS_AS(PoissonRing::make(PrimeModulus(5), {"x", "y", "z"},
                                      {.degree_cap = 4}, quad),
                    ShapeViolation);
    // constant entries are fine for pure exponent truncation
    CHECK_NOTHROW(PoissonRing::truncated_hamiltonian(2, PrimeModulus(3)));
}

TEST_CASE("dimension budget") {
    auto L = make_named("filiform", {{"n", 4}}, PrimeModulus(7));
    CHECK_THROWS_AS(PoissonRing::truncated_symmetric(L, 100), DimensionBudgetExceeded);
    CHECK_NOTHROW(PoissonRing::truncated_symmetric(L, 2401));
}

TEST_CASE("heights and the filtration space") {
    auto L = make_named("heisenberg", {{"m", 1}}, PrimeModulus(3));
    auto R = PoissonRing::truncated_symmetric(L);
    REQUIRE(R->has_heights());
    CHECK(R->heights() == std::vector<std::uint32_t>{0, 0, 1});
    CHECK(R->height_filtration_space(0).dim() == 27);
    // E_1 = z * R: monomials with a positive z exponent
    CHECK(R->height_filtration_space(1).dim() == 18);
    CHECK(R->height_filtration_space(2).dim() == 9);
    CHECK(R->height_filtration_space(3).dim() == 0);
    // no heights without a nilpotent origin
    auto S = PoissonRing::truncated_symmetric(make_named("solvable2", {}, PrimeModulus(3)));
    CHECK_FALSE(S->has_heights());
    CHECK_THROWS_AS(S->heights(), ShapeViolation);
}

TEST_CASE("embed and coordinates round-trip") {
    auto L = make_named("heisenberg", {{"m", 1}}, PrimeModulus(5));
    auto R = PoissonRing::truncated_symmetric(L);
    auto e = R->embed(Vec{1, 2, 0});
    CHECK(e == R->add(R->generator(0), R->scalar_mul(2, R->generator(1))));
    std::mt19937_64 rng(8);
    auto f = rand_elem(rng, *R);
    CHECK(R->from_vec(R->to_vec(f)) == f);
}

TEST_CASE("mono_mul respects truncation") {
    auto L = make_named("heisenberg", {{"m", 1}}, PrimeModulus(3));
    auto R = PoissonRing::truncated_symmetric(L);
    auto xi = *R->mono_index(Monomial{1, 0, 0});
    auto x2i = *R->mono_index(Monomial{2, 0, 0});
    CHECK(R->mono_mul(xi, xi) == static_cast<std::int64_t>(x2i));
    CHECK(R->mono_mul(xi, x2i) == -1); // x^3 = 0
    CHECK_FALSE(R->mono_index(Monomial{3, 0, 0}).has_value());
}

TEST_CASE("ring mismatch is rejected") {
    auto L = make_named("heisenberg", {{"m", 1}}, PrimeModulus(5));
    auto R1 = PoissonRing::truncated_symmetric(L);
    auto R2 = PoissonRing::truncated_symmetric(L);
    CHECK_THROWS_AS(R1->add(R1->one(), R2->one()), RingMismatch);
    CHECK_THROWS_AS(R1->bracket(R1->one(), R2->generator(0)), RingMismatch);
}

TEST_CASE("property: antisymmetry, Jacobi, Leibniz on random elements") {
    std::mt19937_64 rng(20240901);
    std::vector<Ring> corpus;
    corpus.push_back(PoissonRing::truncated_symmetric(
        make_named("heisenberg", {{"m", 1}}, PrimeModulus(3))));
    corpus.push_back(PoissonRing::truncated_symmetric(
        make_named("heisenberg", {{"m", 1}}, PrimeModulus(5))));
    corpus.push_back(PoissonRing::truncated_symmetric(
        make_named("filiform", {{"n", 4}}, PrimeModulus(2))));
    corpus.push_back(PoissonRing::truncated_hamiltonian(1, PrimeModulus(3)));
    corpus.push_back(PoissonRing::degree_truncated_symmetric(
        make_named("heisenberg", {{"m", 1}}, PrimeModulus(5)), 4));
    corpus.push_back(PoissonRing::truncated_symmetric(
        make_named("solvable2", {}, PrimeModulus(7))));
    int cases = 0;
    while (cases < 510) {
        const auto& R = *corpus[cases % corpus.size()];
        auto f = rand_elem(rng, R), g = rand_elem(rng, R), h = rand_elem(rng, R);
        CHECK(R.bracket(f, f).is_zero());
        CHECK(R.add(R.bracket(f, g), R.bracket(g, f)).is_zero());
        // Jacobi
        auto j = R.add(R.bracket(R.bracket(f, g), h),
                       R.add(R.bracket(R.bracket(g, h), f),
                             R.bracket(R.bracket(h, f), g)));
        CHECK(j.is_zero());
        // Leibniz: {fg, h} = f{g,h} + g{f,h}
        auto lhs = R.bracket(R.multiply(f, g), h);
        auto rhs = R.add(R.multiply(f, R.bracket(g, h)), R.multiply(g, R.bracket(f, h)));
        CHECK(lhs == rhs);
        // associativity and commutativity of the product
        CHECK(R.multiply(f, g) == R.multiply(g, f));
        CHECK(R.multiply(R.multiply(f, g), h) == R.multiply(f, R.multiply(g, h)));
        ++cases;
    }
}

TEST_CASE("monomial_bracket agrees with the general bracket") {
    std::mt19937_64 rng(606);
    auto R = PoissonRing::truncated_symmetric(
        make_named("heisenberg", {{"m", 1}}, PrimeModulus(5)));
    std::uniform_int_distribution<std::uint32_t> d(0, static_cast<std::uint32_t>(R->dim() - 1));
    for (int t = 0; t < 300; ++t) {
        std::uint32_t a = d(rng), b = d(rng);
        CHECK(R->monomial_bracket(a, b) ==
              R->bracket(R->monomial_element(a, 1), R->monomial_element(b, 1)));
    }
}
