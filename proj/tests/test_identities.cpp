#include "doctest.h"
#include "psalg/identities.hpp"
#include "psalg/series.hpp"

#include <random>

using namespace psalg;

namespace {

Ring s_of(const char* family, std::map<std::string, long> params, std::uint32_t p) {
    return PoissonRing::truncated_symmetric(make_named(family, params, PrimeModulus(p)));
}

PoissonElement rand_elem(std::mt19937_64& rng, const PoissonRing& R) {
    std::uniform_int_distribution<std::uint32_t> d(0, R.p() - 1);
    Vec v(R.dim());
    for (auto& x : v) x = d(rng);
    return R.from_vec(v);
}

} // namespace

TEST_CASE("standard polynomial term counts are double factorials") {
    CHECK(standard_polynomial(1).terms.size() == 1);
    CHECK(standard_polynomial(2).terms.size() == 3);
    CHECK(standard_polynomial(3).terms.size() == 15);
    CHECK(standard_polynomial(4).terms.size() == 105);
    CHECK(standard_polynomial(2).arity == 4);
    CHECK_THROWS_AS(standard_polynomial(0), BadParams);
    CHECK_THROWS_AS(standard_polynomial(5), BadParams);
}

TEST_CASE("series polynomial arities") {
    CHECK(series_polynomial(SeriesKind::nilpotence, 1).arity == 2);
    CHECK(series_polynomial(SeriesKind::nilpotence, 3).arity == 4);
    CHECK(series_polynomial(SeriesKind::strong_nilpotence, 2).arity == 4);
    CHECK(series_polynomial(SeriesKind::solvability, 3).arity == 8);
    CHECK(series_polynomial(SeriesKind::strong_solvability, 2).arity == 7);
    for (auto k : {SeriesKind::nilpotence, SeriesKind::strong_nilpotence,
                   SeriesKind::solvability, SeriesKind::strong_solvability})
        CHECK(series_polynomial(k, 2).terms.size() == 1);
}

TEST_CASE("catalog lookup") {
    CHECK(catalog_lookup("st4")->terms.size() == 3);
    CHECK(catalog_lookup("nilp2")->arity == 3);
    CHECK(catalog_lookup("snilp2")->arity == 4);
    CHECK(catalog_lookup("solv2")->arity == 4);
    CHECK(catalog_lookup("ssolv2")->arity == 7);
    CHECK_FALSE(catalog_lookup("st3").has_value());
    CHECK_FALSE(catalog_lookup("bogus").has_value());
}

TEST_CASE("St_2 on h_2 over F_2 evaluates to 1 on the generators") {
    auto R = PoissonRing::truncated_hamiltonian(1, PrimeModulus(2));
    auto st2 = standard_polynomial(1);
    auto v = evaluate(*R, st2, {R->generator(0), R->generator(1)});
    CHECK(v == R->one());
    // hence St_2 is not an identity of h_2
    auto verdict = satisfies_multilinear(*R, st2);
    CHECK_FALSE(verdict.satisfied);
    REQUIRE(verdict.counterexample.has_value());
    CHECK(verdict.counterexample->size() == 2);
    CHECK_THROWS_AS(evaluate(*R, st2, {R->one()}), ArityMismatch);
}

TEST_CASE("property: St_4 is multilinear and alternating") {
    auto R = s_of("heisenberg", {{"m", 1}}, 3);
    auto st4 = standard_polynomial(2);
    std::mt19937_64 rng(20240901);
    int cases = 0;
    while (cases < 500) {
        std::vector<PoissonElement> a;
        for (int i = 0; i < 4; ++i) a.push_back(rand_elem(rng, *R));
        // linearity in a random slot
        std::size_t slot = cases % 4;
        auto b = a;
        b[slot] = rand_elem(rng, *R);
        auto c = a;
        c[slot] = R->add(a[slot], b[slot]);
        CHECK(evaluate(*R, st4, c) ==
              R->add(evaluate(*R, st4, a), evaluate(*R, st4, b)));
        auto scaled = a;
        scaled[slot] = R->scalar_mul(2, a[slot]);
        CHECK(evaluate(*R, st4, scaled) == R->scalar_mul(2, evaluate(*R, st4, a)));
        // alternation: repeating a slot kills the value
        auto rep = a;
        rep[(slot + 1) % 4] = rep[slot];
        CHECK(evaluate(*R, st4, rep).is_zero());
        // antisymmetry under a transposition
        auto swp = a;
        std::swap(swp[slot], swp[(slot + 1) % 4]);
        CHECK(evaluate(*R, st4, swp) == R->scalar_mul(-1, evaluate(*R, st4, a)));
        ++cases;
    }
}

TEST_CASE("exhaustive check: St_4 holds in s(h3) over F_3") {
    auto R = s_of("heisenberg", {{"m", 1}}, 3);
    auto verdict = satisfies_multilinear(*R, standard_polynomial(2));
    CHECK(verdict.satisfied);
    CHECK_FALSE(verdict.sampled);
    CHECK(verdict.cases == 27ull * 27 * 27 * 27);
}

TEST_CASE("value-set fallback agrees with the exhaustive check") {
    auto R = s_of("heisenberg", {{"m", 1}}, 3); // dim 27
    for (const char* name : {"nilp2", "nilp3", "solv2", "snilp2", "ssolv1"}) {
        auto poly = *catalog_lookup(name);
        auto exhaustive = satisfies_multilinear(*R, poly);
        // budget below dim^arity forces the value-set path
        auto fallback = satisfies_multilinear(*R, poly, 19682);
        CHECK(exhaustive.satisfied == fallback.satisfied);
        if (!fallback.satisfied) {
            REQUIRE(fallback.counterexample.has_value());
            std::vector<PoissonElement> assign;
            for (auto idx : *fallback.counterexample)
                assign.push_back(R->monomial_element(idx, 1));
            CHECK_FALSE(evaluate(*R, poly, assign).is_zero());
        }
    }
}

TEST_CASE("multi-term polynomials over budget are rejected") {
    auto R = s_of("heisenberg", {{"m", 1}}, 3);
    CHECK_THROWS_AS(satisfies_multilinear(*R, standard_polynomial(2), 10), BudgetExceeded);
}

TEST_CASE("sampled verdicts are deterministic per seed") {
    auto R = s_of("heisenberg", {{"m", 2}}, 3);
    auto poly = *catalog_lookup("st4");
    auto a = sample_multilinear(*R, poly, 200, 42);
    auto b = sample_multilinear(*R, poly, 200, 42);
    CHECK(a.sampled);
    CHECK(a.cases == 200);
    CHECK(a.satisfied == b.satisfied);
    CHECK(a.counterexample == b.counterexample);
}

TEST_CASE("identity verdicts agree with the computed series") {
    // delta_s = 0 iff solv_s is an identity; same for the gamma series
    for (auto R : {s_of("heisenberg", {{"m", 1}}, 2), s_of("solvable2", {}, 2),
                   PoissonRing::truncated_hamiltonian(1, PrimeModulus(2))}) {
        auto d = derived_series_chain(*R);
        auto g = gamma_series_chain(*R);
        for (std::size_t s = 1; s <= 3; ++s) {
            bool delta_zero = s < d.spaces.size() ? d.spaces[s].dim() == 0
                                                  : d.spaces.back().dim() == 0;
            auto verdict = satisfies_multilinear(*R, series_polynomial(SeriesKind::solvability, s));
            CHECK(verdict.satisfied == delta_zero);
            bool gamma_zero = (s < g.spaces.size() ? g.spaces[s] : g.spaces.back()).dim() == 0;
            auto nv = satisfies_multilinear(*R, series_polynomial(SeriesKind::nilpotence, s));
            CHECK(nv.satisfied == gamma_zero);
        }
    }
}

TEST_CASE("Frobenius property {f,g}^p = 0") {
    for (std::uint32_t p : {2u, 3u}) {
        auto R = s_of("heisenberg", {{"m", 1}}, p);
        auto rep = frobenius_power_test(*R, 300, 20240901);
        CHECK(rep.all_zero);
        CHECK(rep.trials == 300);
        CHECK(rep.violation.empty());
    }
    // bracket with constants: checked on the augmentation part
    auto H = PoissonRing::truncated_hamiltonian(1, PrimeModulus(2));
    CHECK(frobenius_power_test(*H, 100, 7).all_zero);
}
