#include "doctest.h"
#include "psalg/series.hpp"

using namespace psalg;

namespace {

Ring s_of(const char* family, std::map<std::string, long> params, std::uint32_t p) {
    return PoissonRing::truncated_symmetric(make_named(family, params, PrimeModulus(p)));
}

} // namespace

TEST_CASE("series dims of s(h3) over F_3") {
    auto R = s_of("heisenberg", {{"m", 1}}, 3);
    auto g = gamma_series(*R);
    CHECK(g.dims == std::vector<std::size_t>{27, 16, 8, 0});
    CHECK(g.class_or_length == 3);
    auto u = upper_lie_powers(*R);
    // R^(n) = z^n R: dims 27, 18, 9, 0
    CHECK(u.dims == std::vector<std::size_t>{27, 18, 9, 0});
    CHECK(u.class_or_length == 3);
    CHECK(derived_series(*R).dims == std::vector<std::size_t>{27, 16, 0});
    CHECK(upper_derived_series(*R).dims == std::vector<std::size_t>{27, 18, 0});
}

TEST_CASE("h_2 over F_2: solvable, not Lie nilpotent, not strongly solvable") {
    auto R = PoissonRing::truncated_hamiltonian(1, PrimeModulus(2));
    auto g = gamma_series(*R);
    CHECK_FALSE(g.terminated);
    CHECK(g.stable_dim == 3);
    auto d = derived_series(*R);
    CHECK(d.dims == std::vector<std::size_t>{4, 3, 1, 0});
    CHECK(d.class_or_length == 3);
    auto ud = upper_derived_series(*R);
    CHECK_FALSE(ud.terminated);
    CHECK(ud.stable_dim == 4);
}

TEST_CASE("s(solvable2): derived terminates, gamma stabilizes") {
    auto R = s_of("solvable2", {}, 3);
    auto g = gamma_series(*R);
    CHECK_FALSE(g.terminated);
    CHECK(g.stable_dim == 6);
    CHECK(derived_series(*R).dims == std::vector<std::size_t>{9, 6, 3, 0});
    CHECK(upper_derived_series(*R).dims == std::vector<std::size_t>{9, 6, 3, 0});
}

TEST_CASE("chain invariants: gamma_{n+1} inside R^(n), delta_s inside delta~_s") {
    for (auto R : {s_of("heisenberg", {{"m", 1}}, 3), s_of("filiform", {{"n", 4}}, 2),
                   PoissonRing::truncated_hamiltonian(1, PrimeModulus(3))}) {
        auto g = gamma_series_chain(*R);
        auto u = upper_lie_powers_chain(*R);
        for (std::size_t n = 0; n < g.spaces.size() && n < u.spaces.size(); ++n)
            CHECK(g.spaces[n].subset_of(u.spaces[n])); // gamma_{n+1} vs R^(n)
        auto d = derived_series_chain(*R);
        auto ud = upper_derived_series_chain(*R);
        for (std::size_t s = 0; s < d.spaces.size() && s < ud.spaces.size(); ++s)
            CHECK(d.spaces[s].subset_of(ud.spaces[s]));
        // both chains descend
        for (std::size_t n = 1; n < u.spaces.size(); ++n)
            CHECK(u.spaces[n].subset_of(u.spaces[n - 1]));
    }
}

TEST_CASE("predicted class bounds") {
    auto b = predicted_class_bounds(make_named("heisenberg", {{"m", 1}}, PrimeModulus(5)));
    CHECK(b.strong_class == 5);
    CHECK(b.lower_bound == 2);
    b = predicted_class_bounds(make_named("heisenberg", {{"m", 1}}, PrimeModulus(2)));
    CHECK(b.strong_class == 2);
    b = predicted_class_bounds(make_named("filiform", {{"n", 4}}, PrimeModulus(2)));
    CHECK(b.strong_class == 4);
    CHECK(b.lower_bound == 3);
    b = predicted_class_bounds(make_named("filiform", {{"n", 4}}, PrimeModulus(3)));
    CHECK(b.strong_class == 7);
    CHECK(b.lower_bound == 4);
    b = predicted_class_bounds(make_named("filiform", {{"n", 4}}, PrimeModulus(5)));
    CHECK(b.strong_class == 13);
    CHECK(b.lower_bound == 6);
    // abelian: class 1, no lower bound
    b = predicted_class_bounds(make_named("abelian", {{"n", 3}}, PrimeModulus(5)));
    CHECK(b.strong_class == 1);
    CHECK_FALSE(b.lower_bound.has_value());
    CHECK_THROWS_AS(predicted_class_bounds(make_named("solvable2", {}, PrimeModulus(3))),
                    NotNilpotent);
}

TEST_CASE("formula matches the computed strong class") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto L = make_named("heisenberg", {{"m", 1}}, PrimeModulus(p));
        auto R = PoissonRing::truncated_symmetric(L);
        auto u = upper_lie_powers(*R);
        REQUIRE(u.terminated);
        CHECK(static_cast<std::size_t>(u.class_or_length) ==
              predicted_class_bounds(L).strong_class);
    }
}

TEST_CASE("dimension subalgebras L cap R^(n) equal embedded gamma_{n+1}") {
    auto R = s_of("heisenberg", {{"m", 1}}, 3);
    auto subs = dimension_subalgebras(*R, 3);
    REQUIRE(subs.size() == 4); // n = 0..3
    CHECK(subs[0].space.dim() == 3); // L cap R^(0) = L = gamma_1
    CHECK(subs[1].space.dim() == 1); // L cap R^(1) = <z> = gamma_2
    CHECK(subs[2].space.dim() == 0); // z is not in z^2 R
    for (const auto& e : subs) CHECK(e.equals_gamma);
}

TEST_CASE("upper power structure R^(n) == E_n") {
    auto R = s_of("heisenberg", {{"m", 1}}, 3);
    auto rep = verify_upper_power_structure(*R, 3);
    CHECK(rep.all_equal);
    REQUIRE(rep.checks.size() == 4); // n = 0..3
    CHECK(rep.checks[1].power_dim == 18);
    CHECK(rep.checks[1].filtration_dim == 18);
    auto R4 = s_of("filiform", {{"n", 4}}, 3);
    CHECK(verify_upper_power_structure(*R4, 7).all_equal);
}

TEST_CASE("filtration law on corpus rings") {
    for (auto R : {s_of("heisenberg", {{"m", 1}}, 3), s_of("filiform", {{"n", 4}}, 2)}) {
        auto rep = verify_filtration_law(*R);
        CHECK(rep.all_hold);
        CHECK(rep.pairs_checked > 0);
    }
}

TEST_CASE("commutator products on s(h3, 5)") {
    auto R = s_of("heisenberg", {{"m", 1}}, 5);
    auto rep = verify_commutator_products(*R, 4);
    CHECK(rep.all_hold);
    CHECK(rep.claim2_holds);
    CHECK(rep.claim2_checked > 0);
    // p = 2: only the unconditional inclusions are tested
    auto R2 = s_of("heisenberg", {{"m", 1}}, 2);
    auto rep2 = verify_commutator_products(*R2, 4);
    CHECK(rep2.all_hold);
    CHECK(rep2.claim2_checked == 0);
    for (const auto& c : rep2.checks) CHECK(c.hypothesis != "p>3, odd index");
}
