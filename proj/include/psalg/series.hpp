#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psalg/liealg.hpp"
#include "psalg/poisson.hpp"
#include "psalg/subspace.hpp"

namespace psalg {

struct NotNilpotent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A descending series together with its dimension report. spaces[i] is the
/// i-th term; for gamma the indexing starts at gamma_1, for the other three
/// at index 0 (R^(0), delta_0, delta~_0).
struct SeriesChain {
    std::vector<Subspace> spaces;
    SeriesReport report;
};

/// gamma_1 = R, gamma_{n+1} = {gamma_n, R}.
SeriesChain gamma_series_chain(const PoissonRing& R);
/// R^(0) = R, R^(n) = {R^(n-1), R} . R.
SeriesChain upper_lie_powers_chain(const PoissonRing& R);
/// delta_0 = R, delta_{n+1} = {delta_n, delta_n}.
SeriesChain derived_series_chain(const PoissonRing& R);
/// delta~_0 = R, delta~_{n+1} = {delta~_n, delta~_n} . R.
SeriesChain upper_derived_series_chain(const PoissonRing& R);

inline SeriesReport gamma_series(const PoissonRing& R) { return gamma_series_chain(R).report; }
inline SeriesReport upper_lie_powers(const PoissonRing& R) { return upper_lie_powers_chain(R).report; }
inline SeriesReport derived_series(const PoissonRing& R) { return derived_series_chain(R).report; }
inline SeriesReport upper_derived_series(const PoissonRing& R) { return upper_derived_series_chain(R).report; }

/// strong_class = 1 + (p-1) sum_{n>=1} n dim(gamma_{n+1}(L)/gamma_{n+2}(L));
/// lower_bound = 2 + (p-1) sum_{n>=2} (n-1) dim(gamma_{n+1}(L)/gamma_{n+2}(L)),
/// defined only for non-abelian L.
struct ClassBounds {
    std::size_t strong_class = 0;
    std::optional<std::size_t> lower_bound;
};

ClassBounds predicted_class_bounds(const LieAlgebra& L);

/// L cap R^(n) inside a ring with Lie origin, with an equality flag against
/// the embedded gamma_{n+1}(L).
struct DimSubalgebra {
    std::size_t n = 0;
    Subspace space;
    bool equals_gamma = false;
};

std::vector<DimSubalgebra> dimension_subalgebras(const PoissonRing& R, std::size_t cap);

struct UpperPowerCheck {
    std::size_t n = 0;
    std::size_t power_dim = 0;
    std::size_t filtration_dim = 0;
    bool equal = false;
};

struct UpperPowerReport {
    bool all_equal = true;
    std::vector<UpperPowerCheck> checks;
};

/// R^(n) == E_n for all n <= nmax; requires the height filtration.
UpperPowerReport verify_upper_power_structure(const PoissonRing& R, std::size_t nmax);

struct ProductInclusionCheck {
    std::size_t n = 0, m = 0;
    std::size_t target = 0;     // gamma index of the right-hand side
    std::string hypothesis;     // "trivial" | "p>3, odd index" | "any p"
    bool holds = false;
};

struct CommutatorProductReport {
    bool all_hold = true;
    std::vector<ProductInclusionCheck> checks;
    // {x_1,...,x_n}^m in gamma_{(n-1)m+1}(R).R on left-normed generator
    // commutators up to length 4 and powers up to p-1; run only for p > 3.
    std::size_t claim2_checked = 0;
    bool claim2_holds = true;
};

CommutatorProductReport verify_commutator_products(const PoissonRing& R, std::size_t nmax);

struct FiltrationReport {
    bool all_hold = true;
    std::size_t pairs_checked = 0;
};

/// R^(i).R^(j) and {R^(i),R^(j)} lie in R^(i+j) on all computed indices.
FiltrationReport verify_filtration_law(const PoissonRing& R);

} // namespace psalg
