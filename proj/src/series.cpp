#include "psalg/series.hpp"

#include <algorithm>
#include <functional>

namespace psalg {

namespace {

// Monotone descending chain: stop at 0 or at the first repeated dimension
// (equal dimension plus containment is a fixpoint).
SeriesChain run_chain(std::string kind, Subspace first,
                      const std::function<Subspace(const Subspace&)>& step) {
    SeriesChain out;
    out.spaces.push_back(std::move(first));
    while (out.spaces.back().dim() != 0) {
        Subspace next = step(out.spaces.back());
        bool stable = next.dim() == out.spaces.back().dim();
        out.spaces.push_back(std::move(next));
        if (stable) break;
    }
    std::vector<std::size_t> dims;
    for (const auto& s : out.spaces) dims.push_back(s.dim());
    out.report = make_series_report(std::move(kind), std::move(dims));
    return out;
}

// Valid for both terminated chains (last term 0) and stabilized ones (the
// last term is a fixpoint of the step).
const Subspace& chain_at(const std::vector<Subspace>& spaces, std::size_t i) {
    return spaces[std::min(i, spaces.size() - 1)];
}

Subspace derived_step(const PoissonRing& R, const Subspace& A) {
    // {A, A}; when A is the full ring {A, A} = {A, R}, which is cheaper
    if (A.dim() == R.dim()) return R.bracket_span_full(A);
    return R.bracket_span(A, A);
}

} // namespace

SeriesChain gamma_series_chain(const PoissonRing& R) {
    return run_chain("gamma", Subspace::full(R.p(), R.dim()),
                     [&](const Subspace& g) { return R.bracket_span_full(g); });
}

SeriesChain upper_lie_powers_chain(const PoissonRing& R) {
    return run_chain("upper_lie", Subspace::full(R.p(), R.dim()), [&](const Subspace& a) {
        return R.product_span_full(R.bracket_span_full(a));
    });
}

SeriesChain derived_series_chain(const PoissonRing& R) {
    return run_chain("derived", Subspace::full(R.p(), R.dim()),
                     [&](const Subspace& d) { return derived_step(R, d); });
}

SeriesChain upper_derived_series_chain(const PoissonRing& R) {
    return run_chain("upper_derived", Subspace::full(R.p(), R.dim()), [&](const Subspace& d) {
        return R.product_span_full(derived_step(R, d));
    });
}

ClassBounds predicted_class_bounds(const LieAlgebra& L) {
    auto chain = L.lower_central_chain();
    if (chain.back().dim() != 0)
        throw NotNilpotent("class formulas require a nilpotent Lie algebra");
    auto dim_gamma = [&](std::size_t k) -> std::size_t { // gamma_k(L), k >= 1
        return k - 1 < chain.size() ? chain[k - 1].dim() : 0;
    };
    const std::size_t p = L.modulus().value();
    ClassBounds out;
    out.strong_class = 1;
    for (std::size_t n = 1; n + 1 <= chain.size(); ++n)
        out.strong_class += (p - 1) * n * (dim_gamma(n + 1) - dim_gamma(n + 2));
    if (dim_gamma(2) != 0) {
        std::size_t lb = 2;
        for (std::size_t n = 2; n + 1 <= chain.size(); ++n)
            lb += (p - 1) * (n - 1) * (dim_gamma(n + 1) - dim_gamma(n + 2));
        out.lower_bound = lb;
    }
    return out;
}

std::vector<DimSubalgebra> dimension_subalgebras(const PoissonRing& R, std::size_t cap) {
    if (!R.origin()) throw RingMismatch("dimension subalgebras need a Lie origin");
    const LieAlgebra& L = *R.origin();
    Subspace embedded(R.p(), R.dim());
    for (std::size_t i = 0; i < R.num_generators(); ++i)
        embedded.insert(R.to_vec(R.generator(i)));
    auto powers = upper_lie_powers_chain(R).spaces;
    auto lie_chain = L.lower_central_chain();
    std::vector<DimSubalgebra> out;
    for (std::size_t n = 0; n <= cap; ++n) {
        DimSubalgebra entry{n, embedded.intersect(chain_at(powers, n)), false};
        Subspace gamma_emb(R.p(), R.dim());
        for (const Vec& row : chain_at(lie_chain, n).rows())
            gamma_emb.insert(R.to_vec(R.embed(row)));
        entry.equals_gamma = entry.space == gamma_emb;
        out.push_back(std::move(entry));
    }
    return out;
}

UpperPowerReport verify_upper_power_structure(const PoissonRing& R, std::size_t nmax) {
    R.heights(); // throws without the filtration
    auto powers = upper_lie_powers_chain(R).spaces;
    UpperPowerReport rep;
    for (std::size_t n = 0; n <= nmax; ++n) {
        const Subspace& rn = chain_at(powers, n);
        Subspace en = R.height_filtration_space(static_cast<std::uint32_t>(n));
        UpperPowerCheck c{n, rn.dim(), en.dim(), rn == en};
        rep.all_equal = rep.all_equal && c.equal;
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

CommutatorProductReport verify_commutator_products(const PoissonRing& R, std::size_t nmax) {
    auto gammas = gamma_series_chain(R).spaces; // gamma_1 at index 0
    auto gamma_at = [&](std::size_t t) -> const Subspace& { // t >= 1
        return chain_at(gammas, t - 1);
    };
    std::vector<std::optional<Subspace>> gammaR(nmax + 2 * 4 * (R.p() > 3 ? R.p() : 1) + 2);
    auto gamma_r = [&](std::size_t t) -> const Subspace& { // gamma_t(R).R
        if (t >= gammaR.size()) gammaR.resize(t + 1);
        if (!gammaR[t]) gammaR[t] = R.product_span_full(gamma_at(t));
        return *gammaR[t];
    };
    CommutatorProductReport rep;
    for (std::size_t n = 1; n <= nmax; ++n)
        for (std::size_t m = n; n + m <= nmax; ++m) {
            if (n == 1) {
                // gamma_1 = R, so R.gamma_m subseteq gamma_m.R by definition
                rep.checks.push_back({n, m, m, "trivial", true});
                continue;
            }
            Subspace prod = R.product_span(gamma_at(n), gamma_at(m));
            ProductInclusionCheck weak{n, m, n + m - 2, "any p",
                                       prod.subset_of(gamma_r(n + m - 2))};
            rep.all_hold = rep.all_hold && weak.holds;
            rep.checks.push_back(std::move(weak));
            if (R.p() > 3 && (n % 2 == 1 || m % 2 == 1)) {
                ProductInclusionCheck strong{n, m, n + m - 1, "p>3, odd index",
                                             prod.subset_of(gamma_r(n + m - 1))};
                rep.all_hold = rep.all_hold && strong.holds;
                rep.checks.push_back(std::move(strong));
            }
        }
    if (R.p() > 3) {
        const std::size_t k = R.num_generators();
        std::vector<PoissonElement> gens;
        for (std::size_t i = 0; i < k; ++i) gens.push_back(R.generator(i));
        // left-normed {x_{i_1},...,x_{i_len}} over all index tuples
        std::function<void(PoissonElement, std::size_t)> walk =
            [&](PoissonElement c, std::size_t len) {
                if (len >= 2 && !c.is_zero()) {
                    for (std::uint32_t mp = 1; mp <= R.p() - 1; ++mp) {
                        PoissonElement e = R.power(c, mp);
                        std::size_t t = (len - 1) * mp + 1;
                        bool ok = e.is_zero() || gamma_r(t).contains(R.to_vec(e));
                        ++rep.claim2_checked;
                        rep.claim2_holds = rep.claim2_holds && ok;
                        rep.all_hold = rep.all_hold && ok;
                    }
                }
                if (len == 4) return;
                for (std::size_t i = 0; i < k; ++i)
                    walk(R.bracket(c, gens[i]), len + 1);
            };
        for (std::size_t i = 0; i < k; ++i) walk(gens[i], 1);
    }
    return rep;
}

FiltrationReport verify_filtration_law(const PoissonRing& R) {
    auto powers = upper_lie_powers_chain(R).spaces;
    const std::size_t last = powers.size() - 1;
    FiltrationReport rep;
    for (std::size_t i = 0; i <= last; ++i)
        for (std::size_t j = i; i + j <= last; ++j) {
            const Subspace& target = powers[i + j];
            bool ok = R.product_span(powers[i], powers[j]).subset_of(target) &&
                      R.bracket_span(powers[i], powers[j]).subset_of(target);
            rep.all_hold = rep.all_hold && ok;
            ++rep.pairs_checked;
        }
    return rep;
}

} // namespace psalg
