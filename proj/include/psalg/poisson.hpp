#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "psalg/field.hpp"
#include "psalg/liealg.hpp"
#include "psalg/subspace.hpp"

namespace psalg {

struct DimensionBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ShapeViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct RingMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Per-variable and/or total-degree truncation. At least one cap must be
/// finite; a finite exponent cap must equal the field characteristic, and a
/// finite degree cap requires a bracket table that is homogeneous linear in
/// the generators (otherwise the cut-off span is not a Poisson ideal).
struct TruncationShape {
    std::optional<std::uint32_t> exponent_cap;
    std::optional<std::uint32_t> degree_cap;
};

using Monomial = std::vector<std::uint16_t>;

inline std::uint32_t monomial_degree(const Monomial& m) {
    std::uint32_t d = 0;
    for (auto e : m) d += e;
    return d;
}

class PoissonRing;
using Ring = std::shared_ptr<const PoissonRing>;

/// Sparse element of a PoissonRing: sorted (basis index, nonzero coeff) terms.
class PoissonElement {
public:
    PoissonElement() : ring_(nullptr) {}
    explicit PoissonElement(const PoissonRing* ring) : ring_(ring) {}

    const PoissonRing* ring() const { return ring_; }
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::uint32_t coeff(std::uint32_t idx) const;

    bool operator==(const PoissonElement& o) const {
        return ring_ == o.ring_ && terms_ == o.terms_;
    }

private:
    friend class PoissonRing;
    const PoissonRing* ring_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> terms_;
};

/// Finite-dimensional truncated Poisson algebra on a monomial basis in
/// degree-lexicographic order, with the bracket given on generator pairs and
/// extended by the Leibniz rule. Immutable after construction.
class PoissonRing {
public:
    /// Raw bracket-table entry for generator pair i < j: {x_i, x_j} as a sum
    /// of (monomial, integer coefficient) terms.
    using RawTable = std::vector<std::tuple<int, int, std::vector<std::pair<Monomial, std::int64_t>>>>;

    static constexpr std::size_t kDefaultBudget = 5000;

    static Ring make(PrimeModulus p, std::vector<std::string> generators,
                     TruncationShape shape, const RawTable& table,
                     std::optional<LieAlgebra> origin = std::nullopt,
                     std::size_t budget = kDefaultBudget);

    /// s(L) = S(L)/(v^p), with heights from the shifted lower central series
    /// of L when L is nilpotent and the basis is adapted to it.
    static Ring truncated_symmetric(const LieAlgebra& L, std::size_t budget = kDefaultBudget);

    /// S(L)/I_{>D}: linear bracket table, total degree capped at D.
    static Ring degree_truncated_symmetric(const LieAlgebra& L, std::uint32_t D,
                                           std::size_t budget = kDefaultBudget);

    /// h_{2m}: generators X_1..X_m,Y_1..Y_m with {X_i,Y_j} = delta_ij.
    static Ring truncated_hamiltonian(std::size_t m, PrimeModulus p,
                                      std::size_t budget = kDefaultBudget);

    const PrimeModulus& modulus() const { return mod_; }
    std::uint32_t p() const { return mod_.value(); }
    std::size_t num_generators() const { return gens_.size(); }
    const std::vector<std::string>& generators() const { return gens_; }
    const TruncationShape& shape() const { return shape_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Monomial>& basis() const { return basis_; }
    const std::optional<LieAlgebra>& origin() const { return origin_; }
    bool has_heights() const { return heights_.has_value(); }
    const std::vector<std::uint32_t>& heights() const;
    const PoissonElement& table_entry(std::size_t i, std::size_t j) const; // i < j
    /// True if some bracket-table entry has a constant term (Hamiltonian-like).
    bool bracket_has_constants() const { return table_constants_; }

    // --- element construction ---
    PoissonElement zero() const { return PoissonElement(this); }
    PoissonElement one() const { return monomial_element(0, 1); }
    PoissonElement generator(std::size_t i) const;
    PoissonElement monomial_element(std::uint32_t idx, std::int64_t coeff) const;
    PoissonElement from_terms(const std::vector<std::pair<Monomial, std::int64_t>>& t) const;
    /// Degree-1 embedding of a coordinate vector of the Lie origin.
    PoissonElement embed(const Vec& v) const;

    // --- arithmetic ---
    PoissonElement add(const PoissonElement& f, const PoissonElement& g) const;
    PoissonElement sub(const PoissonElement& f, const PoissonElement& g) const;
    PoissonElement scalar_mul(std::int64_t c, const PoissonElement& f) const;
    PoissonElement multiply(const PoissonElement& f, const PoissonElement& g) const;
    PoissonElement power(const PoissonElement& f, std::uint32_t e) const;
    PoissonElement bracket(const PoissonElement& f, const PoissonElement& g) const;
    /// Formal partial derivative with respect to generator i.
    PoissonElement partial(const PoissonElement& f, std::size_t i) const;
    /// {e_a, e_b} for basis monomials.
    PoissonElement monomial_bracket(std::uint32_t a, std::uint32_t b) const;

    // --- coordinates ---
    Vec to_vec(const PoissonElement& f) const;
    PoissonElement from_vec(const Vec& v) const;

    /// Index of the product monomial, or -1 if truncated away.
    std::int64_t mono_mul(std::uint32_t a, std::uint32_t b) const;
    std::optional<std::uint32_t> mono_index(const Monomial& m) const;

    // --- filtration ---
    std::uint32_t monomial_height(std::uint32_t idx) const;
    /// E_n: span of basis monomials of weighted height >= n; E_0 = R.
    Subspace height_filtration_space(std::uint32_t n) const;

    // --- span helpers over the coordinate space ---
    /// span{ {a, e_m} : a in A rows, m basis } = {A, R}.
    Subspace bracket_span_full(const Subspace& A) const;
    /// span{ a * e_m } = A . R.
    Subspace product_span_full(const Subspace& A) const;
    /// span{ {a, b} } over echelon row pairs; uses antisymmetry when &A == &B.
    Subspace bracket_span(const Subspace& A, const Subspace& B) const;
    Subspace product_span(const Subspace& A, const Subspace& B) const;

    /// Canonical text rendering, e.g. "2*x^1*z^2 + y^1".
    std::string render(const PoissonElement& f) const;
    std::string render_monomial(std::uint32_t idx) const;

private:
    PoissonRing(PrimeModulus p) : mod_(p) {}
    void enumerate_basis(std::size_t budget);
    void check_jacobi() const;
    void attach_heights();
    void check_ring(const PoissonElement& f) const;

    struct MonHash {
        std::size_t operator()(const Monomial& m) const {
            std::size_t h = 1469598103934665603ull;
            for (auto e : m) h = (h ^ e) * 1099511628211ull;
            return h;
        }
    };

    PrimeModulus mod_;
    std::vector<std::string> gens_;
    TruncationShape shape_;
    std::vector<Monomial> basis_;
    std::unordered_map<Monomial, std::uint32_t, MonHash> index_;
    std::vector<PoissonElement> table_; // flattened i*n+j, i<j
    std::vector<std::pair<std::size_t, std::size_t>> nz_pairs_;
    std::optional<LieAlgebra> origin_;
    std::optional<std::vector<std::uint32_t>> heights_;
    std::vector<std::int32_t> mult_table_; // dim*dim product indices when small
    bool table_constants_ = false;
};

} // namespace psalg
