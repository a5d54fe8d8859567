#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "psalg/field.hpp"
#include "psalg/subspace.hpp"

namespace psalg {

struct JacobiViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct UnknownFamily : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct EnumerationTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dimension profile of a descending series together with the class/length
/// verdict. dims[i] is the i-th term's dimension; the series either reaches 0
/// (terminated, class_or_length = index of the first zero) or repeats a
/// nonzero dimension (the repeated entry is kept as the final element).
struct SeriesReport {
    std::string kind;
    std::vector<std::size_t> dims;
    bool terminated = false;
    int class_or_length = -1;
    std::size_t stable_dim = 0;
};

SeriesReport make_series_report(std::string kind, std::vector<std::size_t> dims);

struct BracketEntry {
    int i = 0, j = 0;                                  // i < j
    std::vector<std::pair<int, std::int64_t>> value;   // [e_i,e_j] = sum c*e_k
};

/// Finite-dimensional Lie algebra over F_p given by structure constants for
/// basis pairs i < j; antisymmetry is by construction, the Jacobi identity is
/// checked on every basis triple at build time.
class LieAlgebra {
public:
    static LieAlgebra build(PrimeModulus p, std::size_t dim,
                            std::vector<std::string> labels,
                            const std::vector<BracketEntry>& brackets);

    const PrimeModulus& modulus() const { return mod_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// [e_i, e_j] as a coordinate vector, any i, j.
    Vec basis_bracket(std::size_t i, std::size_t j) const;
    /// Bilinear extension of the structure constants.
    Vec bracket(const Vec& u, const Vec& v) const;

    /// Sparse entries for i < j; used to build Poisson bracket tables.
    const std::vector<std::pair<int, std::uint32_t>>& entry(std::size_t i, std::size_t j) const;

    /// gamma_1 = L, gamma_{n+1} = [gamma_n, L], until 0 or stabilization.
    std::vector<Subspace> lower_central_chain() const;
    SeriesReport lower_central_series() const;

    /// delta_0 = L, delta_{n+1} = [delta_n, delta_n].
    std::vector<Subspace> derived_chain() const;
    SeriesReport derived_series() const;

    /// dim span{[e_i, x] : i}.
    std::size_t width(const Vec& x) const;

    /// |{x : width(x) <= n}| by exhaustive enumeration of p^dim vectors.
    std::uint64_t delta_n_census(std::size_t n, std::uint64_t cap = 1000000) const;

private:
    LieAlgebra(PrimeModulus p, std::size_t dim, std::vector<std::string> labels)
        : mod_(p), dim_(dim), labels_(std::move(labels)) {}
    void check_jacobi() const;

    PrimeModulus mod_;
    std::size_t dim_;
    std::vector<std::string> labels_;
    // table_[i*dim+j] for i<j, sparse coordinates of [e_i,e_j]
    std::vector<std::vector<std::pair<int, std::uint32_t>>> table_;
};

/// Corpus of named example algebras: abelian(n), heisenberg(m), filiform(n),
/// solvable2, char2_family_A(k), char2_family_B(k).
LieAlgebra make_named(const std::string& family,
                      const std::map<std::string, long>& params, PrimeModulus p);

} // namespace psalg
