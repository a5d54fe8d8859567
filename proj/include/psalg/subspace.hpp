#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "psalg/field.hpp"
#include "psalg/kernels.hpp"

namespace psalg {

using Vec = std::vector<std::uint32_t>;

struct AmbientMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Linear subspace of F_p^n kept in reduced row echelon form: pivot entries
/// are 1, pivot columns strictly increase, and pivot columns are zero in all
/// other rows. RREF is canonical, so equality is row-wise comparison.
class Subspace {
public:
    Subspace(std::uint32_t p, std::size_t ambient_dim);

    static Subspace span(std::uint32_t p, std::size_t ambient_dim,
                         const std::vector<Vec>& vectors);
    static Subspace full(std::uint32_t p, std::size_t ambient_dim);

    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient() const { return ambient_; }
    std::uint32_t modulus() const { return p_; }
    const std::vector<Vec>& rows() const { return rows_; }

    /// Reduces v against the echelon rows in place.
    void reduce(Vec& v) const;

    bool contains(const Vec& v) const;

    /// Adds v to the span; returns true if the dimension grew.
    bool insert(Vec v);

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    bool subset_of(const Subspace& other) const;
    bool operator==(const Subspace& other) const {
        return p_ == other.p_ && ambient_ == other.ambient_ && rows_ == other.rows_;
    }

private:
    void check_vec(const Vec& v) const;
    std::uint32_t p_;
    std::size_t ambient_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_; // pivot column of each row, increasing
    const kern::Kernels* kernels_;
};

/// Echelon span of {map(a, b)} over all echelon-basis pairs of A and B;
/// valid for bilinear maps.
template <class F>
Subspace bilinear_image_span(const Subspace& a, const Subspace& b, F&& map) {
    if (a.ambient() != b.ambient() || a.modulus() != b.modulus())
        throw AmbientMismatch("bilinear_image_span: ambient mismatch");
    Subspace out(a.modulus(), a.ambient());
    for (const Vec& u : a.rows())
        for (const Vec& v : b.rows())
            out.insert(map(u, v));
    return out;
}

} // namespace psalg
