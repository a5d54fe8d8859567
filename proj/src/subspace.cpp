#include "psalg/subspace.hpp"

#include <algorithm>

namespace psalg {

Subspace::Subspace(std::uint32_t p, std::size_t ambient_dim)
    : p_(p), ambient_(ambient_dim), kernels_(&kern::select(p)) {}

Subspace Subspace::span(std::uint32_t p, std::size_t ambient_dim,
                        const std::vector<Vec>& vectors) {
    Subspace s(p, ambient_dim);
    for (const Vec& v : vectors) s.insert(v);
    return s;
}

Subspace Subspace::full(std::uint32_t p, std::size_t ambient_dim) {
    Subspace s(p, ambient_dim);
    s.rows_.reserve(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        Vec e(ambient_dim, 0);
        e[i] = 1;
        s.rows_.push_back(std::move(e));
        s.pivots_.push_back(i);
    }
    return s;
}

void Subspace::check_vec(const Vec& v) const {
    if (v.size() != ambient_)
        throw AmbientMismatch("vector length does not match ambient dimension");
}

void Subspace::reduce(Vec& v) const {
    check_vec(v);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::size_t col = pivots_[r];
        std::uint32_t c = v[col];
        if (c == 0) continue;
        // v -= c * row
        kernels_->axpy(v.data() + col, rows_[r].data() + col,
                       ambient_ - col, p_ - c, p_);
    }
}

bool Subspace::contains(const Vec& v) const {
    Vec w = v;
    reduce(w);
    return std::all_of(w.begin(), w.end(), [](std::uint32_t x) { return x == 0; });
}

bool Subspace::insert(Vec v) {
    check_vec(v);
    for (std::uint32_t& x : v)
        if (x >= p_) x %= p_;
    reduce(v);
    std::size_t piv = 0;
    while (piv < ambient_ && v[piv] == 0) ++piv;
    if (piv == ambient_) return false;
    if (v[piv] != 1)
        kernels_->scale(v.data() + piv, ambient_ - piv, fp_inv(v[piv], p_), p_);
    // clear the new pivot column in existing rows
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::uint32_t c = rows_[r][piv];
        if (c == 0) continue;
        kernels_->axpy(rows_[r].data() + piv, v.data() + piv,
                       ambient_ - piv, p_ - c, p_);
    }
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_ || p_ != other.p_)
        throw AmbientMismatch("sum: ambient mismatch");
    Subspace s = *this;
    for (const Vec& v : other.rows_) s.insert(v);
    return s;
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_ || p_ != other.p_)
        throw AmbientMismatch("intersect: ambient mismatch");
    // Zassenhaus: echelonize rows [a|a] for a in A and [b|0] for b in B;
    // rows with zero left block carry an intersection basis in the right block.
    Subspace block(p_, 2 * ambient_);
    for (const Vec& a : rows_) {
        Vec w(2 * ambient_, 0);
        std::copy(a.begin(), a.end(), w.begin());
        std::copy(a.begin(), a.end(), w.begin() + ambient_);
        block.insert(std::move(w));
    }
    for (const Vec& b : other.rows_) {
        Vec w(2 * ambient_, 0);
        std::copy(b.begin(), b.end(), w.begin());
        block.insert(std::move(w));
    }
    Subspace out(p_, ambient_);
    for (const Vec& w : block.rows()) {
        bool left_zero = std::all_of(w.begin(), w.begin() + ambient_,
                                     [](std::uint32_t x) { return x == 0; });
        if (left_zero)
            out.insert(Vec(w.begin() + ambient_, w.end()));
    }
    return out;
}

bool Subspace::subset_of(const Subspace& other) const {
    if (ambient_ != other.ambient_ || p_ != other.p_)
        throw AmbientMismatch("subset_of: ambient mismatch");
    return std::all_of(rows_.begin(), rows_.end(),
                       [&](const Vec& v) { return other.contains(v); });
}

} // namespace psalg
