#include "psalg/poisson.hpp"

#include <algorithm>
#include <map>

namespace psalg {

std::uint32_t PoissonElement::coeff(std::uint32_t idx) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), idx,
                               [](const auto& t, std::uint32_t i) { return t.first < i; });
    return (it != terms_.end() && it->first == idx) ? it->second : 0;
}

namespace {

bool deglex_less(const Monomial& a, const Monomial& b) {
    std::uint32_t da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db;
    return a < b;
}

// Accumulator that collapses to a sorted sparse term list.
struct Acc {
    std::map<std::uint32_t, std::uint32_t> m;
    std::uint32_t p;
    explicit Acc(std::uint32_t p) : p(p) {}
    void add(std::uint32_t idx, std::uint32_t c) {
        if (c == 0) return;
        auto [it, fresh] = m.emplace(idx, c);
        if (!fresh) it->second = fp_add(it->second, c, p);
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> finish() {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
        out.reserve(m.size());
        for (auto& [i, c] : m)
            if (c != 0) out.emplace_back(i, c);
        return out;
    }
};

} // namespace

void PoissonRing::check_ring(const PoissonElement& f) const {
    if (f.ring() != this) throw RingMismatch("element belongs to a different ring");
}

void PoissonRing::enumerate_basis(std::size_t budget) {
    const std::size_t n = gens_.size();
    std::vector<std::uint32_t> maxexp(n);
    std::uint32_t degree_cap = shape_.degree_cap.value_or(0xffffffffu);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t cap = 0xffffffffu;
        if (shape_.exponent_cap) cap = *shape_.exponent_cap - 1;
        if (shape_.degree_cap) cap = std::min(cap, degree_cap);
        if (cap > 0xffffu)
            throw DimensionBudgetExceeded("unbounded or oversized exponent range");
        maxexp[i] = cap;
    }
    Monomial cur(n, 0);
    // odometer enumeration within caps and total degree
    std::uint32_t deg = 0;
    while (true) {
        if (deg <= degree_cap) {
            basis_.push_back(cur);
            if (basis_.size() > budget)
                throw DimensionBudgetExceeded("ring dimension exceeds budget of " +
                                              std::to_string(budget));
        }
        std::size_t i = 0;
        while (i < n) {
            if (cur[i] < maxexp[i] && deg - cur[i] + cur[i] + 1 <= degree_cap + 0ull) {
                ++cur[i];
                ++deg;
                break;
            }
            deg -= cur[i];
            cur[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    std::sort(basis_.begin(), basis_.end(), deglex_less);
    index_.reserve(basis_.size());
    for (std::uint32_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
    // product table for small rings
    const std::size_t N = basis_.size();
    if (N <= 2048) {
        mult_table_.assign(N * N, -1);
        Monomial prod(n);
        for (std::uint32_t a = 0; a < N; ++a)
            for (std::uint32_t b = a; b < N; ++b) {
                bool ok = true;
                std::uint32_t d = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint32_t e = basis_[a][i] + basis_[b][i];
                    if (e > maxexp[i]) { ok = false; break; }
                    prod[i] = static_cast<std::uint16_t>(e);
                    d += e;
                }
                if (ok && d <= degree_cap) {
                    auto it = index_.find(prod);
                    if (it != index_.end())
                        mult_table_[a * N + b] = mult_table_[b * N + a] =
                            static_cast<std::int32_t>(it->second);
                }
            }
    }
}

std::optional<std::uint32_t> PoissonRing::mono_index(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::int64_t PoissonRing::mono_mul(std::uint32_t a, std::uint32_t b) const {
    const std::size_t N = basis_.size();
    if (!mult_table_.empty()) return mult_table_[a * N + b];
    const std::size_t n = gens_.size();
    Monomial prod(n);
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t e = static_cast<std::uint32_t>(basis_[a][i]) + basis_[b][i];
        if (shape_.exponent_cap && e >= *shape_.exponent_cap) return -1;
        prod[i] = static_cast<std::uint16_t>(e);
        d += e;
    }
    if (shape_.degree_cap && d > *shape_.degree_cap) return -1;
    auto it = index_.find(prod);
    return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

Ring PoissonRing::make(PrimeModulus p, std::vector<std::string> generators,
                       TruncationShape shape, const RawTable& table,
                       std::optional<LieAlgebra> origin, std::size_t budget) {
    if (!shape.exponent_cap && !shape.degree_cap)
        throw ShapeViolation("at least one truncation cap must be finite");
    if (shape.exponent_cap && *shape.exponent_cap != p.value())
        throw ShapeViolation("a finite exponent cap must equal the characteristic");
    auto ring = std::shared_ptr<PoissonRing>(new PoissonRing(p));
    ring->gens_ = std::move(generators);
    ring->shape_ = shape;
    ring->origin_ = std::move(origin);
    ring->enumerate_basis(budget);

    const std::size_t n = ring->gens_.size();
    ring->table_.assign(n * n, PoissonElement(ring.get()));
    for (const auto& [i, j, terms] : table) {
        if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= n ||
            static_cast<std::size_t>(j) >= n || i >= j)
            throw IndexOutOfRange("bracket table indices must satisfy 0 <= i < j < n");
        ring->table_[static_cast<std::size_t>(i) * n + j] = ring->from_terms(terms);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const PoissonElement& e = ring->table_[i * n + j];
            if (e.is_zero()) continue;
            ring->nz_pairs_.emplace_back(i, j);
            for (const auto& [idx, c] : e.terms()) {
                std::uint32_t deg = monomial_degree(ring->basis_[idx]);
                if (idx == 0) ring->table_constants_ = true;
                if (ring->shape_.degree_cap && deg != 1)
                    throw ShapeViolation(
                        "degree truncation requires a bracket table homogeneous "
                        "linear in the generators");
            }
        }
    ring->check_jacobi();
    if (ring->origin_) ring->attach_heights();
    return ring;
}

void PoissonRing::check_jacobi() const {
    const std::size_t n = gens_.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                PoissonElement s = add(
                    bracket(bracket(generator(i), generator(j)), generator(k)),
                    add(bracket(bracket(generator(j), generator(k)), generator(i)),
                        bracket(bracket(generator(k), generator(i)), generator(j))));
                if (!s.is_zero())
                    throw JacobiViolation("Poisson Jacobi identity fails on generators (" +
                                          gens_[i] + "," + gens_[j] + "," + gens_[k] + ")");
            }
}

void PoissonRing::attach_heights() {
    auto chain = origin_->lower_central_chain();
    if (chain.back().dim() != 0) return; // heights only for nilpotent origins
    const std::size_t n = gens_.size();
    std::vector<std::uint32_t> h(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        std::uint32_t nu = 0;
        for (std::size_t t = 1; t < chain.size(); ++t)
            if (chain[t].contains(e)) nu = static_cast<std::uint32_t>(t);
        h[i] = nu;
    }
    // basis must be adapted to the shifted filtration
    for (std::size_t t = 0; t < chain.size(); ++t) {
        std::size_t cnt = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (h[i] >= t) ++cnt;
        if (cnt != chain[t].dim()) return;
    }
    heights_ = std::move(h);
}

Ring PoissonRing::truncated_symmetric(const LieAlgebra& L, std::size_t budget) {
    RawTable table;
    const std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& cell = L.entry(i, j);
            if (cell.empty()) continue;
            std::vector<std::pair<Monomial, std::int64_t>> terms;
            for (auto [k, c] : cell) {
                Monomial m(n, 0);
                m[static_cast<std::size_t>(k)] = 1;
                terms.emplace_back(std::move(m), c);
            }
            table.emplace_back(static_cast<int>(i), static_cast<int>(j), std::move(terms));
        }
    TruncationShape shape{L.modulus().value(), std::nullopt};
    return make(L.modulus(), L.labels(), shape, table, L, budget);
}

Ring PoissonRing::degree_truncated_symmetric(const LieAlgebra& L, std::uint32_t D,
                                             std::size_t budget) {
    RawTable table;
    const std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& cell = L.entry(i, j);
            if (cell.empty()) continue;
            std::vector<std::pair<Monomial, std::int64_t>> terms;
            for (auto [k, c] : cell) {
                Monomial m(n, 0);
                m[static_cast<std::size_t>(k)] = 1;
                terms.emplace_back(std::move(m), c);
            }
            table.emplace_back(static_cast<int>(i), static_cast<int>(j), std::move(terms));
        }
    TruncationShape shape{std::nullopt, D};
    return make(L.modulus(), L.labels(), shape, table, L, budget);
}

Ring PoissonRing::truncated_hamiltonian(std::size_t m, PrimeModulus p, std::size_t budget) {
    if (m < 1) throw BadParams("truncated_hamiltonian: m must be >= 1");
    std::vector<std::string> gens;
    for (std::size_t i = 1; i <= m; ++i)
        gens.push_back(m == 1 ? "x" : "x" + std::to_string(i));
    for (std::size_t i = 1; i <= m; ++i)
        gens.push_back(m == 1 ? "y" : "y" + std::to_string(i));
    RawTable table;
    for (std::size_t i = 0; i < m; ++i) {
        Monomial unit(2 * m, 0);
        table.emplace_back(static_cast<int>(i), static_cast<int>(m + i),
                           std::vector<std::pair<Monomial, std::int64_t>>{{unit, 1}});
    }
    TruncationShape shape{p.value(), std::nullopt};
    return make(p, std::move(gens), shape, table, std::nullopt, budget);
}

const std::vector<std::uint32_t>& PoissonRing::heights() const {
    if (!heights_) throw ShapeViolation("ring carries no height filtration");
    return *heights_;
}

const PoissonElement& PoissonRing::table_entry(std::size_t i, std::size_t j) const {
    return table_[i * gens_.size() + j];
}

PoissonElement PoissonRing::generator(std::size_t i) const {
    Monomial m(gens_.size(), 0);
    m[i] = 1;
    auto idx = mono_index(m);
    if (!idx) return zero(); // degree cap 0 corner
    return monomial_element(*idx, 1);
}

PoissonElement PoissonRing::monomial_element(std::uint32_t idx, std::int64_t coeff) const {
    PoissonElement f(this);
    std::uint32_t c = fp_reduce_i64(coeff, p());
    if (c != 0) f.terms_.emplace_back(idx, c);
    return f;
}

PoissonElement PoissonRing::from_terms(
    const std::vector<std::pair<Monomial, std::int64_t>>& t) const {
    Acc acc(p());
    for (const auto& [m, c] : t) {
        auto idx = mono_index(m);
        if (!idx) throw ShapeViolation("monomial outside the truncation shape");
        acc.add(*idx, fp_reduce_i64(c, p()));
    }
    PoissonElement f(this);
    f.terms_ = acc.finish();
    return f;
}

PoissonElement PoissonRing::embed(const Vec& v) const {
    if (v.size() != gens_.size()) throw AmbientMismatch("embed: dimension mismatch");
    Acc acc(p());
    Monomial m(gens_.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] % p() == 0) continue;
        m[i] = 1;
        acc.add(*mono_index(m), v[i] % p());
        m[i] = 0;
    }
    PoissonElement f(this);
    f.terms_ = acc.finish();
    return f;
}

PoissonElement PoissonRing::add(const PoissonElement& f, const PoissonElement& g) const {
    check_ring(f);
    check_ring(g);
    Acc acc(p());
    for (auto& [i, c] : f.terms()) acc.add(i, c);
    for (auto& [i, c] : g.terms()) acc.add(i, c);
    PoissonElement out(this);
    out.terms_ = acc.finish();
    return out;
}

PoissonElement PoissonRing::sub(const PoissonElement& f, const PoissonElement& g) const {
    return add(f, scalar_mul(-1, g));
}

PoissonElement PoissonRing::scalar_mul(std::int64_t c, const PoissonElement& f) const {
    check_ring(f);
    std::uint32_t cv = fp_reduce_i64(c, p());
    PoissonElement out(this);
    if (cv == 0) return out;
    for (auto& [i, fc] : f.terms()) {
        std::uint32_t v = fp_mul(cv, fc, p());
        if (v != 0) out.terms_.emplace_back(i, v);
    }
    return out;
}

PoissonElement PoissonRing::multiply(const PoissonElement& f, const PoissonElement& g) const {
    check_ring(f);
    check_ring(g);
    Acc acc(p());
    for (auto& [a, ca] : f.terms())
        for (auto& [b, cb] : g.terms()) {
            std::int64_t idx = mono_mul(a, b);
            if (idx >= 0) acc.add(static_cast<std::uint32_t>(idx), fp_mul(ca, cb, p()));
        }
    PoissonElement out(this);
    out.terms_ = acc.finish();
    return out;
}

PoissonElement PoissonRing::power(const PoissonElement& f, std::uint32_t e) const {
    PoissonElement out = one();
    for (std::uint32_t i = 0; i < e; ++i) out = multiply(out, f);
    return out;
}

PoissonElement PoissonRing::partial(const PoissonElement& f, std::size_t i) const {
    check_ring(f);
    Acc acc(p());
    Monomial m;
    for (auto& [idx, c] : f.terms()) {
        std::uint16_t e = basis_[idx][i];
        if (e == 0) continue;
        m = basis_[idx];
        --m[i];
        acc.add(*mono_index(m), fp_mul(c, e % p(), p()));
    }
    PoissonElement out(this);
    out.terms_ = acc.finish();
    return out;
}

PoissonElement PoissonRing::bracket(const PoissonElement& f, const PoissonElement& g) const {
    check_ring(f);
    check_ring(g);
    const std::size_t n = gens_.size();
    std::vector<std::optional<PoissonElement>> pf(n), pg(n);
    auto part = [&](std::vector<std::optional<PoissonElement>>& cache,
                    const PoissonElement& h, std::size_t i) -> const PoissonElement& {
        if (!cache[i]) cache[i] = partial(h, i);
        return *cache[i];
    };
    PoissonElement out = zero();
    for (auto [i, j] : nz_pairs_) {
        PoissonElement t = sub(multiply(part(pf, f, i), part(pg, g, j)),
                               multiply(part(pf, f, j), part(pg, g, i)));
        if (t.is_zero()) continue;
        out = add(out, multiply(t, table_[i * n + j]));
    }
    return out;
}

PoissonElement PoissonRing::monomial_bracket(std::uint32_t a, std::uint32_t b) const {
    const std::size_t n = gens_.size();
    const Monomial& ma = basis_[a];
    const Monomial& mb = basis_[b];
    Acc acc(p());
    Monomial prod(n);
    for (auto [i, j] : nz_pairs_) {
        // coefficient a_i b_j - a_j b_i of x^{a+b-e_i-e_j} B[i][j]
        std::uint32_t c = fp_sub(fp_mul(ma[i] % p(), mb[j] % p(), p()),
                                 fp_mul(ma[j] % p(), mb[i] % p(), p()), p());
        if (c == 0) continue;
        bool ok = true;
        std::uint32_t deg = 0;
        for (std::size_t t = 0; t < n; ++t) {
            std::uint32_t e = static_cast<std::uint32_t>(ma[t]) + mb[t];
            if (t == i || t == j) --e; // a_i,b_j nonzero where c != 0
            // i==j impossible (i<j)
            if (shape_.exponent_cap && e >= *shape_.exponent_cap) { ok = false; break; }
            prod[t] = static_cast<std::uint16_t>(e);
            deg += e;
        }
        if (!ok) continue;
        auto base = index_.find(prod);
        if (base == index_.end()) continue;
        for (const auto& [tidx, tc] : table_[i * n + j].terms()) {
            std::int64_t idx = mono_mul(base->second, tidx);
            if (idx >= 0) acc.add(static_cast<std::uint32_t>(idx), fp_mul(c, tc, p()));
        }
    }
    PoissonElement out(this);
    out.terms_ = acc.finish();
    return out;
}

Vec PoissonRing::to_vec(const PoissonElement& f) const {
    check_ring(f);
    Vec v(dim(), 0);
    for (auto& [i, c] : f.terms()) v[i] = c;
    return v;
}

PoissonElement PoissonRing::from_vec(const Vec& v) const {
    if (v.size() != dim()) throw AmbientMismatch("from_vec: length mismatch");
    PoissonElement f(this);
    for (std::uint32_t i = 0; i < v.size(); ++i)
        if (v[i] % p() != 0) f.terms_.emplace_back(i, v[i] % p());
    return f;
}

std::uint32_t PoissonRing::monomial_height(std::uint32_t idx) const {
    const auto& h = heights();
    std::uint32_t nu = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        nu += h[i] * basis_[idx][i];
    return nu;
}

Subspace PoissonRing::height_filtration_space(std::uint32_t n) const {
    heights(); // throws when absent
    Subspace s(p(), dim());
    Vec e(dim(), 0);
    for (std::uint32_t i = 0; i < dim(); ++i) {
        if (monomial_height(i) >= n) {
            e[i] = 1;
            s.insert(e);
            e[i] = 0;
        }
    }
    return s;
}

Subspace PoissonRing::bracket_span_full(const Subspace& A) const {
    if (A.ambient() != dim() || A.modulus() != p())
        throw AmbientMismatch("bracket_span_full: ambient mismatch");
    const std::size_t N = dim();
    const std::uint32_t q = p();
    Subspace out(q, N);
    if (A.dim() == 0) return out;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> cols(N);
    Vec cand(N);
    for (std::uint32_t m = 0; m < N; ++m) {
        bool any = false;
        for (std::uint32_t k = 0; k < N; ++k) {
            cols[k] = monomial_bracket(k, m).terms();
            any = any || !cols[k].empty();
        }
        if (!any) continue;
        for (const Vec& a : A.rows()) {
            std::fill(cand.begin(), cand.end(), 0);
            bool nz = false;
            for (std::uint32_t k = 0; k < N; ++k) {
                if (a[k] == 0) continue;
                for (auto [idx, c] : cols[k]) {
                    cand[idx] = fp_add(cand[idx], fp_mul(a[k], c, q), q);
                    nz = true;
                }
            }
            if (nz) out.insert(cand);
            if (out.dim() == N) return out;
        }
    }
    return out;
}

Subspace PoissonRing::product_span_full(const Subspace& A) const {
    if (A.ambient() != dim() || A.modulus() != p())
        throw AmbientMismatch("product_span_full: ambient mismatch");
    const std::size_t N = dim();
    const std::uint32_t q = p();
    Subspace out(q, N);
    Vec cand(N);
    for (std::uint32_t m = 0; m < N; ++m) {
        for (const Vec& a : A.rows()) {
            std::fill(cand.begin(), cand.end(), 0);
            bool nz = false;
            for (std::uint32_t k = 0; k < N; ++k) {
                if (a[k] == 0) continue;
                std::int64_t idx = mono_mul(k, m);
                if (idx < 0) continue;
                cand[idx] = fp_add(cand[idx], a[k], q);
                nz = true;
            }
            if (nz) out.insert(cand);
            if (out.dim() == N) return out;
        }
    }
    return out;
}

namespace {

using SparseRow = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

std::vector<SparseRow> sparse_rows(const std::vector<Vec>& rows) {
    std::vector<SparseRow> out(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::uint32_t k = 0; k < rows[r].size(); ++k)
            if (rows[r][k] != 0) out[r].emplace_back(k, rows[r][k]);
    return out;
}

} // namespace

Subspace PoissonRing::bracket_span(const Subspace& A, const Subspace& B) const {
    if (A.ambient() != dim() || B.ambient() != dim() || A.modulus() != B.modulus())
        throw AmbientMismatch("bracket_span: ambient mismatch");
    const bool same = &A == &B || A == B;
    const std::size_t N = dim();
    const std::uint32_t q = p();
    Subspace out(q, N);
    auto ra = sparse_rows(A.rows());
    auto rb = same ? std::vector<SparseRow>{} : sparse_rows(B.rows());
    const auto& rhs = same ? ra : rb;
    // cache of {e_k, e_l} term lists for k < l; antisymmetric for k > l
    std::vector<SparseRow> cache;
    const bool cached = N <= 1024;
    if (cached) {
        cache.resize(N * N);
        for (std::uint32_t k = 0; k < N; ++k)
            for (std::uint32_t l = k + 1; l < N; ++l)
                cache[k * N + l] = monomial_bracket(k, l).terms();
    }
    Vec cand(N);
    for (std::size_t r = 0; r < ra.size(); ++r)
        for (std::size_t s = same ? r + 1 : 0; s < rhs.size(); ++s) {
            std::fill(cand.begin(), cand.end(), 0);
            bool nz = false;
            for (auto [ka, ca] : ra[r])
                for (auto [kb, cb] : rhs[s]) {
                    if (ka == kb) continue;
                    std::uint32_t c = fp_mul(ca, cb, q);
                    bool flip = ka > kb;
                    std::uint32_t lo = flip ? kb : ka, hi = flip ? ka : kb;
                    SparseRow tmp;
                    const SparseRow& terms =
                        cached ? cache[lo * N + hi]
                               : (tmp = monomial_bracket(lo, hi).terms());
                    for (auto [idx, tc] : terms) {
                        std::uint32_t v = fp_mul(c, tc, q);
                        cand[idx] = fp_add(cand[idx], flip ? fp_neg(v, q) : v, q);
                        nz = true;
                    }
                }
            if (nz) out.insert(cand);
            if (out.dim() == N) return out;
        }
    return out;
}

Subspace PoissonRing::product_span(const Subspace& A, const Subspace& B) const {
    if (A.ambient() != dim() || B.ambient() != dim() || A.modulus() != B.modulus())
        throw AmbientMismatch("product_span: ambient mismatch");
    const bool same = &A == &B || A == B;
    const std::size_t N = dim();
    const std::uint32_t q = p();
    Subspace out(q, N);
    auto ra = sparse_rows(A.rows());
    auto rb = same ? std::vector<SparseRow>{} : sparse_rows(B.rows());
    const auto& rhs = same ? ra : rb;
    Vec cand(N);
    for (std::size_t r = 0; r < ra.size(); ++r)
        for (std::size_t s = same ? r : 0; s < rhs.size(); ++s) {
            std::fill(cand.begin(), cand.end(), 0);
            bool nz = false;
            for (auto [ka, ca] : ra[r])
                for (auto [kb, cb] : rhs[s]) {
                    std::int64_t idx = mono_mul(ka, kb);
                    if (idx < 0) continue;
                    cand[idx] = fp_add(cand[idx], fp_mul(ca, cb, q), q);
                    nz = true;
                }
            if (nz) out.insert(cand);
            if (out.dim() == N) return out;
        }
    return out;
}

std::string PoissonRing::render_monomial(std::uint32_t idx) const {
    const Monomial& m = basis_[idx];
    std::string s;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += gens_[i] + "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

std::string PoissonRing::render(const PoissonElement& f) const {
    check_ring(f);
    if (f.is_zero()) return "0";
    std::string s;
    // descending degree-lex order
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        if (!s.empty()) s += " + ";
        auto [idx, c] = *it;
        std::string mono = render_monomial(idx);
        if (c == 1 && mono != "1")
            s += mono;
        else if (mono == "1")
            s += std::to_string(c);
        else
            s += std::to_string(c) + "*" + mono;
    }
    return s;
}

} // namespace psalg
