#include "psalg/liealg.hpp"

#include <algorithm>
#include <functional>

namespace psalg {

SeriesReport make_series_report(std::string kind, std::vector<std::size_t> dims) {
    SeriesReport r;
    r.kind = std::move(kind);
    r.dims = std::move(dims);
    if (!r.dims.empty() && r.dims.back() == 0) {
        r.terminated = true;
        r.class_or_length = static_cast<int>(r.dims.size()) - 1;
    } else {
        r.terminated = false;
        r.class_or_length = -1;
        r.stable_dim = r.dims.empty() ? 0 : r.dims.back();
    }
    return r;
}

namespace {

// Runs a descending subspace chain until it reaches 0 or repeats a dimension.
// The chains used here are monotone, so a repeated dimension is a fixpoint.
std::vector<Subspace> run_chain(Subspace first,
                                const std::function<Subspace(const Subspace&)>& step) {
    std::vector<Subspace> chain;
    chain.push_back(std::move(first));
    while (chain.back().dim() != 0) {
        Subspace next = step(chain.back());
        bool stable = next.dim() == chain.back().dim();
        chain.push_back(std::move(next));
        if (stable) break;
    }
    return chain;
}

std::vector<std::size_t> chain_dims(const std::vector<Subspace>& chain) {
    std::vector<std::size_t> dims;
    dims.reserve(chain.size());
    for (const auto& s : chain) dims.push_back(s.dim());
    return dims;
}

} // namespace

LieAlgebra LieAlgebra::build(PrimeModulus p, std::size_t dim,
                             std::vector<std::string> labels,
                             const std::vector<BracketEntry>& brackets) {
    if (labels.empty()) {
        for (std::size_t i = 0; i < dim; ++i)
            labels.push_back("e" + std::to_string(i));
    }
    if (labels.size() != dim) throw BadParams("label count does not match dim");
    LieAlgebra L(p, dim, std::move(labels));
    L.table_.assign(dim * dim, {});
    const std::uint32_t q = p.value();
    for (const auto& b : brackets) {
        if (b.i < 0 || b.j < 0 || static_cast<std::size_t>(b.i) >= dim ||
            static_cast<std::size_t>(b.j) >= dim || b.i >= b.j)
            throw IndexOutOfRange("bracket entry indices must satisfy 0 <= i < j < dim");
        auto& cell = L.table_[static_cast<std::size_t>(b.i) * dim + b.j];
        for (auto [k, c] : b.value) {
            if (k < 0 || static_cast<std::size_t>(k) >= dim)
                throw IndexOutOfRange("bracket target index out of range");
            std::uint32_t cv = fp_reduce_i64(c, q);
            if (cv != 0) cell.emplace_back(k, cv);
        }
    }
    L.check_jacobi();
    return L;
}

const std::vector<std::pair<int, std::uint32_t>>&
LieAlgebra::entry(std::size_t i, std::size_t j) const {
    return table_[i * dim_ + j];
}

Vec LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
    Vec out(dim_, 0);
    if (i == j) return out;
    const std::uint32_t q = mod_.value();
    bool flip = i > j;
    if (flip) std::swap(i, j);
    for (auto [k, c] : entry(i, j))
        out[static_cast<std::size_t>(k)] =
            fp_add(out[static_cast<std::size_t>(k)], flip ? fp_neg(c, q) : c, q);
    return out;
}

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const {
    if (u.size() != dim_ || v.size() != dim_)
        throw AmbientMismatch("lie_bracket: vector length mismatch");
    const std::uint32_t q = mod_.value();
    Vec out(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (u[i] == 0 && v[i] == 0) continue;
        for (std::size_t j = i + 1; j < dim_; ++j) {
            const auto& cell = entry(i, j);
            if (cell.empty()) continue;
            // u_i v_j - u_j v_i
            std::uint32_t coeff = fp_sub(fp_mul(u[i], v[j], q), fp_mul(u[j], v[i], q), q);
            if (coeff == 0) continue;
            for (auto [k, c] : cell)
                out[static_cast<std::size_t>(k)] =
                    fp_add(out[static_cast<std::size_t>(k)], fp_mul(coeff, c, q), q);
        }
    }
    return out;
}

void LieAlgebra::check_jacobi() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            for (std::size_t k = j + 1; k < dim_; ++k) {
                Vec a = bracket(basis_bracket(i, j), [&] { Vec e(dim_, 0); e[k] = 1; return e; }());
                Vec b = bracket(basis_bracket(j, k), [&] { Vec e(dim_, 0); e[i] = 1; return e; }());
                Vec c = bracket(basis_bracket(k, i), [&] { Vec e(dim_, 0); e[j] = 1; return e; }());
                const std::uint32_t q = mod_.value();
                for (std::size_t t = 0; t < dim_; ++t) {
                    if (fp_add(fp_add(a[t], b[t], q), c[t], q) != 0)
                        throw JacobiViolation(
                            "Jacobi identity fails on basis triple (" + labels_[i] + "," +
                            labels_[j] + "," + labels_[k] + ")");
                }
            }
}

std::vector<Subspace> LieAlgebra::lower_central_chain() const {
    Subspace full = Subspace::full(mod_.value(), dim_);
    auto step = [&](const Subspace& g) {
        return bilinear_image_span(g, full, [&](const Vec& u, const Vec& v) {
            return bracket(u, v);
        });
    };
    return run_chain(full, step);
}

SeriesReport LieAlgebra::lower_central_series() const {
    return make_series_report("gamma", chain_dims(lower_central_chain()));
}

std::vector<Subspace> LieAlgebra::derived_chain() const {
    auto step = [&](const Subspace& d) {
        return bilinear_image_span(d, d, [&](const Vec& u, const Vec& v) {
            return bracket(u, v);
        });
    };
    return run_chain(Subspace::full(mod_.value(), dim_), step);
}

SeriesReport LieAlgebra::derived_series() const {
    return make_series_report("derived", chain_dims(derived_chain()));
}

std::size_t LieAlgebra::width(const Vec& x) const {
    if (x.size() != dim_) throw AmbientMismatch("width: vector length mismatch");
    Subspace img(mod_.value(), dim_);
    Vec e(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
        e[i] = 1;
        img.insert(bracket(e, x));
        e[i] = 0;
    }
    return img.dim();
}

std::uint64_t LieAlgebra::delta_n_census(std::size_t n, std::uint64_t cap) const {
    const std::uint32_t q = mod_.value();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (total > cap / q + 1) throw EnumerationTooLarge("p^dim exceeds census cap");
        total *= q;
    }
    if (total > cap) throw EnumerationTooLarge("p^dim exceeds census cap");
    std::uint64_t count = 0;
    Vec x(dim_, 0);
    for (std::uint64_t t = 0; t < total; ++t) {
        std::uint64_t v = t;
        for (std::size_t i = 0; i < dim_; ++i) {
            x[i] = static_cast<std::uint32_t>(v % q);
            v /= q;
        }
        if (width(x) <= n) ++count;
    }
    return count;
}

namespace {

long get_param(const std::map<std::string, long>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw BadParams("missing parameter: " + key);
    return it->second;
}

} // namespace

LieAlgebra make_named(const std::string& family,
                      const std::map<std::string, long>& params, PrimeModulus p) {
    if (family == "abelian") {
        long n = get_param(params, "n");
        if (n < 0) throw BadParams("abelian: n must be >= 0");
        return LieAlgebra::build(p, static_cast<std::size_t>(n), {}, {});
    }
    if (family == "heisenberg") {
        long m = get_param(params, "m");
        if (m < 1) throw BadParams("heisenberg: m must be >= 1");
        std::size_t dim = 2 * static_cast<std::size_t>(m) + 1;
        std::vector<std::string> labels;
        for (long i = 1; i <= m; ++i) labels.push_back(m == 1 ? "x" : "x" + std::to_string(i));
        for (long i = 1; i <= m; ++i) labels.push_back(m == 1 ? "y" : "y" + std::to_string(i));
        labels.push_back("z");
        std::vector<BracketEntry> br;
        for (long i = 0; i < m; ++i)
            br.push_back({static_cast<int>(i), static_cast<int>(m + i),
                          {{static_cast<int>(dim) - 1, 1}}});
        return LieAlgebra::build(p, dim, labels, br);
    }
    if (family == "filiform") {
        long n = get_param(params, "n");
        if (n < 3) throw BadParams("filiform: n must be >= 3");
        std::vector<std::string> labels;
        for (long i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
        std::vector<BracketEntry> br;
        for (long i = 2; i < n; ++i) // [e1, e_i] = e_{i+1}
            br.push_back({0, static_cast<int>(i - 1), {{static_cast<int>(i), 1}}});
        return LieAlgebra::build(p, static_cast<std::size_t>(n), labels, br);
    }
    if (family == "solvable2") {
        return LieAlgebra::build(p, 2, {"x", "y"}, {{0, 1, {{1, 1}}}});
    }
    if (family == "char2_family_A") {
        long k = get_param(params, "k");
        if (k < 1) throw BadParams("char2_family_A: k must be >= 1");
        std::vector<std::string> labels{"x"};
        for (long i = 1; i <= k; ++i) labels.push_back("y" + std::to_string(i));
        std::vector<BracketEntry> br;
        for (long i = 1; i <= k; ++i) // [x, y_i] = y_i
            br.push_back({0, static_cast<int>(i), {{static_cast<int>(i), 1}}});
        return LieAlgebra::build(p, static_cast<std::size_t>(k) + 1, labels, br);
    }
    if (family == "char2_family_B") {
        long k = get_param(params, "k");
        if (k < 1) throw BadParams("char2_family_B: k must be >= 1");
        std::vector<std::string> labels{"x"};
        for (long i = 1; i <= k; ++i) labels.push_back("y" + std::to_string(i));
        for (long i = 1; i <= k; ++i) labels.push_back("z" + std::to_string(i));
        std::vector<BracketEntry> br;
        for (long i = 1; i <= k; ++i) // [x, y_i] = z_i
            br.push_back({0, static_cast<int>(i), {{static_cast<int>(k + i), 1}}});
        return LieAlgebra::build(p, 2 * static_cast<std::size_t>(k) + 1, labels, br);
    }
    throw UnknownFamily("unknown family: " + family);
}

} // namespace psalg
