#include "psalg/identities.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace psalg {

NodePtr PolyNode::leaf(int v) {
    auto n = std::make_shared<PolyNode>();
    n->kind = Kind::Var;
    n->var = v;
    return n;
}

NodePtr PolyNode::bracket(NodePtr a, NodePtr b) {
    auto n = std::make_shared<PolyNode>();
    n->kind = Kind::Bracket;
    n->l = std::move(a);
    n->r = std::move(b);
    return n;
}

NodePtr PolyNode::product(NodePtr a, NodePtr b) {
    auto n = std::make_shared<PolyNode>();
    n->kind = Kind::Product;
    n->l = std::move(a);
    n->r = std::move(b);
    return n;
}

namespace {

void collect_vars(const PolyNode& n, std::vector<int>& out) {
    if (n.kind == PolyNode::Kind::Var) {
        out.push_back(n.var);
        return;
    }
    collect_vars(*n.l, out);
    collect_vars(*n.r, out);
}

// every slot 0..arity-1 exactly once per term
void check_multilinear(const MultilinearPoissonPolynomial& poly) {
    for (const auto& t : poly.terms) {
        std::vector<int> vars;
        collect_vars(*t.expr, vars);
        std::sort(vars.begin(), vars.end());
        if (vars.size() != poly.arity)
            throw std::logic_error("polynomial term arity mismatch");
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] != static_cast<int>(i))
                throw std::logic_error("polynomial term is not multilinear");
    }
}

int permutation_sign(const std::vector<int>& seq) {
    int inv = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

void enumerate_matchings(std::vector<int>& seq, std::vector<bool>& used,
                         MultilinearPoissonPolynomial& poly) {
    const std::size_t N = used.size();
    if (seq.size() == N) {
        PolyTerm term;
        term.coeff = permutation_sign(seq);
        NodePtr expr;
        for (std::size_t k = 0; k + 1 < seq.size(); k += 2) {
            NodePtr br = PolyNode::bracket(PolyNode::leaf(seq[k]), PolyNode::leaf(seq[k + 1]));
            expr = expr ? PolyNode::product(std::move(expr), std::move(br)) : std::move(br);
        }
        term.expr = std::move(expr);
        poly.terms.push_back(std::move(term));
        return;
    }
    std::size_t lo = 0;
    while (used[lo]) ++lo; // smallest unused opens the next block
    used[lo] = true;
    seq.push_back(static_cast<int>(lo));
    for (std::size_t hi = lo + 1; hi < N; ++hi) {
        if (used[hi]) continue;
        used[hi] = true;
        seq.push_back(static_cast<int>(hi));
        enumerate_matchings(seq, used, poly);
        seq.pop_back();
        used[hi] = false;
    }
    seq.pop_back();
    used[lo] = false;
}

} // namespace

MultilinearPoissonPolynomial standard_polynomial(std::size_t n) {
    if (n < 1 || 2 * n > 8)
        throw BadParams("standard polynomial supports 1 <= n <= 4");
    MultilinearPoissonPolynomial poly;
    poly.name = "st" + std::to_string(2 * n);
    poly.arity = 2 * n;
    std::vector<int> seq;
    std::vector<bool> used(2 * n, false);
    enumerate_matchings(seq, used, poly);
    check_multilinear(poly);
    return poly;
}

MultilinearPoissonPolynomial series_polynomial(SeriesKind kind, std::size_t s) {
    if (s < 1) throw BadParams("series polynomial level must be >= 1");
    MultilinearPoissonPolynomial poly;
    NodePtr expr;
    switch (kind) {
        case SeriesKind::nilpotence: {
            poly.name = "nilp" + std::to_string(s);
            poly.arity = s + 1;
            expr = PolyNode::leaf(0);
            for (std::size_t k = 1; k <= s; ++k)
                expr = PolyNode::bracket(std::move(expr), PolyNode::leaf(static_cast<int>(k)));
            break;
        }
        case SeriesKind::strong_nilpotence: {
            poly.name = "snilp" + std::to_string(s);
            poly.arity = 2 * s; // X_0..X_s then Y_1..Y_{s-1}
            expr = PolyNode::bracket(PolyNode::leaf(0), PolyNode::leaf(1));
            for (std::size_t k = 2; k <= s; ++k) {
                int y = static_cast<int>(s + k - 1);
                expr = PolyNode::bracket(
                    PolyNode::product(std::move(expr), PolyNode::leaf(y)),
                    PolyNode::leaf(static_cast<int>(k)));
            }
            break;
        }
        case SeriesKind::solvability: {
            poly.name = "solv" + std::to_string(s);
            if (s > 20) throw BadParams("solvability level too large");
            poly.arity = std::size_t{1} << s;
            int next = 0;
            std::function<NodePtr(std::size_t)> build = [&](std::size_t lvl) -> NodePtr {
                if (lvl == 0) return PolyNode::leaf(next++);
                NodePtr a = build(lvl - 1);
                NodePtr b = build(lvl - 1);
                return PolyNode::bracket(std::move(a), std::move(b));
            };
            expr = build(s);
            break;
        }
        case SeriesKind::strong_solvability: {
            poly.name = "ssolv" + std::to_string(s);
            if (s > 20) throw BadParams("strong solvability level too large");
            std::size_t xs = std::size_t{1} << s;
            poly.arity = xs + xs - 1; // X slots first, then Y slots
            int nx = 0, ny = static_cast<int>(xs);
            std::function<NodePtr(std::size_t)> build = [&](std::size_t lvl) -> NodePtr {
                NodePtr a = lvl == 1 ? PolyNode::leaf(nx++) : build(lvl - 1);
                NodePtr b = lvl == 1 ? PolyNode::leaf(nx++) : build(lvl - 1);
                NodePtr br = PolyNode::bracket(std::move(a), std::move(b));
                return PolyNode::product(std::move(br), PolyNode::leaf(ny++));
            };
            expr = build(s);
            break;
        }
    }
    poly.terms.push_back({1, std::move(expr)});
    check_multilinear(poly);
    return poly;
}

std::optional<MultilinearPoissonPolynomial> catalog_lookup(const std::string& name) {
    auto parse_level = [&](std::size_t prefix_len) -> std::optional<std::size_t> {
        if (name.size() <= prefix_len) return std::nullopt;
        std::size_t v = 0;
        for (std::size_t i = prefix_len; i < name.size(); ++i) {
            if (name[i] < '0' || name[i] > '9') return std::nullopt;
            v = v * 10 + static_cast<std::size_t>(name[i] - '0');
        }
        return v;
    };
    try {
        if (name.rfind("st", 0) == 0) {
            auto v = parse_level(2);
            if (v && *v >= 2 && *v % 2 == 0) return standard_polynomial(*v / 2);
            return std::nullopt;
        }
        if (name.rfind("snilp", 0) == 0) {
            auto v = parse_level(5);
            if (v) return series_polynomial(SeriesKind::strong_nilpotence, *v);
        } else if (name.rfind("nilp", 0) == 0) {
            auto v = parse_level(4);
            if (v) return series_polynomial(SeriesKind::nilpotence, *v);
        } else if (name.rfind("ssolv", 0) == 0) {
            auto v = parse_level(5);
            if (v) return series_polynomial(SeriesKind::strong_solvability, *v);
        } else if (name.rfind("solv", 0) == 0) {
            auto v = parse_level(4);
            if (v) return series_polynomial(SeriesKind::solvability, *v);
        }
    } catch (const BadParams&) {
        return std::nullopt;
    }
    return std::nullopt;
}

namespace {

PoissonElement eval_node(const PoissonRing& R, const PolyNode& n,
                         const std::vector<PoissonElement>& a) {
    switch (n.kind) {
        case PolyNode::Kind::Var: return a[static_cast<std::size_t>(n.var)];
        case PolyNode::Kind::Bracket:
            return R.bracket(eval_node(R, *n.l, a), eval_node(R, *n.r, a));
        case PolyNode::Kind::Product:
            return R.multiply(eval_node(R, *n.l, a), eval_node(R, *n.r, a));
    }
    return R.zero();
}

} // namespace

PoissonElement evaluate(const PoissonRing& R, const MultilinearPoissonPolynomial& poly,
                        const std::vector<PoissonElement>& assignment) {
    if (assignment.size() != poly.arity)
        throw ArityMismatch("assignment length does not match polynomial arity");
    PoissonElement out = R.zero();
    for (const auto& term : poly.terms)
        out = R.add(out, R.scalar_mul(term.coeff, eval_node(R, *term.expr, assignment)));
    return out;
}

namespace {

// value of a node over all basis substitutions, with one witness assignment
// per distinct value up to scalar
struct ValueSet {
    std::vector<std::pair<PoissonElement, std::vector<std::uint32_t>>> vals;
};

ValueSet node_value_set(const PoissonRing& R, const PolyNode& n, std::size_t arity,
                        std::uint64_t budget, std::uint64_t& spent) {
    ValueSet out;
    const std::uint32_t unset = 0xffffffffu;
    if (n.kind == PolyNode::Kind::Var) {
        for (std::uint32_t i = 0; i < R.dim(); ++i) {
            std::vector<std::uint32_t> asg(arity, unset);
            asg[static_cast<std::size_t>(n.var)] = i;
            out.vals.emplace_back(R.monomial_element(i, 1), std::move(asg));
        }
        return out;
    }
    ValueSet lhs = node_value_set(R, *n.l, arity, budget, spent);
    ValueSet rhs = node_value_set(R, *n.r, arity, budget, spent);
    std::set<std::vector<std::pair<std::uint32_t, std::uint32_t>>> seen;
    for (const auto& [la, lasg] : lhs.vals)
        for (const auto& [ra, rasg] : rhs.vals) {
            if (++spent > budget)
                throw BudgetExceeded("identity value-set recursion exceeded budget");
            PoissonElement v = n.kind == PolyNode::Kind::Bracket ? R.bracket(la, ra)
                                                                 : R.multiply(la, ra);
            if (v.is_zero()) continue; // zero stays zero upward
            // canonical representative up to a scalar factor
            PoissonElement norm = R.scalar_mul(fp_inv(v.terms().front().second, R.p()), v);
            if (!seen.insert(norm.terms()).second) continue;
            std::vector<std::uint32_t> asg = lasg;
            for (std::size_t i = 0; i < arity; ++i)
                if (rasg[i] != unset) asg[i] = rasg[i];
            out.vals.emplace_back(std::move(norm), std::move(asg));
        }
    return out;
}

} // namespace

IdentityVerdict satisfies_multilinear(const PoissonRing& R,
                                      const MultilinearPoissonPolynomial& poly,
                                      std::uint64_t budget) {
    IdentityVerdict verdict;
    // dim^arity with saturation
    std::uint64_t total = 1;
    bool over = false;
    for (std::size_t i = 0; i < poly.arity; ++i) {
        if (R.dim() == 0) { total = 0; break; }
        if (total > budget / R.dim()) { over = true; break; }
        total *= R.dim();
    }
    if (!over && total <= budget) {
        std::vector<std::uint32_t> tuple(poly.arity, 0);
        std::vector<PoissonElement> asg;
        for (std::size_t i = 0; i < poly.arity; ++i) asg.push_back(R.monomial_element(0, 1));
        for (std::uint64_t t = 0; t < total; ++t) {
            ++verdict.cases;
            if (!evaluate(R, poly, asg).is_zero()) {
                verdict.satisfied = false;
                verdict.counterexample = tuple;
                return verdict;
            }
            // next tuple in canonical order
            for (std::size_t i = poly.arity; i-- > 0;) {
                if (++tuple[i] < R.dim()) {
                    asg[i] = R.monomial_element(tuple[i], 1);
                    break;
                }
                tuple[i] = 0;
                asg[i] = R.monomial_element(0, 1);
            }
        }
        return verdict;
    }
    if (poly.terms.size() != 1)
        throw BudgetExceeded("exhaustive identity check over budget; sampling mode available");
    const PolyTerm& term = poly.terms.front();
    if (fp_reduce_i64(term.coeff, R.p()) == 0) return verdict; // zero polynomial
    std::uint64_t spent = 0;
    ValueSet root = node_value_set(R, *term.expr, poly.arity, budget, spent);
    verdict.cases = spent;
    if (!root.vals.empty()) {
        verdict.satisfied = false;
        verdict.counterexample = root.vals.front().second;
    }
    return verdict;
}

IdentityVerdict sample_multilinear(const PoissonRing& R,
                                   const MultilinearPoissonPolynomial& poly,
                                   std::uint64_t trials, std::uint64_t seed) {
    IdentityVerdict verdict;
    verdict.sampled = true;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(R.dim() - 1));
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::vector<std::uint32_t> tuple(poly.arity);
        std::vector<PoissonElement> asg;
        for (auto& x : tuple) {
            x = pick(rng);
            asg.push_back(R.monomial_element(x, 1));
        }
        ++verdict.cases;
        if (!evaluate(R, poly, asg).is_zero()) {
            verdict.satisfied = false;
            verdict.counterexample = tuple;
            return verdict;
        }
    }
    return verdict;
}

FrobeniusReport frobenius_power_test(const PoissonRing& R, std::uint64_t trials,
                                     std::uint64_t seed) {
    if (!R.shape().exponent_cap)
        throw ShapeViolation("Frobenius test needs the exponent-cap shape");
    FrobeniusReport rep;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> coeff(0, R.p() - 1);
    auto random_constant_free = [&] {
        PoissonElement f = R.zero();
        for (std::uint32_t i = 1; i < R.dim(); ++i) {
            std::uint32_t c = coeff(rng);
            if (c != 0) f = R.add(f, R.monomial_element(i, c));
        }
        return f;
    };
    for (std::uint64_t t = 0; t < trials; ++t) {
        PoissonElement f = random_constant_free();
        PoissonElement g = random_constant_free();
        PoissonElement h = R.bracket(f, g);
        if (R.bracket_has_constants())
            h = R.sub(h, R.monomial_element(0, h.coeff(0)));
        ++rep.trials;
        PoissonElement hp = R.power(h, R.p());
        if (!hp.is_zero()) {
            rep.all_zero = false;
            rep.violation = R.render(hp);
            return rep;
        }
    }
    return rep;
}

} // namespace psalg
