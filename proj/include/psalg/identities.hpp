#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "psalg/poisson.hpp"

namespace psalg {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ArityMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PolyNode;
using NodePtr = std::shared_ptr<const PolyNode>;

/// Expression node of one polynomial term: a variable slot, a Poisson
/// bracket, or an associative product.
struct PolyNode {
    enum class Kind { Var, Bracket, Product };
    Kind kind = Kind::Var;
    int var = -1; // slot index for Var
    NodePtr l, r;

    static NodePtr leaf(int v);
    static NodePtr bracket(NodePtr a, NodePtr b);
    static NodePtr product(NodePtr a, NodePtr b);
};

struct PolyTerm {
    std::int64_t coeff = 1;
    NodePtr expr;
};

/// Multilinear by construction: every variable slot 0..arity-1 appears
/// exactly once in each term.
struct MultilinearPoissonPolynomial {
    std::string name;
    std::size_t arity = 0;
    std::vector<PolyTerm> terms;
};

/// St_{2n}: alternating sum over perfect matchings sigma with
/// sigma(2k-1) < sigma(2k) and sigma(1) < sigma(3) < ... Requires 2n <= 8.
MultilinearPoissonPolynomial standard_polynomial(std::size_t n);

enum class SeriesKind { nilpotence, strong_nilpotence, solvability, strong_solvability };

/// The paper's series identities at level s >= 1:
///  nilpotence:          {...{{X0,X1},X2},...,Xs}                (arity s+1)
///  strong_nilpotence:   {{...{{X0,X1}.Y1,X2}.Y2,...}.Y_{s-1},Xs} (arity 2s)
///  solvability:         balanced delta_s                         (arity 2^s)
///  strong_solvability:  balanced delta~_s with Y slots           (arity 2^s + 2^s - 1)
MultilinearPoissonPolynomial series_polynomial(SeriesKind kind, std::size_t s);

/// Catalog names: st2/st4/st6/st8, nilpN, snilpN, solvN, ssolvN.
std::optional<MultilinearPoissonPolynomial> catalog_lookup(const std::string& name);

PoissonElement evaluate(const PoissonRing& R, const MultilinearPoissonPolynomial& poly,
                        const std::vector<PoissonElement>& assignment);

struct IdentityVerdict {
    bool satisfied = true;
    bool sampled = false;
    std::uint64_t cases = 0;
    /// Basis index per slot of the first failing assignment.
    std::optional<std::vector<std::uint32_t>> counterexample;
};

/// Exhaustive check over all basis-monomial tuples (complete for multilinear
/// polynomials). When dim^arity exceeds the budget, single-term polynomials
/// fall back to an exact memoized value-set recursion; otherwise throws.
IdentityVerdict satisfies_multilinear(const PoissonRing& R,
                                      const MultilinearPoissonPolynomial& poly,
                                      std::uint64_t budget = 10000000);

/// Seeded random basis tuples; verdict marked sampled.
IdentityVerdict sample_multilinear(const PoissonRing& R,
                                   const MultilinearPoissonPolynomial& poly,
                                   std::uint64_t trials, std::uint64_t seed);

struct FrobeniusReport {
    bool all_zero = true;
    std::uint64_t trials = 0;
    std::string violation; // rendering of the first failing {f,g}, empty if none
};

/// {f,g}^p = 0 over seeded random constant-free pairs. For rings whose
/// bracket table has constant entries the constant part of {f,g} is removed
/// first (the identity holds in the augmentation part only; {x,y} = 1 in
/// h_2 is its own p-th power).
FrobeniusReport frobenius_power_test(const PoissonRing& R, std::uint64_t trials,
                                     std::uint64_t seed);

} // namespace psalg
