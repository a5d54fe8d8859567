#pragma once

#include <map>
#include <optional>
#include <string>

#include "psalg/identities.hpp"
#include "psalg/liealg.hpp"
#include "psalg/poisson.hpp"
#include "psalg/series.hpp"

// vendored single-header nlohmann/json
#include "json.hpp"

namespace psalg {

inline constexpr const char* kEngineVersion = "psalg 1.0.0";

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parsed algebra description: a named family or an explicit structure
/// constant table, plus the ring construction to apply.
struct AlgebraSpec {
    std::uint32_t p = 0;
    std::optional<std::string> family;
    std::map<std::string, long> params;
    std::optional<std::size_t> dim;
    std::vector<std::string> labels;
    std::vector<BracketEntry> brackets;
    std::string construct_kind = "s"; // "s" | "S_degree" | "hamiltonian"
    std::uint32_t degree_cap = 0;     // S_degree only

    /// Underlying Lie algebra; empty for the hamiltonian construction.
    std::optional<LieAlgebra> lie_algebra() const;
    Ring construct(std::size_t budget = PoissonRing::kDefaultBudget) const;
    nlohmann::json echo() const;
};

/// Strict parse of the schema-1 JSON document; unknown keys are rejected.
AlgebraSpec parse_algebra_spec(const nlohmann::json& j);
AlgebraSpec parse_algebra_spec_file(const std::string& path);

nlohmann::json to_json(const SeriesReport& r);
nlohmann::json to_json(const ClassBounds& b);
nlohmann::json to_json(const IdentityVerdict& v, const PoissonRing* R);

/// Full analysis payload: all four series, class verdicts, formula values,
/// dimension-subalgebra flags. Deterministic for a fixed spec.
nlohmann::json analyze_report(const AlgebraSpec& spec, std::size_t budget);

} // namespace psalg
