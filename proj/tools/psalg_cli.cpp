// psalg: series, class formulas, and identity checks for truncated
// symmetric Poisson algebras over prime fields.

#include "CLI11.hpp"
#include "psalg/report.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

using nlohmann::json;
using namespace psalg;

namespace {

AlgebraSpec fam(const std::string& family, std::map<std::string, long> params,
                std::uint32_t p, std::string kind = "s", std::uint32_t D = 0) {
    AlgebraSpec s;
    s.p = p;
    s.family = family;
    s.params = std::move(params);
    s.construct_kind = std::move(kind);
    s.degree_cap = D;
    return s;
}

struct SuiteRun {
    json checks = json::array();
    bool pass = true;

    void record(const std::string& desc, bool ok, json detail = json()) {
        pass = pass && ok;
        json c{{"check", desc}, {"pass", ok}};
        if (!detail.is_null()) c["detail"] = std::move(detail);
        checks.push_back(std::move(c));
    }

    json finish(const std::string& name) const {
        return {{"suite", name}, {"pass", pass}, {"checks", checks}};
    }
};

std::string cell_name(const AlgebraSpec& s) {
    std::string out = s.family ? *s.family : "lie";
    for (const auto& [k, v] : s.params) out += " " + k + "=" + std::to_string(v);
    out += " p=" + std::to_string(s.p);
    if (s.construct_kind == "S_degree") out += " D=" + std::to_string(s.degree_cap);
    return out;
}

// --- verification suites -------------------------------------------------

json suite_nilp_theorem(std::size_t budget) {
    SuiteRun run;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto R = fam("solvable2", {}, p).construct(budget);
        auto g = gamma_series(*R);
        run.record("s(solvable2, p=" + std::to_string(p) + ") not Lie nilpotent",
                   !g.terminated && g.stable_dim > 0, json{{"dims", g.dims}});
    }
    std::vector<AlgebraSpec> nilpotent = {
        fam("abelian", {{"n", 3}}, 2),    fam("heisenberg", {{"m", 1}}, 2),
        fam("heisenberg", {{"m", 1}}, 3), fam("filiform", {{"n", 3}}, 2),
        fam("filiform", {{"n", 3}}, 3),   fam("filiform", {{"n", 4}}, 2),
        fam("char2_family_B", {{"k", 2}}, 2)};
    for (const auto& s : nilpotent) {
        auto g = gamma_series(*s.construct(budget));
        run.record("s(" + cell_name(s) + ") Lie nilpotent", g.terminated,
                   json{{"dims", g.dims}});
    }
    return run.finish("nilp-theorem");
}

json suite_class_formula(std::size_t budget) {
    SuiteRun run;
    struct Cell { AlgebraSpec s; std::size_t expected; };
    std::vector<Cell> cells;
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        cells.push_back({fam("heisenberg", {{"m", 1}}, p), p});
    for (std::uint32_t p : {2u, 3u})
        cells.push_back({fam("filiform", {{"n", 3}}, p), p});
    cells.push_back({fam("filiform", {{"n", 4}}, 2), 4});
    cells.push_back({fam("filiform", {{"n", 4}}, 3), 7});
    for (const auto& [s, expected] : cells) {
        auto L = s.lie_algebra();
        auto bounds = predicted_class_bounds(*L);
        auto upper = upper_lie_powers(*s.construct(budget));
        bool ok = upper.terminated &&
                  static_cast<std::size_t>(upper.class_or_length) == expected &&
                  bounds.strong_class == expected;
        run.record(cell_name(s) + " strong class == formula == " + std::to_string(expected),
                   ok, json{{"computed", upper.class_or_length}, {"formula", bounds.strong_class}});
    }
    return run.finish("class-formula");
}

json suite_class_coincide(std::size_t budget) {
    SuiteRun run;
    for (std::uint32_t p : {5u, 7u}) {
        auto s = fam("heisenberg", {{"m", 1}}, p);
        auto R = s.construct(budget);
        auto g = gamma_series(*R);
        auto u = upper_lie_powers(*R);
        bool ok = g.terminated && u.terminated && g.class_or_length == u.class_or_length;
        run.record(cell_name(s) + " Lie class == strong class", ok,
                   json{{"lie", g.class_or_length}, {"strong", u.class_or_length}});
    }
    return run.finish("class-coincide-p>3");
}

json suite_lower_bound(std::size_t budget) {
    SuiteRun run;
    std::vector<AlgebraSpec> cells;
    for (std::uint32_t p : {2u, 3u}) {
        cells.push_back(fam("heisenberg", {{"m", 1}}, p));
        cells.push_back(fam("filiform", {{"n", 4}}, p));
    }
    for (const auto& s : cells) {
        auto bounds = predicted_class_bounds(*s.lie_algebra());
        auto R = s.construct(budget);
        auto g = gamma_series(*R);
        auto u = upper_lie_powers(*R);
        bool ok = g.terminated && u.terminated && bounds.lower_bound &&
                  static_cast<std::size_t>(g.class_or_length) >= *bounds.lower_bound &&
                  g.class_or_length <= u.class_or_length &&
                  static_cast<std::size_t>(u.class_or_length) == bounds.strong_class;
        run.record(cell_name(s) + " lower <= lie class <= strong == formula", ok,
                   json{{"lower", *bounds.lower_bound},
                        {"lie", g.class_or_length},
                        {"strong", u.class_or_length}});
    }
    return run.finish("lower-bound-p23");
}

json suite_dim_subalg(std::size_t budget) {
    SuiteRun run;
    std::vector<AlgebraSpec> cells = {
        fam("abelian", {{"n", 3}}, 2),    fam("abelian", {{"n", 2}}, 3),
        fam("heisenberg", {{"m", 1}}, 2), fam("heisenberg", {{"m", 1}}, 3),
        fam("heisenberg", {{"m", 1}}, 5), fam("filiform", {{"n", 3}}, 2),
        fam("filiform", {{"n", 3}}, 3),   fam("filiform", {{"n", 3}}, 5),
        fam("filiform", {{"n", 4}}, 2),   fam("filiform", {{"n", 4}}, 3),
        fam("char2_family_B", {{"k", 2}}, 2)};
    for (const auto& s : cells) {
        auto R = s.construct(budget);
        auto upper = upper_lie_powers(*R);
        std::size_t cap = upper.dims.size() - 1;
        bool ok = true;
        for (const auto& e : dimension_subalgebras(*R, cap)) ok = ok && e.equals_gamma;
        run.record(cell_name(s) + " L cap R^(n) == gamma_{n+1}(L) for n <= " +
                       std::to_string(cap),
                   ok);
    }
    return run.finish("dim-subalg");
}

json suite_upper_power_structure(std::size_t budget) {
    SuiteRun run;
    std::vector<AlgebraSpec> cells = {
        fam("heisenberg", {{"m", 1}}, 2), fam("heisenberg", {{"m", 1}}, 3),
        fam("filiform", {{"n", 3}}, 3),   fam("filiform", {{"n", 4}}, 2)};
    for (const auto& s : cells) {
        auto R = s.construct(budget);
        auto upper = upper_lie_powers(*R);
        auto rep = verify_upper_power_structure(*R, upper.dims.size() - 1);
        json dims = json::array();
        for (const auto& c : rep.checks)
            dims.push_back({{"n", c.n}, {"power", c.power_dim}, {"filtration", c.filtration_dim}});
        run.record(cell_name(s) + " R^(n) == E_n for all n", rep.all_equal, dims);
    }
    return run.finish("upper-power-structure");
}

json suite_filtration(std::size_t budget) {
    SuiteRun run;
    std::vector<AlgebraSpec> cells = {
        fam("heisenberg", {{"m", 1}}, 2), fam("heisenberg", {{"m", 1}}, 3),
        fam("filiform", {{"n", 4}}, 2),   fam("abelian", {{"n", 2}}, 3)};
    for (const auto& s : cells) {
        auto rep = verify_filtration_law(*s.construct(budget));
        run.record(cell_name(s) + " R^(i)R^(j), {R^(i),R^(j)} in R^(i+j)", rep.all_hold,
                   json{{"pairs", rep.pairs_checked}});
    }
    return run.finish("filtration");
}

json suite_commutator_products(std::size_t budget) {
    SuiteRun run;
    std::vector<AlgebraSpec> cells = {
        fam("heisenberg", {{"m", 1}}, 5), fam("heisenberg", {{"m", 1}}, 2),
        fam("heisenberg", {{"m", 1}}, 3), fam("filiform", {{"n", 4}}, 5)};
    for (const auto& s : cells) {
        auto rep = verify_commutator_products(*s.construct(budget), 6);
        run.record(cell_name(s) + " commutator product inclusions (n+m <= 6)", rep.all_hold,
                   json{{"checks", rep.checks.size()},
                        {"claim2_checked", rep.claim2_checked},
                        {"claim2", rep.claim2_holds}});
    }
    return run.finish("commutator-products");
}

json suite_solv_theorem(std::size_t budget) {
    SuiteRun run;
    for (std::uint32_t p : {3u, 5u}) {
        auto s = fam("solvable2", {}, p);
        auto R = s.construct(budget);
        auto d = derived_series(*R);
        auto ud = upper_derived_series(*R);
        run.record("s(solvable2, p=" + std::to_string(p) + ") solvable and strongly solvable",
                   d.terminated && ud.terminated,
                   json{{"solv_len", d.class_or_length}, {"strong_solv_len", ud.class_or_length}});
    }
    return run.finish("solv-theorem-p>=3");
}

json suite_char2(std::size_t budget) {
    SuiteRun run;
    auto H = PoissonRing::truncated_hamiltonian(1, PrimeModulus(2), budget);
    auto d = derived_series(*H);
    run.record("h_2(F_2) derived dims [4,3,1,0]",
               d.dims == std::vector<std::size_t>{4, 3, 1, 0} && d.class_or_length == 3,
               json{{"dims", d.dims}});
    auto ud = upper_derived_series(*H);
    run.record("h_2(F_2) upper derived stabilizes at dim 4 (not strongly solvable)",
               !ud.terminated && ud.stable_dim == 4, json{{"dims", ud.dims}});
    for (const char* family : {"char2_family_A", "char2_family_B"}) {
        int prev_strong = -1;
        for (long k : {1L, 2L, 3L}) {
            auto s = fam(family, {{"k", k}}, 2);
            auto R = s.construct(budget);
            auto dd = derived_series(*R);
            auto uu = upper_derived_series(*R);
            bool ok = dd.terminated && dd.class_or_length <= 3 && uu.terminated &&
                      uu.class_or_length >= prev_strong;
            prev_strong = uu.class_or_length;
            run.record(cell_name(s) + " solvable (len <= 3), strongly solvable, nondecreasing",
                       ok, json{{"solv_len", dd.class_or_length},
                                {"strong_solv_len", uu.class_or_length}});
        }
    }
    return run.finish("char2-counterexamples");
}

json suite_shestakov(std::size_t budget) {
    SuiteRun run;
    const std::uint32_t p = 101;
    for (const char* family : {"solvable2", "heisenberg"}) {
        std::map<std::string, long> params;
        if (std::string(family) == "heisenberg") params["m"] = 1;
        auto s = fam(family, params, p, "S_degree", 6);
        auto R = s.construct(budget);
        auto g = gamma_series(*R);
        // a stabilized chain repeats its last dimension forever
        auto dim_at = [](const SeriesReport& r, std::size_t i) {
            return r.dims[std::min(i, r.dims.size() - 1)];
        };
        bool gamma_ok = true; // gamma_n != 0 for n <= 5
        for (std::size_t n = 1; n <= 5; ++n)
            gamma_ok = gamma_ok && dim_at(g, n - 1) > 0;
        auto d = derived_series(*R);
        // two derived steps stay nonzero (delta_3 in the delta_1 = R indexing)
        bool delta3_ok = dim_at(d, 2) > 0;
        run.record(cell_name(s) + " gamma_n != 0 up to n=5 and delta_3 != 0",
                   gamma_ok && delta3_ok,
                   json{{"gamma_dims", g.dims}, {"derived_dims", d.dims}});
    }
    {
        auto s = fam("abelian", {{"n", 2}}, p, "S_degree", 6);
        auto R = s.construct(budget);
        auto g = gamma_series(*R);
        auto d = derived_series(*R);
        run.record("abelian degree truncation: all series terminate at step 1",
                   g.terminated && g.class_or_length == 1 && d.terminated &&
                       d.class_or_length == 1,
                   json{{"gamma_dims", g.dims}, {"derived_dims", d.dims}});
    }
    {
        auto d6 = derived_series(*fam("solvable2", {}, p, "S_degree", 6).construct(budget));
        auto d12 = derived_series(*fam("solvable2", {}, p, "S_degree", 12).construct(budget));
        run.record("solvable2 derived length grows from D=6 to D=12",
                   d6.terminated && d12.terminated &&
                       d12.class_or_length > d6.class_or_length,
                   json{{"len_D6", d6.class_or_length}, {"len_D12", d12.class_or_length}});
    }
    return run.finish("shestakov-extension");
}

json suite_identities(std::size_t budget) {
    SuiteRun run;
    auto H2 = PoissonRing::truncated_hamiltonian(1, PrimeModulus(2), budget);
    auto H3 = PoissonRing::truncated_hamiltonian(1, PrimeModulus(3), budget);
    auto st4 = standard_polynomial(2);
    auto v2 = satisfies_multilinear(*H2, st4);
    run.record("St_4 satisfied on h_2(F_2), 256 tuples", v2.satisfied && v2.cases == 256);
    auto v3 = satisfies_multilinear(*H3, st4);
    run.record("St_4 satisfied on h_2(F_3), 6561 tuples", v3.satisfied && v3.cases == 6561);
    auto nilp1 = series_polynomial(SeriesKind::nilpotence, 1);
    auto vn = satisfies_multilinear(*H2, nilp1);
    run.record("nilp1 fails on h_2(F_2) with a counterexample",
               !vn.satisfied && vn.counterexample.has_value(),
               to_json(vn, H2.get()));
    for (std::uint32_t p : {2u, 3u, 5u}) {
        auto R = fam("heisenberg", {{"m", 1}}, p).construct(budget);
        auto fr = frobenius_power_test(*R, 1000, 20240901);
        run.record("Frobenius {f,g}^p = 0 on s(heisenberg(1), p=" + std::to_string(p) +
                       "), 1000 trials",
                   fr.all_zero);
    }
    {
        auto fr = frobenius_power_test(*H2, 100, 7);
        run.record("Frobenius (augmentation part) on h_2(F_2), 100 trials", fr.all_zero);
    }
    // identity-vs-series agreement on every small corpus ring
    std::vector<AlgebraSpec> cells = {
        fam("abelian", {{"n", 2}}, 2),    fam("abelian", {{"n", 2}}, 3),
        fam("solvable2", {}, 2),          fam("solvable2", {}, 3),
        fam("heisenberg", {{"m", 1}}, 2), fam("heisenberg", {{"m", 1}}, 3),
        fam("filiform", {{"n", 3}}, 2),   fam("filiform", {{"n", 3}}, 3),
        fam("char2_family_A", {{"k", 1}}, 2), fam("char2_family_B", {{"k", 1}}, 2)};
    std::vector<Ring> rings;
    for (const auto& s : cells) rings.push_back(s.construct(budget));
    rings.push_back(H2);
    rings.push_back(H3);
    for (std::size_t i = 0; i < rings.size(); ++i) {
        const auto& R = rings[i];
        if (R->dim() > 30) continue;
        auto d = derived_series(*R);
        auto g = gamma_series(*R);
        bool ok = true;
        for (std::size_t s = 1; s <= 4; ++s) {
            bool by_series = d.terminated && static_cast<std::size_t>(d.class_or_length) <= s;
            bool by_identity =
                satisfies_multilinear(*R, series_polynomial(SeriesKind::solvability, s))
                    .satisfied;
            ok = ok && by_series == by_identity;
            bool nilp_series = g.terminated && static_cast<std::size_t>(g.class_or_length) <= s;
            bool nilp_identity =
                satisfies_multilinear(*R, series_polynomial(SeriesKind::nilpotence, s))
                    .satisfied;
            ok = ok && nilp_series == nilp_identity;
        }
        run.record("identity verdicts agree with series verdicts, ring " + std::to_string(i) +
                       " (dim " + std::to_string(R->dim()) + ")",
                   ok);
    }
    return run.finish("identities");
}

json run_suite(const std::string& name, std::size_t budget) {
    if (name == "nilp-theorem") return suite_nilp_theorem(budget);
    if (name == "class-formula") return suite_class_formula(budget);
    if (name == "class-coincide-p>3") return suite_class_coincide(budget);
    if (name == "lower-bound-p23") return suite_lower_bound(budget);
    if (name == "dim-subalg") return suite_dim_subalg(budget);
    if (name == "upper-power-structure") return suite_upper_power_structure(budget);
    if (name == "filtration") return suite_filtration(budget);
    if (name == "commutator-products") return suite_commutator_products(budget);
    if (name == "solv-theorem-p>=3") return suite_solv_theorem(budget);
    if (name == "char2-counterexamples") return suite_char2(budget);
    if (name == "shestakov-extension") return suite_shestakov(budget);
    if (name == "identities") return suite_identities(budget);
    throw ParseError("unknown suite: " + name);
}

const std::vector<std::string> kAllSuites = {
    "nilp-theorem",      "class-formula",       "class-coincide-p>3",
    "lower-bound-p23",   "dim-subalg",          "upper-power-structure",
    "filtration",        "commutator-products", "solv-theorem-p>=3",
    "char2-counterexamples", "shestakov-extension", "identities"};

// --- flag plumbing --------------------------------------------------------

struct AlgebraFlags {
    std::string file;
    std::string family;
    long m = -1, n = -1, k = -1;
    std::uint32_t p = 0;
    std::string construct = "s";
    std::uint32_t D = 0;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--file", file, "algebra JSON file (schema 1)");
        cmd->add_option("--family", family,
                        "named family: abelian|heisenberg|filiform|solvable2|"
                        "char2_family_A|char2_family_B|hamiltonian");
        cmd->add_option("--m", m, "family parameter m");
        cmd->add_option("--n", n, "family parameter n");
        cmd->add_option("--k", k, "family parameter k");
        cmd->add_option("--p", p, "field characteristic (prime)");
        cmd->add_option("--construct", construct, "ring construction: s|S_degree|hamiltonian");
        cmd->add_option("--D", D, "degree cap for S_degree");
    }

    AlgebraSpec resolve() const {
        if (!file.empty()) {
            if (!family.empty()) throw ParseError("give either --file or --family, not both");
            return parse_algebra_spec_file(file);
        }
        if (family.empty()) throw ParseError("an algebra is required: --file or --family");
        if (p == 0) throw ParseError("--p is required with --family");
        std::map<std::string, long> params;
        if (m >= 0) params["m"] = m;
        if (n >= 0) params["n"] = n;
        if (k >= 0) params["k"] = k;
        std::string kind = construct;
        if (family == "hamiltonian") kind = "hamiltonian";
        return fam(family, std::move(params), p, kind, D);
    }
};

std::vector<long> parse_range(const std::string& text) {
    std::vector<long> out;
    auto push = [&](const std::string& tok) {
        std::size_t dots = tok.find("..");
        if (dots != std::string::npos) {
            long a = std::stol(tok.substr(0, dots));
            long b = std::stol(tok.substr(dots + 2));
            for (long v = a; v <= b; ++v) out.push_back(v);
        } else {
            out.push_back(std::stol(tok));
        }
    };
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) {
            if (start < text.size()) push(text.substr(start));
            break;
        }
        push(text.substr(start, comma - start));
        start = comma + 1;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

json census_row(const std::string& family, const std::string& params_text,
                const AlgebraSpec& spec, std::size_t budget) {
    json row;
    row["family"] = family;
    row["params"] = params_text;
    row["p"] = spec.p;
    row["dim"] = nullptr;
    row["strong_class"] = nullptr;
    row["lie_class"] = nullptr;
    row["solv_len"] = nullptr;
    row["strong_solv_len"] = nullptr;
    row["formula"] = nullptr;
    row["lower_bound"] = nullptr;
    try {
        auto R = spec.construct(budget);
        row["dim"] = R->dim();
        auto g = gamma_series(*R);
        auto u = upper_lie_powers(*R);
        auto d = derived_series(*R);
        auto ud = upper_derived_series(*R);
        if (g.terminated) row["lie_class"] = g.class_or_length;
        if (u.terminated) row["strong_class"] = u.class_or_length;
        if (d.terminated) row["solv_len"] = d.class_or_length;
        if (ud.terminated) row["strong_solv_len"] = ud.class_or_length;
        auto L = spec.lie_algebra();
        if (L && L->lower_central_series().terminated) {
            auto b = predicted_class_bounds(*L);
            row["formula"] = b.strong_class;
            if (b.lower_bound) row["lower_bound"] = *b.lower_bound;
        }
        row["status"] = "ok";
    } catch (const DimensionBudgetExceeded&) {
        row["status"] = "skipped";
    }
    return row;
}

std::string csv_field(const json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const DimensionBudgetExceeded*>(&e) ||
        dynamic_cast<const EnumerationTooLarge*>(&e) ||
        dynamic_cast<const BudgetExceeded*>(&e))
        return 3;
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact engine for truncated symmetric Poisson algebras over F_p"};
    app.require_subcommand(1);
    std::size_t budget = PoissonRing::kDefaultBudget;
    app.add_option("--budget", budget, "basis-monomial cap")->capture_default_str();

    auto* analyze = app.add_subcommand("analyze", "series, classes and formulas of one ring");
    // --budget may appear after the subcommand name
    analyze->fallthrough();
    AlgebraFlags analyze_flags;
    analyze_flags.add_to(analyze);

    auto* verify = app.add_subcommand("verify", "run a named theorem-verification suite");
    verify->fallthrough();
    std::string suite;
    std::string verify_format = "text";
    verify->add_option("suite", suite, "suite name or \"all\"")->required();
    verify->add_option("--format", verify_format, "text|json")->capture_default_str();

    auto* census = app.add_subcommand("census", "parameter sweep to CSV or JSONL");
    census->fallthrough();
    std::string census_family, census_out, census_format = "csv";
    std::string range_m, range_n, range_k, prime_list;
    census->add_option("--family", census_family, "family to sweep")->required();
    census->add_option("--p", prime_list, "prime list, e.g. 2,3,5")->required();
    census->add_option("--m", range_m, "m range, e.g. 1..3 or 1,2");
    census->add_option("--n", range_n, "n range");
    census->add_option("--k", range_k, "k range");
    census->add_option("--out", census_out, "output path")->required();
    census->add_option("--format", census_format, "csv|jsonl")->capture_default_str();

    auto* identity = app.add_subcommand("identity", "check a catalog polynomial on a ring");
    identity->fallthrough();
    std::string poly_name, id_mode = "exhaustive";
    std::uint64_t trials = 1000;
    std::int64_t seed = -1;
    AlgebraFlags identity_flags;
    identity->add_option("polynomial", poly_name, "st2|st4|st6|st8|nilpN|snilpN|solvN|ssolvN")
        ->required();
    identity_flags.add_to(identity);
    identity->add_option("--mode", id_mode, "exhaustive|sample")->capture_default_str();
    identity->add_option("--trials", trials, "samples in sample mode")->capture_default_str();
    identity->add_option("--seed", seed, "explicit seed (required in sample mode)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*analyze) {
            auto t0 = std::chrono::steady_clock::now();
            json rep = analyze_report(analyze_flags.resolve(), budget);
            auto t1 = std::chrono::steady_clock::now();
            rep["wall_time_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
            std::cout << rep.dump(2) << "\n";
            return 0;
        }
        if (*verify) {
            std::vector<std::string> names =
                suite == "all" ? kAllSuites : std::vector<std::string>{suite};
            json results = json::array();
            bool pass = true;
            for (const auto& name : names) {
                json r = run_suite(name, budget);
                pass = pass && r["pass"].get<bool>();
                results.push_back(std::move(r));
            }
            if (verify_format == "json") {
                std::cout << json{{"engine_version", kEngineVersion},
                                  {"pass", pass},
                                  {"suites", results}}
                                 .dump(2)
                          << "\n";
            } else {
                for (const auto& r : results) {
                    std::cout << (r["pass"].get<bool>() ? "PASS " : "FAIL ")
                              << r["suite"].get<std::string>() << "\n";
                    for (const auto& c : r["checks"]) {
                        std::cout << "  " << (c["pass"].get<bool>() ? "ok   " : "FAIL ")
                                  << c["check"].get<std::string>() << "\n";
                        if (!c["pass"].get<bool>() && c.contains("detail"))
                            std::cout << "       " << c["detail"].dump() << "\n";
                    }
                }
            }
            return pass ? 0 : 1;
        }
        if (*census) {
            std::vector<long> primes = parse_range(prime_list);
            std::string param_key;
            std::vector<long> param_values;
            if (!range_m.empty()) { param_key = "m"; param_values = parse_range(range_m); }
            if (!range_n.empty()) { param_key = "n"; param_values = parse_range(range_n); }
            if (!range_k.empty()) { param_key = "k"; param_values = parse_range(range_k); }
            if (param_values.empty()) param_values.push_back(-1); // parameterless family
            std::vector<json> rows;
            for (long v : param_values)
                for (long p : primes) {
                    std::map<std::string, long> params;
                    std::string params_text;
                    if (v >= 0) {
                        params[param_key] = v;
                        params_text = param_key + "=" + std::to_string(v);
                    }
                    AlgebraSpec spec = fam(census_family, params,
                                           static_cast<std::uint32_t>(p),
                                           census_family == "hamiltonian" ? "hamiltonian" : "s");
                    rows.push_back(census_row(census_family, params_text, spec, budget));
                }
            std::ofstream out(census_out);
            if (!out) throw ParseError("cannot write census output: " + census_out);
            const char* columns[] = {"family", "params", "p", "dim", "strong_class",
                                     "lie_class", "solv_len", "strong_solv_len",
                                     "formula", "lower_bound", "status"};
            if (census_format == "jsonl") {
                out << json{{"schema", 1}, {"engine_version", kEngineVersion}}.dump() << "\n";
                for (const auto& row : rows) out << row.dump() << "\n";
            } else if (census_format == "csv") {
                out << "# " << kEngineVersion << "\n";
                out << "family,params,p,dim,strong_class,lie_class,solv_len,"
                       "strong_solv_len,formula,lower_bound,status\n";
                for (const auto& row : rows) {
                    for (std::size_t i = 0; i < std::size(columns); ++i)
                        out << (i ? "," : "") << csv_field(row[columns[i]]);
                    out << "\n";
                }
            } else {
                throw ParseError("unknown census format: " + census_format);
            }
            return 0;
        }
        if (*identity) {
            auto poly = catalog_lookup(poly_name);
            if (!poly) throw ParseError("polynomial not in catalog: " + poly_name);
            auto R = identity_flags.resolve().construct(budget);
            IdentityVerdict verdict;
            if (id_mode == "sample") {
                if (seed < 0) throw ParseError("sample mode requires an explicit --seed");
                verdict = sample_multilinear(*R, *poly, trials,
                                             static_cast<std::uint64_t>(seed));
            } else if (id_mode == "exhaustive") {
                verdict = satisfies_multilinear(*R, *poly);
            } else {
                throw ParseError("unknown mode: " + id_mode);
            }
            json rep{{"engine_version", kEngineVersion},
                     {"polynomial", poly->name},
                     {"arity", poly->arity},
                     {"verdict", to_json(verdict, R.get())}};
            std::cout << rep.dump(2) << "\n";
            return verdict.satisfied ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return 2;
}
