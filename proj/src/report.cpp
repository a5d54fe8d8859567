#include "psalg/report.hpp"

#include <fstream>

using nlohmann::json;

namespace psalg {

namespace {

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) { known = true; break; }
        if (!known) throw ParseError(where + ": unknown key \"" + it.key() + "\"");
    }
}

long get_int(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key)) throw ParseError(where + ": missing key \"" + key + "\"");
    if (!j[key].is_number_integer()) throw ParseError(where + ": \"" + key + "\" must be an integer");
    return j[key].get<long>();
}

} // namespace

AlgebraSpec parse_algebra_spec(const json& j) {
    check_keys(j, {"schema", "p", "family", "params", "type", "dim", "labels",
                   "brackets", "construct"},
               "algebra spec");
    if (get_int(j, "schema", "algebra spec") != 1)
        throw ParseError("algebra spec: unsupported schema version");
    AlgebraSpec spec;
    long p = get_int(j, "p", "algebra spec");
    if (p < 2) throw ParseError("algebra spec: p must be a prime >= 2");
    spec.p = static_cast<std::uint32_t>(p);

    const bool family_form = j.contains("family");
    const bool table_form = j.contains("type");
    if (family_form == table_form)
        throw ParseError("algebra spec: give exactly one of \"family\" or \"type\"");

    if (family_form) {
        if (!j["family"].is_string()) throw ParseError("algebra spec: \"family\" must be a string");
        spec.family = j["family"].get<std::string>();
        if (j.contains("params")) {
            if (!j["params"].is_object()) throw ParseError("algebra spec: \"params\" must be an object");
            for (auto it = j["params"].begin(); it != j["params"].end(); ++it) {
                if (!it.value().is_number_integer())
                    throw ParseError("algebra spec: parameter \"" + it.key() + "\" must be an integer");
                spec.params[it.key()] = it.value().get<long>();
            }
        }
        for (const char* k : {"dim", "labels", "brackets"})
            if (j.contains(k))
                throw ParseError(std::string("algebra spec: \"") + k + "\" not allowed with \"family\"");
    } else {
        if (j["type"] != "lie") throw ParseError("algebra spec: \"type\" must be \"lie\"");
        long d = get_int(j, "dim", "algebra spec");
        if (d < 0) throw ParseError("algebra spec: dim must be >= 0");
        spec.dim = static_cast<std::size_t>(d);
        if (j.contains("labels")) {
            if (!j["labels"].is_array()) throw ParseError("algebra spec: \"labels\" must be an array");
            for (const auto& l : j["labels"]) {
                if (!l.is_string()) throw ParseError("algebra spec: labels must be strings");
                spec.labels.push_back(l.get<std::string>());
            }
        }
        if (j.contains("brackets")) {
            if (!j["brackets"].is_array()) throw ParseError("algebra spec: \"brackets\" must be an array");
            for (const auto& b : j["brackets"]) {
                check_keys(b, {"i", "j", "value"}, "bracket entry");
                BracketEntry e;
                e.i = static_cast<int>(get_int(b, "i", "bracket entry"));
                e.j = static_cast<int>(get_int(b, "j", "bracket entry"));
                if (!b.contains("value") || !b["value"].is_array())
                    throw ParseError("bracket entry: \"value\" must be an array");
                for (const auto& t : b["value"]) {
                    check_keys(t, {"k", "c"}, "bracket term");
                    e.value.emplace_back(static_cast<int>(get_int(t, "k", "bracket term")),
                                         get_int(t, "c", "bracket term"));
                }
                spec.brackets.push_back(std::move(e));
            }
        }
        if (j.contains("params"))
            throw ParseError("algebra spec: \"params\" not allowed with \"type\"");
    }

    if (j.contains("construct")) {
        const json& c = j["construct"];
        check_keys(c, {"kind", "D"}, "construct");
        if (!c.contains("kind") || !c["kind"].is_string())
            throw ParseError("construct: missing \"kind\"");
        spec.construct_kind = c["kind"].get<std::string>();
        if (spec.construct_kind == "S_degree") {
            long D = get_int(c, "D", "construct");
            if (D < 0) throw ParseError("construct: D must be >= 0");
            spec.degree_cap = static_cast<std::uint32_t>(D);
        } else if (spec.construct_kind == "s" || spec.construct_kind == "hamiltonian") {
            if (c.contains("D")) throw ParseError("construct: \"D\" only valid for S_degree");
        } else {
            throw ParseError("construct: unknown kind \"" + spec.construct_kind + "\"");
        }
    } else if (spec.family && *spec.family == "hamiltonian") {
        spec.construct_kind = "hamiltonian";
    }
    if (spec.family && *spec.family == "hamiltonian" && spec.construct_kind != "hamiltonian")
        throw ParseError("algebra spec: family \"hamiltonian\" requires the hamiltonian construction");
    if (spec.construct_kind == "hamiltonian" && !(spec.family && *spec.family == "hamiltonian"))
        throw ParseError("construct: hamiltonian kind requires family \"hamiltonian\"");
    return spec;
}

AlgebraSpec parse_algebra_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open algebra file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return parse_algebra_spec(j);
}

std::optional<LieAlgebra> AlgebraSpec::lie_algebra() const {
    if (family) {
        if (*family == "hamiltonian") return std::nullopt;
        return make_named(*family, params, PrimeModulus(p));
    }
    return LieAlgebra::build(PrimeModulus(p), *dim, labels, brackets);
}

Ring AlgebraSpec::construct(std::size_t budget) const {
    if (construct_kind == "hamiltonian") {
        auto it = params.find("m");
        if (it == params.end() || it->second < 1)
            throw ParseError("hamiltonian construction needs parameter m >= 1");
        return PoissonRing::truncated_hamiltonian(static_cast<std::size_t>(it->second),
                                                  PrimeModulus(p), budget);
    }
    auto L = lie_algebra();
    if (construct_kind == "S_degree")
        return PoissonRing::degree_truncated_symmetric(*L, degree_cap, budget);
    return PoissonRing::truncated_symmetric(*L, budget);
}

json AlgebraSpec::echo() const {
    json j;
    j["schema"] = 1;
    j["p"] = p;
    if (family) {
        j["family"] = *family;
        json pj = json::object();
        for (const auto& [k, v] : params) pj[k] = v;
        j["params"] = pj;
    } else {
        j["type"] = "lie";
        j["dim"] = *dim;
        if (!labels.empty()) j["labels"] = labels;
        json br = json::array();
        for (const auto& b : brackets) {
            json terms = json::array();
            for (auto [k, c] : b.value) terms.push_back({{"k", k}, {"c", c}});
            br.push_back({{"i", b.i}, {"j", b.j}, {"value", terms}});
        }
        j["brackets"] = br;
    }
    json c;
    c["kind"] = construct_kind;
    if (construct_kind == "S_degree") c["D"] = degree_cap;
    j["construct"] = c;
    return j;
}

json to_json(const SeriesReport& r) {
    json j;
    j["kind"] = r.kind;
    j["dims"] = r.dims;
    json v;
    if (r.terminated) {
        v["type"] = "terminates";
        v["class_or_length"] = r.class_or_length;
    } else {
        v["type"] = "stabilizes_nonzero";
        v["stable_dim"] = r.stable_dim;
    }
    j["verdict"] = v;
    return j;
}

json to_json(const ClassBounds& b) {
    json j;
    j["strong_class"] = b.strong_class;
    if (b.lower_bound)
        j["lower_bound"] = *b.lower_bound;
    else
        j["lower_bound"] = nullptr;
    return j;
}

json to_json(const IdentityVerdict& v, const PoissonRing* R) {
    json j;
    j["satisfied"] = v.satisfied;
    j["sampled"] = v.sampled;
    j["cases"] = v.cases;
    if (v.counterexample) {
        json cex = json::array();
        for (auto idx : *v.counterexample)
            cex.push_back(R ? json(R->render_monomial(idx)) : json(idx));
        j["counterexample"] = cex;
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

json analyze_report(const AlgebraSpec& spec, std::size_t budget) {
    json j;
    j["schema"] = 1;
    j["engine_version"] = kEngineVersion;
    j["algebra"] = spec.echo();
    Ring R = spec.construct(budget);
    j["ring"] = {{"p", R->p()}, {"dim", R->dim()}, {"generators", R->generators()}};

    SeriesReport gamma = gamma_series(*R);
    SeriesReport upper = upper_lie_powers(*R);
    SeriesReport derived = derived_series(*R);
    SeriesReport upper_derived = upper_derived_series(*R);
    j["series"] = {{"gamma", to_json(gamma)},
                   {"upper_lie", to_json(upper)},
                   {"derived", to_json(derived)},
                   {"upper_derived", to_json(upper_derived)}};

    auto verdict = [](const SeriesReport& r) -> json {
        return r.terminated ? json(r.class_or_length) : json(nullptr);
    };
    j["classes"] = {{"lie_class", verdict(gamma)},
                    {"strong_class", verdict(upper)},
                    {"solv_length", verdict(derived)},
                    {"strong_solv_length", verdict(upper_derived)},
                    {"lie_nilpotent", gamma.terminated},
                    {"strongly_nilpotent", upper.terminated},
                    {"solvable", derived.terminated},
                    {"strongly_solvable", upper_derived.terminated}};

    auto L = spec.lie_algebra();
    if (L) {
        auto lie_gamma = L->lower_central_series();
        j["lie_algebra"] = {{"dim", L->dim()},
                            {"gamma_dims", lie_gamma.dims},
                            {"nilpotent", lie_gamma.terminated}};
        if (lie_gamma.terminated) {
            j["formula"] = to_json(predicted_class_bounds(*L));
            std::size_t cap = upper.dims.size() - 1;
            json subs = json::array();
            for (const auto& e : dimension_subalgebras(*R, cap))
                subs.push_back({{"n", e.n}, {"dim", e.space.dim()}, {"equals_gamma", e.equals_gamma}});
            j["dimension_subalgebras"] = subs;
        }
    }
    return j;
}

} // namespace psalg
