#pragma once

// Scenario files, analysis reports and their JSON forms.  Both carry
// "schema_version": 1.

#include "minpair/verifier.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace minpair {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct MinimalitySpec {
    MinimalityMode mode = MinimalityMode::Auto;
    std::vector<json> candidates;  // base elements, or {"Q": [...], "label": ...}
};

struct PartnerSpec {
    std::string label;
    std::vector<json> Q;
    MinimalitySpec minimality;
};

struct SubfieldSpec {
    std::vector<json> b_expr;
    std::vector<json> Qb;
};

struct Scenario {
    std::string id;
    std::string description;
    BaseKind base = BaseKind::Qp;
    std::uint64_t p = 2;
    std::vector<json> Q;
    OrderedValue gamma;
    MinimalitySpec minimality;
    std::vector<PartnerSpec> equivalent;
    std::optional<SubfieldSpec> subfield;
    json expect = json::object();
};

struct ResidueFunction {
    // coefficients low degree first, each an element of F_{p^f} as its
    // coefficient list in y
    std::vector<std::vector<long>> num, den;
    friend bool operator==(const ResidueFunction&, const ResidueFunction&) = default;
};

struct DistanceEntry {
    std::string value;
    long mult = 0;
    friend bool operator==(const DistanceEntry&, const DistanceEntry&) = default;
};

struct AnalysisReport {
    int schema_version = kSchemaVersion;
    std::string id;
    std::string base;
    long p = 0;
    std::string Q;
    std::string gamma;
    std::string minimality;
    std::string minimality_detail;
    long n = 0;
    long e_a = 0;
    long f_a = 0;
    bool inseparable = false;
    std::vector<DistanceEntry> distances;
    std::optional<std::string> kras;
    long j = 0;
    std::string vQ;
    std::string alpha;
    std::optional<long> e;
    std::optional<long> E;
    long lambda = 0;
    std::optional<long> residue_degree;
    std::string t_def;
    std::optional<ResidueFunction> s_as_function_of_t;
    long ic_degree = 0;
    std::string ic_classification;
    std::vector<Verdict> verdicts;
    std::vector<std::string> warnings;

    bool has_fail() const {
        return std::any_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.status == Status::Fail; });
    }
    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

// ---------------------------------------------------------------------------
// parsing helpers

namespace detail {

inline std::string scalar_text(const json& j, const std::string& what) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw Error(ErrorKind::Parse, what + ": expected a number or a string, got " + j.dump());
}

inline Rational parse_rational_json(const json& j, const std::string& what) {
    try {
        return parse_rational(scalar_text(j, what));
    } catch (const Error& e) {
        throw Error(ErrorKind::Parse, what + ": " + e.what());
    }
}

inline OrderedValue parse_value(const json& j, const std::string& what) {
    if (j.is_array()) {
        std::vector<Rational> c;
        for (const auto& x : j) c.push_back(parse_rational_json(x, what));
        if (c.size() != 1 && c.size() != 2) throw Error(ErrorKind::Parse, what + ": value must have 1 or 2 coordinates");
        return OrderedValue(std::move(c));
    }
    return OrderedValue(parse_rational_json(j, what));
}

inline MinimalityMode parse_mode(const std::string& s) {
    if (s == "auto") return MinimalityMode::Auto;
    if (s == "krasner") return MinimalityMode::Krasner;
    if (s == "bruteforce") return MinimalityMode::BruteForce;
    if (s == "assert") return MinimalityMode::Assert;
    throw Error(ErrorKind::Parse, "minimality mode must be auto, krasner, bruteforce or assert, got '" + s + "'");
}

inline const char* mode_name(MinimalityMode m) {
    switch (m) {
        case MinimalityMode::Auto: return "auto";
        case MinimalityMode::Krasner: return "krasner";
        case MinimalityMode::BruteForce: return "bruteforce";
        case MinimalityMode::Assert: return "assert";
    }
    return "?";
}

inline std::vector<json> parse_coeff_list(const json& j, const std::string& what) {
    if (!j.is_array()) throw Error(ErrorKind::Parse, what + " must be a coefficient list");
    return std::vector<json>(j.begin(), j.end());
}

inline MinimalitySpec parse_minimality(const json& j) {
    MinimalitySpec m;
    if (j.is_null()) return m;
    if (!j.is_object()) throw Error(ErrorKind::Parse, "minimality must be an object");
    m.mode = parse_mode(j.value("mode", std::string("auto")));
    if (j.contains("candidates")) m.candidates = parse_coeff_list(j.at("candidates"), "minimality.candidates");
    return m;
}

inline json minimality_json(const MinimalitySpec& m) {
    json out{{"mode", mode_name(m.mode)}};
    if (!m.candidates.empty()) out["candidates"] = m.candidates;
    return out;
}

/// Coefficient of K from JSON.  Qp: "a/b" or an integer.  Fpt: an integer
/// (constant), a list (polynomial in t, low degree first), or
/// {"num": [...], "den": [...]}.
template <BaseField B>
typename B::elem parse_coeff(const B& base, const json& j, const std::string& what);

template <>
inline Rational parse_coeff(const PAdicRationals&, const json& j, const std::string& what) {
    return parse_rational_json(j, what);
}

template <>
inline RationalFunction<Fp> parse_coeff(const TAdicFunctionField& base, const json& j, const std::string& what) {
    auto poly = [&](const json& a) {
        if (!a.is_array()) throw Error(ErrorKind::Parse, what + ": expected a list of integers");
        std::vector<long long> c;
        for (const auto& x : a) {
            Integer z = parse_integer(scalar_text(x, what));
            Integer r = z % Integer(base.p());
            if (r < 0) r += Integer(base.p());
            c.push_back(to_ll(r));
        }
        return fp_poly(c, base.p());
    };
    if (j.is_object()) {
        auto den = poly(j.at("den"));
        if (den.is_zero()) throw Error(ErrorKind::Parse, what + ": zero denominator");
        return RationalFunction<Fp>(poly(j.at("num")), den);
    }
    if (j.is_array()) return RationalFunction<Fp>(poly(j));
    return RationalFunction<Fp>(poly(json::array({j})));
}

template <BaseField B>
Poly<typename B::elem> parse_poly(const B& base, const std::vector<json>& coeffs, const std::string& what) {
    std::vector<typename B::elem> c;
    for (std::size_t i = 0; i < coeffs.size(); ++i) c.push_back(parse_coeff(base, coeffs[i], what + "[" + std::to_string(i) + "]"));
    return Poly<typename B::elem>(std::move(c), base.zero());
}

}  // namespace detail

inline Scenario parse_scenario(const json& j) {
    if (!j.is_object()) throw Error(ErrorKind::Parse, "scenario must be a JSON object");
    if (j.value("schema_version", kSchemaVersion) != kSchemaVersion) throw Error(ErrorKind::Parse, "unsupported schema_version");
    Scenario s;
    try {
        s.id = j.at("id").get<std::string>();
        s.description = j.value("description", std::string());
        const auto base = j.at("base").get<std::string>();
        if (base == "Qp") s.base = BaseKind::Qp;
        else if (base == "Fpt") s.base = BaseKind::Fpt;
        else throw Error(ErrorKind::Parse, "base must be Qp or Fpt, got '" + base + "'");
        const auto p = j.at("p").get<long long>();
        if (!is_prime(p)) throw Error(ErrorKind::Parse, "p = " + std::to_string(p) + " is not prime");
        s.p = static_cast<std::uint64_t>(p);
        s.Q = detail::parse_coeff_list(j.at("Q"), "Q");
        s.gamma = detail::parse_value(j.at("gamma"), "gamma");
        s.minimality = detail::parse_minimality(j.value("minimality", json()));
        for (const auto& e : j.value("equivalent", json::array())) {
            PartnerSpec ps;
            ps.label = e.value("label", std::string("a'"));
            ps.Q = detail::parse_coeff_list(e.at("Q"), "equivalent.Q");
            ps.minimality = detail::parse_minimality(e.value("minimality", json()));
            s.equivalent.push_back(std::move(ps));
        }
        if (j.contains("subfield")) {
            const auto& sf = j.at("subfield");
            s.subfield = SubfieldSpec{detail::parse_coeff_list(sf.at("b_expr"), "subfield.b_expr"),
                                      detail::parse_coeff_list(sf.at("Qb"), "subfield.Qb")};
        }
        if (j.contains("expect")) s.expect = j.at("expect");
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("scenario ") + (s.id.empty() ? "" : s.id + " ") + e.what());
    }
    return s;
}

inline json scenario_to_json(const Scenario& s) {
    json j{{"schema_version", kSchemaVersion}, {"id", s.id}};
    if (!s.description.empty()) j["description"] = s.description;
    j["base"] = s.base == BaseKind::Qp ? "Qp" : "Fpt";
    j["p"] = s.p;
    j["Q"] = s.Q;
    if (s.gamma.rank() == 1) j["gamma"] = format_rational(s.gamma[0]);
    else j["gamma"] = json::array({format_rational(s.gamma[0]), format_rational(s.gamma[1])});
    j["minimality"] = detail::minimality_json(s.minimality);
    if (!s.equivalent.empty()) {
        json eq = json::array();
        for (const auto& e : s.equivalent) eq.push_back({{"label", e.label}, {"Q", e.Q}, {"minimality", detail::minimality_json(e.minimality)}});
        j["equivalent"] = eq;
    }
    if (s.subfield) j["subfield"] = {{"b_expr", s.subfield->b_expr}, {"Qb", s.subfield->Qb}};
    if (!s.expect.empty()) j["expect"] = s.expect;
    return j;
}

inline Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
    }
    return parse_scenario(j);
}

// ---------------------------------------------------------------------------
// analysis

namespace detail {

template <BaseField B>
std::optional<std::vector<Candidate<B>>> parse_candidates(const B& base, const MinimalitySpec& m) {
    if (m.candidates.empty()) return std::nullopt;
    std::vector<Candidate<B>> out;
    for (std::size_t i = 0; i < m.candidates.size(); ++i) {
        const auto& c = m.candidates[i];
        const std::string what = "candidate[" + std::to_string(i) + "]";
        if (c.is_object() && c.contains("Q")) {
            auto Q = parse_poly(base, parse_coeff_list(c.at("Q"), what), what);
            out.push_back({std::move(Q), c.value("label", what)});
        } else {
            out.push_back(base_candidate(base, parse_coeff(base, c, what), c.is_string() ? c.get<std::string>() : c.dump()));
        }
    }
    return out;
}

inline ResidueFunction residue_function(const GradedResidue& s) {
    auto conv = [](const Poly<Fq>& p) {
        std::vector<std::vector<long>> out;
        for (const auto& c : p.coeffs()) {
            std::vector<long> v;
            for (const auto& x : c.rep().coeffs()) v.push_back(static_cast<long>(x.value()));
            out.push_back(std::move(v));
        }
        return out;
    };
    return {conv(s.value.num()), conv(s.value.den())};
}

}  // namespace detail

/// The certified pair a scenario describes.
template <BaseField B>
MinimalPair<B> scenario_pair(const B& base, const Scenario& sc) {
    auto a = std::make_shared<const AlgebraicElement<B>>(certify(base, detail::parse_poly(base, sc.Q, "Q")));
    return make_minimal_pair(a, sc.gamma, sc.minimality.mode, detail::parse_candidates(base, sc.minimality));
}

/// Calls f with the concrete base field of the scenario.
template <class F>
decltype(auto) visit_base(const Scenario& sc, F&& f) {
    if (sc.base == BaseKind::Qp) return std::forward<F>(f)(PAdicRationals(sc.p));
    return std::forward<F>(f)(TAdicFunctionField(sc.p));
}

template <BaseField B>
AnalysisReport analyze_with(const B& base, const Scenario& sc) {
    AnalysisReport r;
    r.id = sc.id;
    r.base = base.name();
    r.p = static_cast<long>(base.p());
    r.Q = detail::parse_poly(base, sc.Q, "Q").str();
    r.gamma = sc.gamma.str();

    auto pair = scenario_pair(base, sc);
    const auto& a = pair.a;
    r.minimality = to_string(*pair.certificate.kind);
    r.minimality_detail = pair.certificate.detail;
    for (const auto& w : pair.certificate.warnings) r.warnings.push_back(w);
    if (*pair.certificate.kind == CertKind::UserAsserted) r.warnings.push_back("minimality asserted, not certified");

    const auto& cert = a->certificate();
    r.n = a->degree();
    r.e_a = cert.e;
    r.f_a = cert.f;
    r.inseparable = cert.inseparable;
    for (const auto& d : a->distances()) r.distances.push_back({d.value.str(), d.mult});
    if (auto k = kras(*a)) r.kras = k->str();

    GaussValuation<B> gv(pair);
    r.j = compute_j(pair);
    r.vQ = gv.vQ().str();
    r.alpha = gv.alpha().str();
    r.e = gv.e();
    r.E = gv.E();
    r.lambda = gv.lambda();
    r.t_def = gv.t_definition();
    try {
        r.residue_degree = gv.residue_degree();
        if (gv.rank() == 1) r.s_as_function_of_t = detail::residue_function(gv.s());
    } catch (const Error& e) {
        r.warnings.push_back(std::string("residue degree unavailable: ") + e.what());
    }

    IcReport ic = ic_degree_report(gv);
    r.ic_degree = ic.degree;
    r.ic_classification = ic.classification;

    r.verdicts.push_back(verify_thm_1_1(gv));
    if (sc.equivalent.empty()) r.verdicts.push_back(skipped("thm_1_2", "no equivalent pair supplied"));
    for (const auto& ps : sc.equivalent) {
        try {
            auto b = std::make_shared<const AlgebraicElement<B>>(certify(base, detail::parse_poly(base, ps.Q, "equivalent.Q")));
            auto p2 = make_minimal_pair(b, sc.gamma, ps.minimality.mode, detail::parse_candidates(base, ps.minimality));
            r.verdicts.push_back(verify_thm_1_2(pair, p2, ps.label));
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Parse) throw;
            r.verdicts.push_back(skipped("thm_1_2", ps.label + ": " + e.what()));
        }
    }
    r.verdicts.push_back(verify_lift(pair));
    r.verdicts.push_back(verify_eq_7(gv, ic));
    if (sc.subfield) {
        r.verdicts.push_back(verify_thm_1_3(gv, ic, detail::parse_poly(base, sc.subfield->b_expr, "subfield.b_expr"),
                                            detail::parse_poly(base, sc.subfield->Qb, "subfield.Qb")));
    } else {
        r.verdicts.push_back(skipped("thm_1_3_sandwich", "no tame subfield supplied"));
    }
    r.verdicts.push_back(verify_necessary_j1(gv, ic));
    return r;
}

inline AnalysisReport analyze(const Scenario& sc) {
    return visit_base(sc, [&](const auto& base) { return analyze_with(base, sc); });
}

// ---------------------------------------------------------------------------
// report JSON

inline json report_to_json(const AnalysisReport& r) {
    auto opt = [](const auto& o) { return o ? json(*o) : json(nullptr); };
    json dist = json::array();
    for (const auto& d : r.distances) dist.push_back({{"value", d.value}, {"mult", d.mult}});
    json verdicts = json::array();
    for (const auto& v : r.verdicts) verdicts.push_back({{"name", v.name}, {"status", to_string(v.status)}, {"details", v.details}});
    json s = nullptr;
    if (r.s_as_function_of_t) s = {{"num", r.s_as_function_of_t->num}, {"den", r.s_as_function_of_t->den}};
    return json{{"schema_version", r.schema_version},
                {"id", r.id},
                {"base", r.base},
                {"p", r.p},
                {"Q", r.Q},
                {"gamma", r.gamma},
                {"minimality", r.minimality},
                {"minimality_detail", r.minimality_detail},
                {"n", r.n},
                {"e_a", r.e_a},
                {"f_a", r.f_a},
                {"inseparable", r.inseparable},
                {"distances", dist},
                {"kras", opt(r.kras)},
                {"j", r.j},
                {"vQ", r.vQ},
                {"alpha", r.alpha},
                {"e", opt(r.e)},
                {"E", opt(r.E)},
                {"lambda", r.lambda},
                {"residue_degree", opt(r.residue_degree)},
                {"t_def", r.t_def},
                {"s_as_function_of_t", s},
                {"ic_degree", r.ic_degree},
                {"ic_classification", r.ic_classification},
                {"verdicts", verdicts},
                {"warnings", r.warnings}};
}

inline AnalysisReport report_from_json(const json& j) {
    AnalysisReport r;
    try {
        auto opt_long = [&](const char* k) { return j.at(k).is_null() ? std::nullopt : std::optional<long>(j.at(k).get<long>()); };
        r.schema_version = j.at("schema_version").get<int>();
        r.id = j.at("id").get<std::string>();
        r.base = j.at("base").get<std::string>();
        r.p = j.at("p").get<long>();
        r.Q = j.at("Q").get<std::string>();
        r.gamma = j.at("gamma").get<std::string>();
        r.minimality = j.at("minimality").get<std::string>();
        r.minimality_detail = j.at("minimality_detail").get<std::string>();
        r.n = j.at("n").get<long>();
        r.e_a = j.at("e_a").get<long>();
        r.f_a = j.at("f_a").get<long>();
        r.inseparable = j.at("inseparable").get<bool>();
        for (const auto& d : j.at("distances")) r.distances.push_back({d.at("value").get<std::string>(), d.at("mult").get<long>()});
        if (!j.at("kras").is_null()) r.kras = j.at("kras").get<std::string>();
        r.j = j.at("j").get<long>();
        r.vQ = j.at("vQ").get<std::string>();
        r.alpha = j.at("alpha").get<std::string>();
        r.e = opt_long("e");
        r.E = opt_long("E");
        r.lambda = j.at("lambda").get<long>();
        r.residue_degree = opt_long("residue_degree");
        r.t_def = j.at("t_def").get<std::string>();
        if (!j.at("s_as_function_of_t").is_null()) {
            const auto& s = j.at("s_as_function_of_t");
            r.s_as_function_of_t = ResidueFunction{s.at("num").get<std::vector<std::vector<long>>>(),
                                                   s.at("den").get<std::vector<std::vector<long>>>()};
        }
        r.ic_degree = j.at("ic_degree").get<long>();
        r.ic_classification = j.at("ic_classification").get<std::string>();
        for (const auto& v : j.at("verdicts"))
            r.verdicts.push_back({v.at("name").get<std::string>(), parse_status(v.at("status").get<std::string>()),
                                  v.at("details").get<std::string>()});
        r.warnings = j.at("warnings").get<std::vector<std::string>>();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("report: ") + e.what());
    }
    return r;
}

// ---------------------------------------------------------------------------
// expectations and the bundled suite

/// Differences between a report and the scenario's "expect" block.  Verdicts
/// not listed there must not FAIL.
inline std::vector<std::string> check_expectations(const Scenario& sc, const AnalysisReport& r, const std::string& filter = {}) {
    std::vector<std::string> out;
    const json& ex = sc.expect;
    auto num = [&](const char* key, std::optional<long> got) {
        if (!ex.contains(key) || !filter.empty()) return;
        const auto& want = ex.at(key);
        if (want.is_null() ? got.has_value() : (!got || want.get<long>() != *got))
            out.push_back(std::string(key) + ": expected " + want.dump() + ", got " + (got ? std::to_string(*got) : "null"));
    };
    auto str = [&](const char* key, const std::optional<std::string>& got) {
        if (!ex.contains(key) || !filter.empty()) return;
        const auto& want = ex.at(key);
        if (want.is_null() ? got.has_value() : (!got || want.get<std::string>() != *got))
            out.push_back(std::string(key) + ": expected " + want.dump() + ", got " + (got ? *got : "null"));
    };
    num("n", r.n);
    num("e_a", r.e_a);
    num("f_a", r.f_a);
    num("j", r.j);
    num("lambda", r.lambda);
    num("residue_degree", r.residue_degree);
    num("e", r.e);
    num("E", r.E);
    num("ic_degree", r.ic_degree);
    str("ic_classification", r.ic_classification);
    str("vQ", r.vQ);
    str("alpha", r.alpha);
    str("kras", r.kras);
    str("minimality", r.minimality);
    if (ex.contains("s_as_function_of_t") && filter.empty()) {
        json got = r.s_as_function_of_t ? json{{"num", r.s_as_function_of_t->num}, {"den", r.s_as_function_of_t->den}} : json(nullptr);
        if (got != ex.at("s_as_function_of_t"))
            out.push_back("s_as_function_of_t: expected " + ex.at("s_as_function_of_t").dump() + ", got " + got.dump());
    }
    const json verdicts = ex.value("verdicts", json::object());
    for (const auto& v : r.verdicts) {
        if (!filter.empty() && v.name != filter) continue;
        if (verdicts.contains(v.name)) {
            const auto want = parse_status(verdicts.at(v.name).get<std::string>());
            if (want != v.status)
                out.push_back(v.name + ": expected " + to_string(want) + ", got " + to_string(v.status) + " (" + v.details + ")");
        } else if (v.status == Status::Fail) {
            out.push_back(v.name + ": FAIL (" + v.details + ")");
        }
    }
    return out;
}

inline std::vector<std::filesystem::path> scenario_files(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw Error(ErrorKind::Parse, "scenario directory " + dir.string() + " not found");
    std::vector<std::filesystem::path> out;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace minpair
