// Copyright 2026 The homavg Authors
// SPDX-License-Identifier: Apache-2.0

#include "homavg/json_io.hpp"

#include <charconv>

#include "homavg/error.hpp"

namespace homavg {

namespace {

[[noreturn]] void schema(const std::string& what)
{
    throw InvalidParameter("schema: " + what);
}

long parse_long(std::string_view s, const std::string& what)
{
    long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) {
        schema(what + " must be an integer, got '" + std::string(s) + "'");
    }
    return v;
}

const Json& need(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        schema(std::string("missing key '") + key + "'");
    }
    return j.at(key);
}

long get_long(const Json& j, const char* key, std::optional<long> fallback = std::nullopt)
{
    if (!j.contains(key)) {
        if (fallback) {
            return *fallback;
        }
        need(j, key);
    }
    const Json& v = j.at(key);
    if (!v.is_number_integer()) {
        schema(std::string("'") + key + "' must be an integer");
    }
    return v.get<long>();
}

std::string get_string(const Json& j, const char* key)
{
    const Json& v = need(j, key);
    if (!v.is_string()) {
        schema(std::string("'") + key + "' must be a string");
    }
    return v.get<std::string>();
}

/// Scalars are strings in the field's expression syntax; integers are accepted too.
Scalar scalar_at(const Json& j, const char* key, const ScalarField& f, const Scalar& fallback)
{
    if (!j.contains(key)) {
        return fallback;
    }
    const Json& v = j.at(key);
    if (v.is_string()) {
        return f.parse(v.get<std::string>());
    }
    if (v.is_number_integer()) {
        return f.from_long(v.get<long>());
    }
    schema(std::string("'") + key + "' must be a scalar string");
}

OrderedJson string_map(const std::map<std::string, std::string>& m)
{
    OrderedJson out = OrderedJson::object();
    for (const auto& [k, v] : m) {
        out[k] = v;
    }
    return out;
}

std::string table_string(const ProfileSet& ps, std::size_t i)
{
    std::string out;
    for (std::size_t k = 0; k < ps.window_unknowns; ++k) {
        const Scalar& v = ps.space.values[ps.solutions[i][k]];
        if (!v.is_zero()) {
            out += (out.empty() ? "" : ", ") + ps.unknowns[k].name() + " = " + v.to_string();
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace

ScalarField parse_field(std::string_view s)
{
    if (s == "qfunc") {
        return ScalarField::rational_function();
    }
    const auto colon = s.find(':');
    if (colon == std::string_view::npos) {
        schema("field descriptor '" + std::string(s) + "' is not rational:<q>, cyclotomic:<N> or qfunc");
    }
    const std::string_view mode = s.substr(0, colon), arg = s.substr(colon + 1);
    if (mode == "cyclotomic") {
        return ScalarField::cyclotomic(parse_long(arg, "cyclotomic order"));
    }
    if (mode == "rational") {
        const auto slash = arg.find('/');
        const long num = parse_long(arg.substr(0, slash), "rational numerator");
        const long den = slash == std::string_view::npos ? 1 : parse_long(arg.substr(slash + 1), "rational denominator");
        if (den == 0) {
            schema("rational denominator is zero");
        }
        return ScalarField::rational(mpq_class(num, den));
    }
    schema("unknown field mode '" + std::string(mode) + "'");
}

ScalarField field_from_json(const Json& j)
{
    if (j.is_string()) {
        return parse_field(j.get<std::string>());
    }
    const std::string mode = get_string(j, "mode");
    if (mode == "qfunc") {
        return ScalarField::rational_function();
    }
    if (mode == "cyclotomic") {
        return ScalarField::cyclotomic(get_long(j, "N"));
    }
    if (mode == "rational") {
        const Json& q = need(j, "q");
        return parse_field("rational:" + (q.is_string() ? q.get<std::string>() : q.dump()));
    }
    schema("unknown field mode '" + mode + "'");
}

HomAlgebra make_algebra(const std::string& name, const ScalarField& field, long k)
{
    if (name == "witt") {
        return HomAlgebra::witt(field, k);
    }
    if (name == "w22") {
        return HomAlgebra::w22(field, k);
    }
    schema("unknown algebra '" + name + "'");
}

FamilyOperator family_from_json(const Json& j, const ScalarField& f, long verify_window)
{
    const std::string family = get_string(j, "family");
    const Scalar zero = f.zero(), one = f.one();
    if (family == "witt") {
        WittFamilyParams p;
        p.variant = static_cast<int>(get_long(j, "variant"));
        p.d = get_long(j, "d", 0);
        p.beta = scalar_at(j, "beta", f, zero);
        p.nu = scalar_at(j, "nu", f, zero);
        p.gamma = scalar_at(j, "gamma", f, one);
        p.mu = static_cast<int>(get_long(j, "mu", 1));
        return make_witt_family(p, f, verify_window);
    }
    if (family == "w22") {
        W22FamilyParams p;
        p.variant = static_cast<int>(get_long(j, "variant"));
        p.d = get_long(j, "d", 0);
        const Json& kase = need(j, "case");
        if (kase == "root_of_unity" || kase == 1) {
            p.kase = W22FamilyParams::Case::root_of_unity;
        } else if (kase == "degree_zero" || kase == 2) {
            p.kase = W22FamilyParams::Case::degree_zero;
        } else {
            schema("'case' must be root_of_unity or degree_zero");
        }
        p.nu1 = scalar_at(j, "nu1", f, zero);
        p.nu2 = scalar_at(j, "nu2", f, zero);
        p.nu3 = scalar_at(j, "nu3", f, zero);
        p.nu4 = scalar_at(j, "nu4", f, zero);
        p.gamma = scalar_at(j, "gamma", f, zero);
        p.theta = scalar_at(j, "theta", f, zero);
        p.beta = scalar_at(j, "beta", f, p.variant == 5 ? one : zero);
        return make_w22_family(p, f, verify_window);
    }
    schema("unknown family '" + family + "'");
}

OperatorSpec operator_from_json(const Json& j, const ScalarField& f, long verify_window)
{
    const std::string name = get_string(j, "algebra");
    const long degree = get_long(j, "degree", 0);
    const Json& profile = need(j, "profile");
    const std::string kind = get_string(profile, "kind");
    if (kind == "family") {
        Json fam = profile;
        fam["d"] = degree;
        if (!fam.contains("family")) {
            fam["family"] = name;
        }
        FamilyOperator op = family_from_json(fam, f, verify_window);
        if (op.algebra.name() != make_algebra(name, f, 0).name()) {
            schema("family '" + op.id + "' does not act on " + name);
        }
        HomAlgebra alg = j.contains("k") ? make_algebra(name, f, get_long(j, "k")) : op.algebra;
        HomogeneousOperator p = op.op;
        return {std::move(alg), std::move(p), std::move(op)};
    }
    if (kind == "table") {
        const Json& entries = need(profile, "entries");
        if (!entries.is_array()) {
            schema("'entries' must be an array");
        }
        const Scalar zero = f.zero();
        std::map<long, Profile> table;
        for (const Json& e : entries) {
            const long t = get_long(e, "t");
            Profile pr{scalar_at(e, "f1", f, zero), scalar_at(e, "f2", f, zero), scalar_at(e, "g1", f, zero),
                       scalar_at(e, "g2", f, zero)};
            if (name == "witt" && !(pr.f2.is_zero() && pr.g1.is_zero() && pr.g2.is_zero())) {
                schema("witt table entries only carry f1");
            }
            if (!table.emplace(t, pr).second) {
                schema("duplicate table entry t = " + std::to_string(t));
            }
        }
        HomAlgebra alg = make_algebra(name, f, get_long(j, "k", 0));
        HomogeneousOperator p = HomogeneousOperator::table(f, alg.components(), degree, std::move(table), "table");
        return {std::move(alg), std::move(p), std::nullopt};
    }
    schema("profile kind must be family or table");
}

SearchSpace search_from_json(const Json& j)
{
    SearchSpace s{get_string(j, "algebra"), field_from_json(need(j, "field")), get_long(j, "d", 0), 1, {}, {}};
    s.M = get_long(j, "M");
    const Json& values = need(j, "values");
    if (!values.is_array()) {
        schema("'values' must be an array");
    }
    for (const Json& v : values) {
        if (v.is_string()) {
            s.values.push_back(s.field.parse(v.get<std::string>()));
        } else if (v.is_number_integer()) {
            s.values.push_back(s.field.from_long(v.get<long>()));
        } else {
            schema("'values' entries must be scalar strings");
        }
    }
    if (j.contains("ceiling")) {
        if (!j.at("ceiling").is_number()) {
            schema("'ceiling' must be a number");
        }
        s.ceiling = j.at("ceiling").get<double>();
    }
    return s;
}

OrderedJson report_to_json(const Report& r, bool deterministic)
{
    OrderedJson out;
    out["check"] = r.check;
    out["algebra"] = r.algebra;
    out["field"] = r.field;
    out["window"] = r.window;
    out["verdict"] = r.pass ? "pass" : "fail";
    out["instances_checked"] = r.instances;
    out["violations"] = r.violations;
    OrderedJson parts = OrderedJson::object();
    for (const auto& [k, v] : r.part_violations) {
        parts[k] = v;
    }
    out["part_violations"] = parts;
    OrderedJson ws = OrderedJson::array();
    for (const auto& w : r.witnesses) {
        OrderedJson wj;
        static constexpr const char* names[] = {"m", "n", "p"};
        for (std::size_t i = 0; i < w.indices.size() && i < 3; ++i) {
            wj[names[i]] = w.indices[i].to_string();
        }
        wj["part"] = w.part;
        wj["lhs"] = w.lhs.to_string();
        wj["rhs"] = w.rhs.to_string();
        ws.push_back(std::move(wj));
    }
    out["witnesses"] = ws;
    OrderedJson subs = OrderedJson::object();
    for (const auto& [k, v] : r.sub_verdicts) {
        subs[k] = v;
    }
    out["sub_verdicts"] = subs;
    out["facts"] = string_map(r.facts);
    out["notes"] = r.notes;
    OrderedJson kids = OrderedJson::array();
    for (const auto& c : r.children) {
        kids.push_back(report_to_json(c, deterministic));
    }
    out["children"] = kids;
    out["millis"] = deterministic ? 0.0 : r.millis;
    return out;
}

bool classify_pass(const ProfileSet& ps, const CoverageReport& cov)
{
    if (!ps.reverify_failures.empty() || !cov.unmatched_solutions.empty()) {
        return false;
    }
    for (auto i : cov.unmatched_instances) {
        if (cov.instances[i].explanation.empty()) {
            return false;
        }
    }
    return true;
}

OrderedJson classify_to_json(const ProfileSet& ps, const CoverageReport& cov, bool deterministic)
{
    const SearchSpace& s = ps.space;
    OrderedJson out;
    out["check"] = "classify";
    out["algebra"] = s.algebra;
    out["field"] = s.field.describe();
    out["window"] = s.M;
    out["d"] = s.d;
    OrderedJson values = OrderedJson::array();
    for (const auto& v : s.values) {
        values.push_back(v.to_string());
    }
    out["values"] = values;
    out["verdict"] = classify_pass(ps, cov) ? "pass" : "fail";
    out["instances_checked"] = ps.constraints;
    out["raw_size"] = ps.raw_size;
    out["nodes"] = ps.nodes;

    OrderedJson ws = OrderedJson::array();
    for (auto i : ps.reverify_failures) {
        ws.push_back({{"part", "reverify"}, {"solution", i}, {"lhs", table_string(ps, i)}, {"rhs", "not averaging"}});
    }
    for (auto i : cov.unmatched_solutions) {
        ws.push_back({{"part", "unmatched_solution"},
                      {"solution", i},
                      {"lhs", table_string(ps, i)},
                      {"rhs", "no family instance"}});
    }
    for (auto i : cov.unmatched_instances) {
        if (cov.instances[i].explanation.empty()) {
            ws.push_back({{"part", "unexplained_instance"},
                          {"instance", i},
                          {"lhs", cov.instances[i].family},
                          {"rhs", "no solution"}});
        }
    }
    out["witnesses"] = ws;

    OrderedJson names = OrderedJson::array();
    for (std::size_t k = 0; k < ps.window_unknowns; ++k) {
        names.push_back(ps.unknowns[k].name());
    }
    out["window_unknowns"] = names;
    OrderedJson sols = OrderedJson::array();
    for (const auto& sol : ps.solutions) {
        OrderedJson row = OrderedJson::array();
        for (int v : sol) {
            row.push_back(s.values[v].to_string());
        }
        sols.push_back(std::move(row));
    }
    out["solutions"] = sols;
    out["reverify_failures"] = ps.reverify_failures;

    OrderedJson cj;
    OrderedJson insts = OrderedJson::array();
    for (const auto& inst : cov.instances) {
        insts.push_back({{"family", inst.family}, {"params", string_map(inst.params)}, {"explanation", inst.explanation}});
    }
    cj["instances"] = insts;
    OrderedJson matched = OrderedJson::array();
    for (const auto& [sol, is] : cov.matched) {
        matched.push_back({{"solution", sol}, {"instances", is}});
    }
    cj["matched"] = matched;
    cj["unmatched_solutions"] = cov.unmatched_solutions;
    cj["unmatched_instances"] = cov.unmatched_instances;
    cj["out_of_range"] = cov.out_of_range;
    cj["restriction"] = cov.restriction;
    out["coverage"] = cj;
    out["millis"] = deterministic ? 0.0 : ps.millis;
    return out;
}

} // namespace homavg
