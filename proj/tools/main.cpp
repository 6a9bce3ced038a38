// Copyright 2026 The homavg Authors
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "homavg/classify.hpp"
#include "homavg/error.hpp"
#include "homavg/families.hpp"
#include "homavg/identities.hpp"
#include "homavg/json_io.hpp"
#include "homavg/laws.hpp"

using namespace homavg;

namespace {

/// Flat JSON object of option values: {"field":"cyclotomic:3","M":4,"values":["0","1"]}.
/// Arrays become repeated inputs and objects are passed on as JSON text.
class JsonConfig : public CLI::Config {
public:
    std::string to_config(const CLI::App* app, bool, bool, std::string) const override
    {
        Json out = Json::object();
        for (const CLI::Option* opt : app->get_options()) {
            if (opt->count() > 0 && !opt->get_lnames().empty() && opt->get_configurable()) {
                out[opt->get_lnames().front()] = opt->results();
            }
        }
        return out.dump(2) + "\n";
    }

    std::vector<CLI::ConfigItem> from_config(std::istream& in) const override
    {
        const Json j = Json::parse(in);
        if (!j.is_object()) {
            throw InvalidParameter("config file must hold a JSON object");
        }
        std::vector<CLI::ConfigItem> items;
        for (const auto& [key, value] : j.items()) {
            CLI::ConfigItem item;
            item.name = key;
            auto text = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
            if (value.is_array()) {
                for (const Json& v : value) {
                    item.inputs.push_back(text(v));
                }
            } else {
                item.inputs.push_back(text(value));
            }
            items.push_back(std::move(item));
        }
        return items;
    }
};

struct Options {
    std::string field = "qfunc";
    std::string algebra = "witt";
    long k = 0;
    long d = 0;
    long M = 4;
    std::string family;
    std::map<std::string, std::string> scalars;
    long mu = 1;
    std::vector<std::string> values{"0", "1", "2"};
    std::optional<double> ceiling;
    std::string op;
    std::string search;
    std::string out;
    bool deterministic = false;
};

/// A file path or inline JSON text.
Json load_json(const std::string& source)
{
    if (!source.empty() && source.front() == '{') {
        return Json::parse(source);
    }
    std::ifstream in(source);
    if (!in) {
        throw InvalidParameter("cannot read '" + source + "'");
    }
    return Json::parse(in);
}

/// "witt:<variant>" or "w22:<case>:<variant>" with case 1 (root of unity) or 2 (degree zero).
Json family_descriptor(const Options& o)
{
    std::vector<std::string> parts;
    std::stringstream ss(o.family);
    for (std::string part; std::getline(ss, part, ':');) {
        parts.push_back(part);
    }
    Json j;
    auto number = [](const std::string& s) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(s, &used);
            if (used == s.size()) {
                return v;
            }
        } catch (const std::exception&) {
        }
        throw InvalidParameter("family descriptor part '" + s + "' is not a number");
    };
    if (parts.size() == 2 && parts[0] == "witt") {
        j["family"] = "witt";
        j["variant"] = number(parts[1]);
        j["mu"] = o.mu;
    } else if (parts.size() == 3 && parts[0] == "w22") {
        j["family"] = "w22";
        j["case"] = parts[1] == "1" || parts[1] == "root_of_unity" ? Json("root_of_unity")
                    : parts[1] == "2" || parts[1] == "degree_zero" ? Json("degree_zero")
                                                                   : Json(parts[1]);
        j["variant"] = number(parts[2]);
    } else {
        throw InvalidParameter("family descriptor '" + o.family + "' is not witt:<v> or w22:<case>:<v>");
    }
    j["d"] = o.d;
    for (const auto& [name, value] : o.scalars) {
        if (!value.empty()) {
            j[name] = value;
        }
    }
    return j;
}

OperatorSpec load_operator(const Options& o, const ScalarField& f)
{
    if (!o.op.empty()) {
        return operator_from_json(load_json(o.op), f, o.M);
    }
    if (o.family.empty()) {
        throw InvalidParameter("an operator needs --family or --op");
    }
    FamilyOperator fam = family_from_json(family_descriptor(o), f, o.M);
    HomAlgebra alg = fam.algebra;
    HomogeneousOperator p = fam.op;
    return {std::move(alg), std::move(p), std::move(fam)};
}

void add_family_facts(Report& r, const FamilyOperator& fam)
{
    r.facts["family"] = fam.id;
    for (const auto& [k, v] : fam.parameter_strings) {
        r.facts["param." + k] = v;
    }
    if (!fam.expected_failure.empty()) {
        r.facts["ledger"] = fam.expected_failure;
    }
}

int run(const std::string& command, const Options& o, OrderedJson& reports)
{
    bool pass = true;
    auto emit = [&](const Report& r) {
        pass = pass && r.pass;
        reports.push_back(report_to_json(r, o.deterministic));
    };
    if (command == "identities") {
        std::vector<ScalarField> fields;
        if (o.field.empty() || o.field == "suite") {
            fields = identity_suite_fields();
        } else {
            fields.push_back(parse_field(o.field));
        }
        for (const auto& f : fields) {
            emit(check_qnumber_identities(f, o.M));
        }
        return pass ? 0 : 1;
    }
    if (command == "classify") {
        SearchSpace s = [&] {
            if (!o.search.empty()) {
                return search_from_json(load_json(o.search));
            }
            Json j{{"algebra", o.algebra}, {"field", o.field}, {"d", o.d}, {"M", o.M}, {"values", o.values}};
            return search_from_json(j);
        }();
        if (o.ceiling) {
            s.ceiling = o.ceiling;
        }
        const ProfileSet ps = enumerate_profiles(s);
        const CoverageReport cov = match_families(ps);
        reports.push_back(classify_to_json(ps, cov, o.deterministic));
        return classify_pass(ps, cov) ? 0 : 1;
    }

    const ScalarField f = parse_field(o.field);
    if (command == "verify-algebra") {
        const HomAlgebra alg = make_algebra(o.algebra, f, o.k);
        emit(check_skew(alg, o.M));
        emit(check_hom_jacobi(alg, o.M));
        emit(check_multiplicative(alg, o.M));
        if (alg.components() == 1) {
            emit(criterion_multiplicative(alg, o.M));
        }
        return pass ? 0 : 1;
    }
    const OperatorSpec spec = load_operator(o, f);
    if (command == "check-op") {
        Report avg = check_averaging(spec.algebra, spec.op, o.M);
        if (spec.family) {
            add_family_facts(avg, *spec.family);
        }
        emit(avg);
        emit(check_subalgebra_ideal(spec.algebra, spec.op, o.M));
        return pass ? 0 : 1;
    }
    if (command == "induce") {
        if (!spec.family) {
            throw InvalidParameter("induce needs a family operator");
        }
        Report cross = induced_closed_form_crosscheck(*spec.family, o.M);
        add_family_facts(cross, *spec.family);
        emit(cross);
        emit(induced_multiplicativity_verdict(*spec.family, o.M));
        return pass ? 0 : 1;
    }
    throw InvalidParameter("unknown command '" + command + "'");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact window checks for averaging operators on the q-deformed Witt and W(2,2) Hom-Lie algebras."};
    app.require_subcommand(1, 1);
    app.config_formatter(std::make_shared<JsonConfig>());
    app.set_config("--config", "", "JSON object of option values");

    Options o;
    app.add_option("--field", o.field, "rational:<num>[/<den>], cyclotomic:<N> or qfunc")->capture_default_str();
    app.add_option("--algebra", o.algebra, "witt or w22")->capture_default_str();
    app.add_option("--k", o.k, "twist degree")->capture_default_str();
    app.add_option("--d", o.d, "operator degree")->capture_default_str();
    auto* window = app.add_option("--M", o.M, "window |m| <= M")->capture_default_str();
    app.add_option("--family", o.family, "witt:<variant> or w22:<case>:<variant>");
    for (const char* name : {"beta", "nu", "gamma", "theta", "nu1", "nu2", "nu3", "nu4"}) {
        app.add_option(std::string("--") + name, o.scalars[name], std::string("family parameter ") + name);
    }
    app.add_option("--mu", o.mu, "Witt variant 2 switch, 0 or 1")->capture_default_str();
    app.add_option("--values", o.values, "classify value set")->delimiter(',')->capture_default_str();
    app.add_option("--ceiling", o.ceiling, "classify raw-size ceiling");
    app.add_option("--op", o.op, "operator descriptor, a file or inline JSON");
    app.add_option("--search", o.search, "search descriptor, a file or inline JSON");
    app.add_option("--out", o.out, "report file, default standard output");
    app.add_flag("--deterministic", o.deterministic, "write timings as 0");

    const std::vector<std::pair<const char*, const char*>> commands{
        {"verify-algebra", "skew-symmetry, Hom-Jacobi and multiplicativity"},
        {"check-op", "averaging axiom and image/kernel facts"},
        {"induce", "induced Hom-Leibniz product, printed-form cross-check, multiplicativity"},
        {"classify", "exhaustive profile search and family coverage"},
        {"identities", "q-number identity suite"},
    };
    for (const auto& [name, help] : commands) {
        app.add_subcommand(name, help)->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "homavg: error: " << e.what() << "\n";
        return 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    if (command == "identities") {
        if (window->count() == 0) {
            o.M = 8;
        }
        if (app.get_option("--field")->count() == 0) {
            o.field = "suite";
        }
    }

    OrderedJson doc;
    doc["command"] = command;
    OrderedJson reports = OrderedJson::array();
    int code = 0;
    try {
        code = run(command, o, reports);
    } catch (const SearchRefused& e) {
        std::cerr << "homavg: search refused: " << e.what() << " (estimate " << e.estimate() << ")\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "homavg: malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "homavg: error: " << e.what() << "\n";
        return 2;
    }
    doc["reports"] = reports;
    doc["exit_code"] = code;

    const std::string text = doc.dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(o.out);
        if (!out || !(out << text)) {
            std::cerr << "homavg: error: cannot write '" << o.out << "'\n";
            return 2;
        }
    }
    return code;
}
