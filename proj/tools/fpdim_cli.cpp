/*
   Copyright 2026 The fpdim Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "fpdim/io.hpp"
#include "fpdim/validate.hpp"

using namespace fpdim;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Result {
    Json body;
    int code = kOk;
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Schema, "cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

FixtureEntry load(const std::string& path) { return parse_fusion_file(read_input(path)); }

void add_provenance(Json& j, const FixtureEntry& e) {
    if (!e.provenance.empty()) j["provenance"] = e.provenance;
}

Json violations_json(const ValidationReport& r) {
    Json out = Json::array();
    for (const auto& v : r.violations) out.push_back({{"rule", v.rule}, {"witness", v.witness}, {"message", v.message}});
    return out;
}

Result cmd_validate(const std::string& path) {
    const FixtureEntry e = load(path);
    const FusionData& d = *e.data;
    ValidationReport report = check_structural(d);
    Json j = {{"name", d.name()}, {"rank", d.rank()}, {"fusion", d.is_fusion()}};
    if (d.is_fusion()) {
        report.append(check_eps_consistency(d));
        j["transitive"] = check_transitivity(d).passed();
    } else {
        j["transitive"] = check_transitivity(d).passed();
        j["note"] = "multifusion: endo_dim relations are only checked for fusion data";
    }
    j["passed"] = report.passed();
    j["violations"] = violations_json(report);
    add_provenance(j, e);
    return {j, report.passed() ? kOk : kFailed};
}

Result cmd_fpdim(const std::string& path, const std::string& element, bool category, const FpOptions& opts) {
    const FixtureEntry e = load(path);
    Json j = {{"name", e.data->name()}};
    if (category) {
        const IntegralityCertificate c = certify_integrality(e.data, opts);
        j.update(algebraic_to_json(c.fpdim));
    } else if (!element.empty()) {
        j["label"] = element;
        j.update(algebraic_to_json(fpdim_element(Element::basis(e.data, element), opts)));
    } else {
        Json simples = Json::array();
        const auto dims = fpdim_simples(e.data, opts);
        for (std::size_t i = 0; i < dims.size(); ++i) {
            Json s = algebraic_to_json(dims[i]);
            s["label"] = e.data->label(i);
            simples.push_back(std::move(s));
        }
        j["simples"] = simples;
    }
    add_provenance(j, e);
    return {j};
}

Result cmd_regular(const std::string& path, const FpOptions& opts) {
    const FixtureEntry e = load(path);
    const ExtendedElement reg = regular_element(e.data, opts);
    Json coeffs = Json::array();
    for (std::size_t i = 0; i < reg.coeffs.size(); ++i) {
        Json c = algebraic_to_json(reg.coeffs[i]);
        c["label"] = e.data->label(i);
        coeffs.push_back(std::move(c));
    }
    const EigenpropertyReport eig = verify_regular_eigenproperty(e.data, opts);
    const AlgebraicNumber dim = fpdim_category(e.data, opts);
    const Interval sum = fpdim_category_by_summation(e.data, comparison_width(), opts);
    const Interval perron = refine(dim, comparison_width()).enclosure();
    const bool routes_agree = max_distance(sum, perron) <= comparison_tolerance();
    Json j = {{"name", e.data->name()},
              {"regular", coeffs},
              {"fpdim_category", algebraic_to_json(dim)},
              {"eigenproperty", {{"passed", eig.passed}, {"exact", eig.exact}, {"failures", eig.failures}}},
              {"summation_agrees", routes_agree}};
    add_provenance(j, e);
    return {j, eig.passed && routes_agree ? kOk : kFailed};
}

Result cmd_integrality(const std::string& path, const FpOptions& opts) {
    const FixtureEntry e = load(path);
    const IntegralityCertificate c = certify_integrality(e.data, opts);
    Json j = {{"name", e.data->name()}, {"fpdim", algebraic_to_json(c.fpdim)}, {"algebraic_integer", c.is_algebraic_integer}};
    Json mp = Json::array();
    for (const auto& x : c.min_poly.coeffs()) mp.push_back(rational_string(x));
    j["min_poly"] = mp;
    add_provenance(j, e);
    return {j};
}

Result cmd_center(const std::string& path, long dz, const FpOptions& opts) {
    const FixtureEntry e = load(path);
    AnnotatedFusion a = e.annotated();
    if (dz > 0) a.annotation.center_degree = Int(dz);
    const CenterPrediction p = center_fpdim_prediction(a, opts);
    const std::string bound = !p.bound_ok ? "violated" : (p.equality ? "equal" : "strict");
    const Json predicted = algebraic_to_json(p.predicted);
    Json j = {{"name", e.data->name()},
              {"predicted", predicted["value"]},
              {"predicted_number", predicted},
              {"fpdim_squared", algebraic_to_json(p.fpdim_squared)},
              {"center_endo_degree", p.center_degree.get_str()},
              {"bound", bound},
              {"equality", p.equality},
              {"all_galois_trivial", p.all_trivial},
              {"consistent", p.consistent()}};
    add_provenance(j, e);
    return {j, p.bound_ok && p.consistent() ? kOk : kFailed};
}

Result cmd_morita(const std::string& a, const std::string& b, const FpOptions& opts) {
    const FixtureEntry ea = load(a), eb = load(b);
    const MoritaRatio r = morita_ratio_equal(ea.data, eb.data, opts);
    Json j = {{"a", {{"name", ea.data->name()}, {"ratio", algebraic_to_json(r.ratio_a)}}},
              {"b", {{"name", eb.data->name()}, {"ratio", algebraic_to_json(r.ratio_b)}}},
              {"equal", r.equal}};
    return {j, r.equal ? kOk : kFailed};
}

Result cmd_deligne(const std::string& a, const std::string& b) {
    const FixtureEntry ea = load(a), eb = load(b);
    if (!ea.description || !eb.description)
        throw Error(ErrorKind::Schema, "both files need a division_type on every simple");
    const SemisimpleDesc prod = deligne_product(*ea.description, *eb.description);
    Json simples = Json::array();
    for (const auto& s : prod.simples)
        simples.push_back({{"label", s.label}, {"division_type", to_string(s.type)}, {"multiplicity", s.multiplicity}});
    return {Json{{"left", ea.data->name()}, {"right", eb.data->name()}, {"rank", prod.simples.size()}, {"simples", simples}}};
}

Result cmd_morphism(const std::string& path, const FpOptions& opts) {
    const SemiringMorphism f = parse_morphism_file(read_input(path));
    const MorphismReport hom = check_homomorphism(f);
    Json j = {{"source", f.source()->name()},
              {"target", f.target()->name()},
              {"twisted", f.is_twisted()},
              {"homomorphism", {{"passed", hom.passed}, {"failures", hom.failures}}},
              {"dominant", check_dominant(f)}};
    if (!hom.passed) return {j, kFailed};
    const TransportReport t = verify_fpdim_transport(f, opts);
    j["fpdim_twist"] = algebraic_to_json(fpdim_element(f.twist(), opts));
    j["transport"] = {{"objects", t.objects_ok},
                      {"regular_checked", t.regular_checked},
                      {"regular", t.regular_ok},
                      {"exact", t.exact},
                      {"failures", t.failures}};
    return {j, t.passed() ? kOk : kFailed};
}

// Flat "path: value" lines for --format text.
void to_text(const Json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) to_text(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array()) {
        const bool flat = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
        if (flat) {
            out << prefix << ":";
            for (const auto& x : j) out << " " << (x.is_string() ? x.get<std::string>() : x.dump());
            out << "\n";
        } else {
            for (std::size_t i = 0; i < j.size(); ++i) to_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
        }
    } else {
        out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::Schema:
        case ErrorKind::ContextMismatch: return kUsage;
        default: return kFailed;
    }
}

const char* kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::ContextMismatch: return "context_mismatch";
        case ErrorKind::NotFusion: return "not_fusion";
        case ErrorKind::Invalid: return "invalid";
        case ErrorKind::Refused: return "refused";
        case ErrorKind::Domain: return "domain";
        case ErrorKind::Resource: return "resource";
        case ErrorKind::Schema: return "schema";
        case ErrorKind::InsufficientData: return "insufficient_data";
    }
    return "error";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frobenius-Perron dimensions of fusion data, in exact arithmetic"};
    app.require_subcommand(1);
    app.fallthrough();
    unsigned precision = kDefaultPrecisionBits;
    std::string format = "json";
    bool waive = false;
    app.add_option("--precision", precision, "Isolating interval width 2^-bits")->check(CLI::Range(1u, 4096u));
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--waive-transitivity", waive, "Compute FPdims on non-transitive data");

    std::string file_a, file_b, element, name;
    bool category = false;
    long dz = 0;
    auto* validate = app.add_subcommand("validate", "Structural and endo_dim checks");
    validate->add_option("file", file_a)->required();
    auto* fpdim = app.add_subcommand("fpdim", "FPdims of simples, one element or the category");
    fpdim->add_option("file", file_a)->required();
    auto* elem_opt = fpdim->add_option("--element", element, "Label of a simple");
    fpdim->add_flag("--category", category, "FPdim of the category")->excludes(elem_opt);
    auto* regular = app.add_subcommand("regular", "Regular element and its eigen-property");
    regular->add_option("file", file_a)->required();
    auto* integrality = app.add_subcommand("integrality", "Minimal polynomial of FPdim of the category");
    integrality->add_option("file", file_a)->required();
    auto* center = app.add_subcommand("center", "Predicted FPdim of the Drinfeld center");
    center->add_option("file", file_a)->required();
    center->add_option("--dz", dz, "Degree of the center's endomorphism field")->check(CLI::PositiveNumber);
    auto* morita = app.add_subcommand("morita", "Compare FPdim / endo_degree");
    morita->add_option("a", file_a)->required();
    morita->add_option("b", file_b)->required();
    auto* deligne = app.add_subcommand("deligne", "Real Deligne product of two descriptions");
    deligne->add_option("a", file_a)->required();
    deligne->add_option("b", file_b)->required();
    auto* morphism = app.add_subcommand("morphism", "Check a (twisted) homomorphism and FPdim transport");
    morphism->add_option("file", file_a)->required();
    auto* catalog = app.add_subcommand("catalog", "Built-in fixtures");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "Names of the built-in fixtures");
    auto* emit = catalog->add_subcommand("emit", "Write a built-in fixture as JSON");
    emit->add_option("name", name)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    FpOptions opts;
    opts.waive_transitivity = waive;
    opts.width = power_of_two_width(precision);

    try {
        Result r;
        if (*validate) r = cmd_validate(file_a);
        else if (*fpdim) r = cmd_fpdim(file_a, element, category, opts);
        else if (*regular) r = cmd_regular(file_a, opts);
        else if (*integrality) r = cmd_integrality(file_a, opts);
        else if (*center) r = cmd_center(file_a, dz, opts);
        else if (*morita) r = cmd_morita(file_a, file_b, opts);
        else if (*deligne) r = cmd_deligne(file_a, file_b);
        else if (*morphism) r = cmd_morphism(file_a, opts);
        else if (*list) r = {Json{{"builtins", list_builtins()}}};
        else if (*emit) {
            // Emitted verbatim so that the output parses back byte for byte.
            std::cout << emit_fusion_file(get_builtin(name));
            return kOk;
        }
        if (format == "text")
            to_text(r.body, "", std::cout);
        else
            std::cout << dump_canonical(r.body);
        return r.code;
    } catch (const Error& e) {
        std::cerr << "error (" << kind_name(e.kind()) << "): " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
}
