// Command-line entry point: run verification suites, dump the form catalog,
// the generator matrices, and q-expansions.
//
// Exit status: 0 all selected checks pass, 1 at least one check failed,
// 2 usage/validation/internal error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "x13e8/json_io.hpp"
#include "x13e8/modular_pipeline.hpp"
#include "x13e8/qexp.hpp"
#include "x13e8/verify.hpp"

namespace {

using namespace x13e8;

int write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return 0;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot open output file: " << path << "\n";
        return 2;
    }
    out << content;
    return 0;
}

int cmd_verify(const VerifyConfig& cfg, const std::string& format, const std::string& output) {
    Report rep = run_suite(cfg);
    std::string rendered = format == "json" ? report_to_json(rep).dump(2) + "\n" : report_to_text(rep);
    if (int rc = write_output(output, rendered)) return rc;
    if (rep.any_error()) return 2;
    return rep.all_passed() ? 0 : 1;
}

const std::vector<std::string>& qexp_names() {
    static const std::vector<std::string> names = {
        "a1",          "a2",          "a3",          "a4",          "a5",          "a6",
        "eta",         "Delta",       "E4",          "E6",          "eta8",        "theta5a",
        "theta5b",     "Phi4-on-x",   "Phi8-on-x",   "Phi12-on-x",  "Phi12p-on-x", "Phi16-on-x",
        "Phi18-on-x",  "Phi20-on-x",  "Phi30-on-x",  "phi12-on-x"};
    return names;
}

std::optional<RationalSeries> resolve_qexp(const std::string& name, long order) {
    static SeriesContext ctx13{312, 0};
    static SeriesContext ctx5{120, 0};
    ctx13.trunc_units = 312 * order + 1;
    ctx5.trunc_units = 120 * order + 1;
    if (name == "eta") return eta(&ctx13);
    if (name == "Delta") return eta_power(24, &ctx13);
    if (name == "eta8") return eta_power(8, &ctx13);
    if (name == "E4") return eisenstein(4, &ctx13);
    if (name == "E6") return eisenstein(6, &ctx13);
    if (name == "theta5a") return theta5('a', &ctx5);
    if (name == "theta5b") return theta5('b', &ctx5);
    if (name.size() == 2 && name[0] == 'a' && name[1] >= '1' && name[1] <= '6')
        return theta13(name[1] - '0', &ctx13);
    if (name.size() > 5 && name.substr(name.size() - 5) == "-on-x") {
        std::string label = name.substr(0, name.size() - 5);
        ModularSeries ms = build_modular_series(form_catalog(), order);
        auto it = ms.phi_x.find(label);
        if (it != ms.phi_x.end()) return it->second;
    }
    return std::nullopt;
}

int cmd_dump(const std::string& what, const std::string& name, long order, const std::string& format,
             const std::string& output) {
    const FormCatalog& cat = form_catalog();
    if (what == "matrices") {
        nlohmann::ordered_json j;
        j["field"] = field_spec_to_json(*cat.F);
        j["S"] = matrix_to_json(cat.S);
        j["T"] = matrix_to_json(cat.T);
        j["H"] = matrix_to_json(cat.H);
        j["P"] = matrix_to_json(cat.P);
        j["Q"] = matrix_to_json(cat.Q);
        return write_output(output, j.dump(2) + "\n");
    }
    if (what == "forms") {
        nlohmann::ordered_json j;
        j["field"] = field_spec_to_json(*cat.F);
        auto put = [&](const std::string& key, const std::vector<SparsePolynomial>& fam) {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& p : fam) arr.push_back(polynomial_to_json(p));
            j[key] = arr;
        };
        put("A", cat.A);
        put("D", cat.D);
        put("G", cat.G);
        put("G_second_printing", cat.G_alt);
        put("phi", cat.phi);
        put("w", cat.w);
        put("delta", cat.delta);
        j["Phi4"] = polynomial_to_json(cat.expand_invariant("Phi4"));
        j["Phi8"] = polynomial_to_json(cat.expand_invariant("Phi8"));
        const auto& ico = icosahedral_forms();
        j["icosahedral_f"] = polynomial_to_json(ico.f);
        j["icosahedral_H"] = polynomial_to_json(ico.H);
        j["icosahedral_T"] = polynomial_to_json(ico.T);
        return write_output(output, j.dump(2) + "\n");
    }
    if (what == "qexp") {
        auto series = resolve_qexp(name, order);
        if (!series) {
            std::cerr << "unknown q-expansion name: '" << name << "'\ncandidates:";
            for (const auto& n : qexp_names()) std::cerr << " " << n;
            std::cerr << "\n";
            return 2;
        }
        if (format == "json") {
            nlohmann::ordered_json j = series_to_json(*series);
            j["name"] = name;
            j["leading"] = leading_term_text(*series);
            return write_output(output, j.dump(2) + "\n");
        }
        return write_output(output, "# " + name + " = " + leading_term_text(*series) + "\n" + series_to_text(*series));
    }
    std::cerr << "unknown dump target: " << what << " (expected forms, matrices, qexp)\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification kernel for the PSL(2,13) invariants, theta constants of order 13, "
                 "and the E8 identity"};
    app.require_subcommand(1);

    VerifyConfig cfg;
    std::string format = "text";
    std::string output;

    auto* verify = app.add_subcommand("verify", "run verification suites and emit a report");
    verify
        ->add_option("--suite", cfg.suite,
                     "all, group, field, transforms, invariance, series, icosahedral, numeric, sections")
        ->default_val("all");
    verify->add_option("--order", cfg.order, "q-expansion truncation order (>= 3)")->default_val(30);
    verify->add_option("--seed", cfg.seed, "seed for randomized identity testing")->default_val(42);
    verify->add_option("--tolerance", cfg.tolerance, "numeric tolerance for the transformation laws")
        ->default_val(1e-9);
    verify->add_flag("--enable-heavy-symbolic", cfg.heavy_symbolic,
                     "also expand the degree-12/16 invariants symbolically (minutes of runtime)");
    verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
    verify->add_option("--output,-o", output, "write the report to a file instead of stdout");

    std::string dump_what, dump_name;
    long dump_order = 30;
    auto* dump = app.add_subcommand("dump", "dump forms, matrices, or q-expansions");
    dump->add_option("what", dump_what, "forms, matrices, or qexp")->required();
    dump->add_option("name", dump_name, "for qexp: the series name (e.g. a6, eta, Delta, Phi12-on-x)");
    dump->add_option("--order", dump_order, "truncation order for q-expansions")->default_val(30);
    dump->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
    dump->add_option("--output,-o", output, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(cfg, format, output);
        if (dump->parsed()) return cmd_dump(dump_what, dump_name, dump_order, format, output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
