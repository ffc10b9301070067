#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wrightmi/errors.hpp"
#include "wrightmi/params.hpp"
#include "wrightmi/series.hpp"
#include "wrightmi/tabulate.hpp"
#include "wrightmi/verify.hpp"

namespace {

using wrightmi::MultiIndexParams;
using wrightmi::ThreeParams;

// Exit codes: 0 success, 1 runtime failure (non-convergence, failed checks,
// I/O), 2 parse error, 3 domain error naming the offending parameter.
constexpr int exit_ok = 0;
constexpr int exit_runtime = 1;
constexpr int exit_parse = 2;
constexpr int exit_domain = 3;

std::vector<double> split_doubles(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("trailing characters in '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

// --three a,b,c or --multi alphas=... nus=...; exactly one must be present.
struct ParamArgs {
    std::string three;
    std::vector<std::string> multi;

    void attach(CLI::App* cmd) {
        cmd->add_option("--three", three,
                        "Three-parameter form as alpha,beta,nu (n=1 with alphas {alpha,beta})");
        cmd->add_option("--multi", multi,
                        "Full index lists as two tokens: alphas=a1,...,a_{n+1} nus=v1,...,v_n")
            ->expected(1, 2);
    }

    MultiIndexParams parse() const {
        if (three.empty() == multi.empty())
            throw CLI::ValidationError("exactly one of --three or --multi is required");
        if (!three.empty()) {
            std::vector<double> v;
            try {
                v = split_doubles(three);
            } catch (const std::exception& e) {
                throw CLI::ValidationError(std::string("--three: ") + e.what());
            }
            if (v.size() != 3)
                throw CLI::ValidationError("--three expects exactly three values alpha,beta,nu");
            return ThreeParams(v[0], v[1], v[2]).to_multi_index();
        }
        std::optional<std::vector<double>> alphas, nus;
        for (const std::string& tok : multi) {
            const auto eq = tok.find('=');
            const std::string key = eq == std::string::npos ? tok : tok.substr(0, eq);
            if (eq == std::string::npos || (key != "alphas" && key != "nus"))
                throw CLI::ValidationError("--multi tokens must look like alphas=... or nus=...");
            std::vector<double> v;
            try {
                v = split_doubles(tok.substr(eq + 1));
            } catch (const std::exception& e) {
                throw CLI::ValidationError("--multi " + key + ": " + e.what());
            }
            (key == "alphas" ? alphas : nus) = std::move(v);
        }
        if (!alphas || !nus)
            throw CLI::ValidationError("--multi needs both alphas=... and nus=... tokens");
        return MultiIndexParams::make(*alphas, *nus);
    }
};

int write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return exit_ok;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return exit_runtime;
    }
    f << content;
    return f.good() ? exit_ok : exit_runtime;
}

std::string dump_json(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

nlohmann::ordered_json record_json(const wrightmi::VerifyRecord& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["suite"] = r.suite;
    j["params"] = r.params;
    j["grid"] = r.grid;
    j["max_abs_residual"] = r.max_abs_residual;
    j["max_rel_residual"] = r.max_rel_residual;
    j["tolerance"] = r.tolerance;
    j["status"] = r.status;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-index Wright-type series: evaluation, tables, figure data, verification"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "Evaluate the series at one point");
    ParamArgs eval_params;
    eval_params.attach(eval);
    double z = 0.0;
    double tolerance = wrightmi::default_tolerance;
    int max_terms = wrightmi::default_max_terms;
    eval->add_option("--z", z, "Argument z")->capture_default_str();
    eval->add_option("--tolerance", tolerance, "Series stopping tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    eval->add_option("--max-terms", max_terms, "Series term cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // table
    auto* table = app.add_subcommand("table", "Tabulate the series over an x grid");
    ParamArgs table_params;
    table_params.attach(table);
    double x_min = 0.0, x_max = 3.0;
    int points = 121;
    std::string output = "-";
    std::string format = "csv";
    table->add_option("--x-min", x_min, "Grid start")->capture_default_str();
    table->add_option("--x-max", x_max, "Grid end")->capture_default_str();
    table->add_option("--points", points, "Grid size")->check(CLI::Range(2, 1000000))
        ->capture_default_str();
    table->add_option("--tolerance", tolerance, "Series stopping tolerance")
        ->check(CLI::PositiveNumber);
    table->add_option("--max-terms", max_terms, "Series term cap")->check(CLI::PositiveNumber);
    table->add_option("--output", output, "Output path, - for stdout")->capture_default_str();
    table->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    // figure
    auto* figure = app.add_subcommand("figure", "Emit one figure panel as CSV");
    std::string panel;
    std::string fig_output = "-";
    double fig_x_min = 0.0, fig_x_max = 3.0;
    int fig_points = 121;
    figure->add_option("--panel", panel, "Panel selector")
        ->check(CLI::IsMember({"a", "b", "c", "d"}))
        ->required();
    figure->add_option("--x-min", fig_x_min, "Grid start")->capture_default_str();
    figure->add_option("--x-max", fig_x_max, "Grid end")->capture_default_str();
    figure->add_option("--points", fig_points, "Grid size")->check(CLI::Range(2, 1000000))
        ->capture_default_str();
    figure->add_option("--output", fig_output, "Output path, - for stdout")
        ->capture_default_str();

    // verify
    auto* verify = app.add_subcommand("verify", "Run the verification suites");
    std::string suite;
    std::uint64_t seed = 12345;
    std::string verify_output = "-";
    verify->add_option("--suite", suite, "Restrict to one suite")
        ->check(CLI::IsMember({"reductions", "eigen", "laplace", "recurrences", "param-derivs",
                               "appendix"}));
    verify->add_option("--seed", seed, "Seed for the random draws")->capture_default_str();
    verify->add_option("--output", verify_output, "Report path, - for stdout")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_parse;
    }

    try {
        if (eval->parsed()) {
            const MultiIndexParams p = eval_params.parse();
            const wrightmi::SeriesValue v = eval_multi_index(p, z, tolerance, max_terms);
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.16g", v.value);
            std::cout << buf << "\n"
                      << "terms_used=" << v.terms_used
                      << " converged=" << (v.converged ? "true" : "false") << "\n";
            return v.converged ? exit_ok : exit_runtime;
        }

        if (table->parsed()) {
            const MultiIndexParams p = table_params.parse();
            if (format == "csv")
                return write_output(output,
                                    wrightmi::table_csv(p, x_min, x_max, points, tolerance,
                                                        max_terms));
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (int i = 0; i < points; ++i) {
                const double x = x_min + (x_max - x_min) * i / (points - 1);
                const wrightmi::SeriesValue v = eval_multi_index(p, x, tolerance, max_terms);
                nlohmann::ordered_json row;
                row["x"] = x;
                row["value"] = v.value;
                row["terms_used"] = v.terms_used;
                row["converged"] = v.converged;
                rows.push_back(std::move(row));
            }
            return write_output(output, dump_json(rows));
        }

        if (figure->parsed()) {
            return write_output(
                fig_output, wrightmi::figure_panel_csv(panel[0], fig_x_min, fig_x_max,
                                                       fig_points));
        }

        // verify
        wrightmi::VerifyOptions opt;
        opt.suite = suite;
        opt.seed = seed;
        const wrightmi::VerifyOutcome outcome = wrightmi::run_verification(opt);

        nlohmann::ordered_json report;
        report["seed"] = outcome.seed;
        report["tolerance_defaults"] = {{"series_tolerance", wrightmi::default_tolerance},
                                        {"series_max_terms", wrightmi::default_max_terms}};
        nlohmann::ordered_json records = nlohmann::ordered_json::array();
        int erratum = 0;
        for (const wrightmi::VerifyRecord& r : outcome.records) {
            if (r.status == "erratum-candidate") ++erratum;
            records.push_back(record_json(r));
        }
        report["records"] = std::move(records);
        const int rc = write_output(verify_output, dump_json(report));
        std::cerr << outcome.records.size() << " records, " << outcome.failures
                  << " failures, " << erratum << " erratum-candidates (seed " << outcome.seed
                  << ")\n";
        if (rc != exit_ok) return rc;
        return outcome.failures == 0 ? exit_ok : exit_runtime;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return exit_parse;
    } catch (const std::domain_error& e) { // parameter envelopes and gamma poles
        std::cerr << "domain error: " << e.what() << "\n";
        return exit_domain;
    } catch (const wrightmi::convergence_error& e) {
        std::cerr << "convergence error: " << e.what() << "\n";
        return exit_runtime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_runtime;
    }
}
