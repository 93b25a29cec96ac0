// Command-line front end: compute Alexander polynomials of 2-bridge knots
// and links, render the underlying walks, emit batch tables, and run the
// cross-validation suites.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "twobridge/closed_form.hpp"
#include "twobridge/format.hpp"
#include "twobridge/fox.hpp"
#include "twobridge/param.hpp"
#include "twobridge/render.hpp"
#include "twobridge/verify.hpp"
#include "twobridge/walk.hpp"

namespace {

using namespace twobridge;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

TwoBridgeParam param_from_cli(Int p, Int q) {
    if (0 < p && p < q && p % 2 == 0 && q % 2 == 1) {
        std::cerr << "warning: p even; substituting mirror image " << (q - p) << "/"
                  << q << " (Alexander polynomial unchanged)\n";
    }
    return mirror_normalize(p, q);
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open output file: " + out_path);
        file << content;
    }
}

int run_poly(Int p, Int q, bool two_variable, const std::string& method, bool json) {
    TwoBridgeParam param = param_from_cli(p, q);

    if (two_variable) {
        if (!param.is_link()) {
            std::cerr << "error: --two-variable requires a link (q even)\n";
            return kExitUsage;
        }
        LaurentPoly2 poly;
        if (method == "walk") {
            poly = poly_from_2d_visits(walk_2d(param));
        } else if (method == "formula") {
            poly = two_variable_poly(param);
        } else if (method == "fox") {
            poly = alexander_via_fox(param);
        } else { // all
            LaurentPoly2 from_walk = poly_from_2d_visits(walk_2d(param));
            LaurentPoly2 from_formula = two_variable_poly(param);
            LaurentPoly2 from_fox = alexander_via_fox(param);
            if (!(from_walk == from_formula && from_formula == from_fox)) {
                std::cerr << "error: cross-route mismatch for " << p << "/" << q << "\n";
                return kExitMismatch;
            }
            poly = from_formula;
        }
        if (json) {
            std::cout << record_json(param, poly).dump() << "\n";
        } else {
            std::cout << poly_to_string(poly) << "\n";
        }
        return kExitOk;
    }

    if (method == "fox") {
        std::cerr << "error: the fox route produces the two-variable polynomial; "
                     "use --two-variable\n";
        return kExitUsage;
    }
    LaurentPoly1 poly;
    if (method == "walk") {
        poly = poly_from_1d_visits(walk_1d_minkus(param));
    } else if (method == "formula") {
        poly = minkus_poly(param);
    } else { // all
        LaurentPoly1 from_minkus = poly_from_1d_visits(walk_1d_minkus(param));
        LaurentPoly1 from_hartley = poly_from_1d_crossings(walk_1d_hartley(param));
        LaurentPoly1 from_formula = minkus_poly(param);
        if (!(from_minkus == from_hartley && from_hartley == from_formula)) {
            std::cerr << "error: cross-route mismatch for " << p << "/" << q << "\n";
            return kExitMismatch;
        }
        poly = from_formula;
    }
    if (json) {
        std::cout << record_json(param, poly).dump() << "\n";
    } else {
        std::cout << poly_to_string(poly) << "\n";
    }
    return kExitOk;
}

int run_render(Int p, Int q, int dim, const std::string& format_name,
               const std::string& out_path) {
    TwoBridgeParam param = param_from_cli(p, q);
    RenderFormat format = format_name == "ascii" ? RenderFormat::Ascii : RenderFormat::Svg;
    std::string content;
    if (dim == 2) {
        content = render_walk_2d(walk_2d(param), format); // KindError if q odd
    } else {
        content = render_walk_1d(walk_1d_minkus(param), format);
    }
    write_output(out_path, content);
    return kExitOk;
}

int run_table(Int qmax, const std::string& format_name, bool links_only,
              bool knots_only, const std::string& out_path) {
    std::string content = format_name == "json"
                              ? table_json(qmax, links_only, knots_only).dump(2) + "\n"
                              : table_csv(qmax, links_only, knots_only);
    write_output(out_path, content);
    return kExitOk;
}

int run_verify(Int qmax) {
    VerifyReport report = run_verification(qmax);
    for (const auto& suite : report.suites) {
        std::cout << (suite.passed() ? "PASS" : "FAIL") << "  " << suite.name
                  << "  (" << suite.checked << " parameters)";
        if (suite.first_counterexample) {
            std::cout << "  first counterexample " << suite.first_counterexample->first
                      << "/" << suite.first_counterexample->second;
        }
        std::cout << "\n";
    }
    if (!report.non_trapezoidal_links.empty()) {
        std::cout << "note: " << report.non_trapezoidal_links.size()
                  << " link parameter(s) with non-trapezoidal reduced polynomial, first ";
        std::cout << report.non_trapezoidal_links.front().first << "/"
                  << report.non_trapezoidal_links.front().second << "\n";
    } else {
        std::cout << "note: every reduced link polynomial was trapezoidal as well\n";
    }
    return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Alexander polynomials of 2-bridge knots and links via lattice walks"};
    app.require_subcommand(1);

    Int p = 0;
    Int q = 0;
    bool two_variable = false;
    bool json = false;
    std::string method = "formula";
    int dim = 1;
    std::string format_name;
    std::string out_path;
    Int qmax = 200;
    bool links_only = false;
    bool knots_only = false;

    auto* poly_cmd = app.add_subcommand("poly", "Compute the Alexander polynomial");
    poly_cmd->add_option("p", p, "numerator (odd)")->required();
    poly_cmd->add_option("q", q, "denominator")->required();
    poly_cmd->add_flag("--two-variable", two_variable,
                       "two-variable polynomial (links only)");
    poly_cmd->add_option("--method", method, "computation route")
        ->check(CLI::IsMember({"walk", "formula", "fox", "all"}));
    poly_cmd->add_flag("--json", json, "emit the JSON record instead of text");

    auto* render_cmd = app.add_subcommand("render", "Render the walk");
    render_cmd->add_option("p", p, "numerator (odd)")->required();
    render_cmd->add_option("q", q, "denominator")->required();
    render_cmd->add_option("--dim", dim, "walk dimension")->check(CLI::IsMember({1, 2}));
    render_cmd->add_option("--format", format_name, "output format")
        ->default_val("svg")
        ->check(CLI::IsMember({"svg", "ascii"}));
    render_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* table_cmd = app.add_subcommand("table", "Batch table over all p/q");
    table_cmd->add_option("--qmax", qmax, "largest q")->required();
    table_cmd->add_option("--format", format_name, "output format")
        ->default_val("csv")
        ->check(CLI::IsMember({"csv", "json"}));
    table_cmd->add_flag("--links-only", links_only);
    table_cmd->add_flag("--knots-only", knots_only);
    table_cmd->add_option("--out", out_path, "output file (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "Run all cross-validation suites");
    verify_cmd->add_option("--qmax", qmax, "largest q to sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (poly_cmd->parsed()) return run_poly(p, q, two_variable, method, json);
        if (render_cmd->parsed()) return run_render(p, q, dim, format_name, out_path);
        if (table_cmd->parsed()) {
            if (links_only && knots_only) {
                std::cerr << "error: --links-only and --knots-only are exclusive\n";
                return kExitUsage;
            }
            return run_table(qmax, format_name, links_only, knots_only, out_path);
        }
        if (verify_cmd->parsed()) return run_verify(qmax);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
