#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "appell/coeffs.hpp"
#include "appell/hermite.hpp"
#include "appell/identities.hpp"

namespace {

constexpr unsigned kTableCap = 200;
constexpr unsigned kPolyCap = 500;
constexpr unsigned kGridCap = 24;        // thm1/thm2/operator N and k bounds
constexpr unsigned kTruncationCap = 64;
constexpr unsigned kMonomialCap = 32;
constexpr unsigned kFamilyCap = 200;     // conversion/ode n bound, thm3 N bound

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_cap(bool uncapped, unsigned value, unsigned cap, const std::string& what) {
    if (!uncapped && value > cap) {
        throw UsageError(what + " exceeds the hard cap " + std::to_string(cap) +
                         " (pass --unsafe-no-cap to override)");
    }
}

// Everything destined for standard output is assembled here first, so an
// --out file receives byte-identical content.
void emit(const std::string& text, const std::string& out_path) {
    std::cout << text;
    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            throw UsageError("cannot open --out file '" + out_path + "'");
        }
        file << text;
    }
}

std::string render_entry_row(const std::vector<appell::NuPoly>& row) {
    std::string line;
    for (const auto& entry : row) {
        if (!line.empty()) {
            line += ", ";
        }
        line += entry.str();
    }
    return line;
}

struct TableOptions {
    unsigned max_n = 0;
    bool matrix = false;
    std::string format = "text";
    std::string out_path;
    bool uncapped = false;
};

int run_table(const TableOptions& opt) {
    require_cap(opt.uncapped, opt.max_n, kTableCap, "--max-n");
    std::string text;
    if (opt.format == "json") {
        text = opt.matrix ? appell::matrix_to_json(opt.max_n)
                          : appell::CoeffTable::build_recurrence(opt.max_n).to_json();
        text += '\n';
    } else if (opt.matrix) {
        for (const auto& row : appell::coefficient_matrix(opt.max_n)) {
            text += render_entry_row(row) + '\n';
        }
    } else {
        const auto table = appell::CoeffTable::build_recurrence(opt.max_n);
        for (unsigned n = 0; n <= table.max_n(); ++n) {
            text += render_entry_row(table.row(n)) + '\n';
        }
    }
    emit(text, opt.out_path);
    return 0;
}

struct PolyOptions {
    std::string kind;
    unsigned n = 0;
    std::string x_text;
    std::string nu_text;
    std::string format = "text";
    std::string out_path;
    bool uncapped = false;
};

int run_poly(const PolyOptions& opt) {
    require_cap(opt.uncapped, opt.n, kPolyCap, "--n");
    const bool variance = opt.kind == "variance";
    if (!opt.nu_text.empty() && !variance) {
        throw UsageError("--nu is only meaningful with --kind variance");
    }
    if (!opt.x_text.empty() && variance && opt.nu_text.empty()) {
        throw UsageError("evaluating --kind variance needs both --x and --nu");
    }

    const appell::HermiteKind kind = variance             ? appell::HermiteKind::Variance
                                     : opt.kind == "phys" ? appell::HermiteKind::Physicists
                                                          : appell::HermiteKind::Probabilists;
    appell::BiPoly p = appell::hermite(kind, opt.n);

    std::optional<appell::Rational> x_value, nu_value;
    try {
        if (!opt.x_text.empty()) {
            x_value = appell::Rational::parse(opt.x_text);
        }
        if (!opt.nu_text.empty()) {
            nu_value = appell::Rational::parse(opt.nu_text);
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    std::optional<appell::Rational> value;
    if (x_value) {
        value = p.eval(*x_value, nu_value ? *nu_value : appell::Rational(0));
    } else if (nu_value) {
        p = p.substitute_nu(*nu_value);
    }

    std::string text;
    if (opt.format == "json") {
        nlohmann::ordered_json j;
        j["kind"] = opt.kind;
        j["n"] = opt.n;
        j["poly"] = p.str();
        if (x_value) {
            j["x"] = x_value->str();
        }
        if (nu_value) {
            j["nu"] = nu_value->str();
        }
        if (value) {
            j["value"] = value->str();
        }
        text = j.dump() + '\n';
    } else {
        text = (value ? value->str() : p.str()) + '\n';
    }
    emit(text, opt.out_path);
    return 0;
}

struct VerifyOptions {
    std::string suite = "all";
    unsigned max_k = 12;
    unsigned max_n_grid = 12;   // thm1/thm2/operator
    unsigned max_n_routes = 40; // thm3
    bool max_n_given = false;
    unsigned max_m = 10;
    unsigned max_family = 20;   // conversion/ode
    unsigned truncation = 24;
    std::string format = "text";
    std::string out_path;
    bool full_failures = false;
    bool uncapped = false;
};

int run_verify(const VerifyOptions& opt) {
    VerifyOptions o = opt;
    if (o.max_n_given) {
        o.max_n_routes = o.max_n_grid;
    }
    const bool all = o.suite == "all";
    const bool thm1 = all || o.suite == "thm1";
    const bool thm2 = all || o.suite == "thm2";
    const bool thm3 = all || o.suite == "thm3";
    const bool op = all || o.suite == "operator";
    const bool monomial = all || o.suite == "monomial";
    const bool conversion = all || o.suite == "conversion";
    const bool ode = all || o.suite == "ode";

    if (thm1 || thm2 || op) {
        require_cap(o.uncapped, o.max_n_grid, kGridCap, "--max-N");
    }
    if (thm2 || op) {
        require_cap(o.uncapped, o.max_k, kGridCap, "--max-k");
    }
    if (thm3) {
        require_cap(o.uncapped, o.max_n_routes, kFamilyCap, "--max-N");
    }
    if (monomial) {
        require_cap(o.uncapped, o.max_m, kMonomialCap, "--max-m");
    }
    if (conversion || ode) {
        require_cap(o.uncapped, o.max_family, kFamilyCap, "--max-n");
    }
    if (thm1) {
        require_cap(o.uncapped, o.truncation, kTruncationCap, "--truncation");
        if (o.truncation < o.max_n_grid + 2) {
            throw UsageError("--truncation must be at least --max-N + 2");
        }
    }

    std::vector<appell::VerificationReport> reports;
    if (thm1) {
        reports.push_back(appell::suite_theorem1(o.max_n_grid, o.truncation));
    }
    if (thm2) {
        reports.push_back(appell::suite_theorem2(o.max_k, o.max_n_grid));
    }
    if (thm3) {
        reports.push_back(appell::suite_theorem3(o.max_n_routes));
    }
    if (op) {
        reports.push_back(appell::suite_operator_form(o.max_k, o.max_n_grid));
    }
    if (monomial) {
        reports.push_back(appell::suite_monomial(o.max_m));
    }
    if (conversion) {
        reports.push_back(appell::suite_conversion(o.max_family));
    }
    if (ode) {
        reports.push_back(appell::suite_ode(o.max_family));
    }

    // Test seam: lets the exit-code contract be exercised end to end even
    // though the real suites cannot fail.
    if (const char* inject = std::getenv("APPELL_VERIFY_INJECT_FAIL"); inject && *inject) {
        appell::VerificationReport injected{"injected", "-", {}};
        injected.failures.push_back({{{"injected", 1}}, "0", "1"});
        reports.push_back(std::move(injected));
    }

    const std::size_t shown = o.full_failures ? SIZE_MAX : 5;
    std::string text;
    if (o.format == "json") {
        std::string body;
        for (const auto& report : reports) {
            if (!body.empty()) {
                body += ',';
            }
            body += report.to_json(shown);
        }
        text = "[" + body + "]\n";
    } else {
        for (const auto& report : reports) {
            text += (report.passed() ? "PASS  " : "FAIL  ") + report.identity + "  " + report.grid;
            if (!report.passed()) {
                text += "  (" + std::to_string(report.failures.size()) + " failures)";
            }
            text += '\n';
            std::size_t listed = 0;
            for (const auto& failure : report.failures) {
                if (listed == shown) {
                    text += "  ... and " + std::to_string(report.failures.size() - listed) +
                            " more (rerun with --full-failures)\n";
                    break;
                }
                std::string point;
                for (const auto& [key, value] : failure.params) {
                    if (!point.empty()) {
                        point += ", ";
                    }
                    point += key + "=" + std::to_string(value);
                }
                text += "  " + point + ": lhs = " + failure.lhs + ", rhs = " + failure.rhs + '\n';
                ++listed;
            }
        }
    }
    emit(text, o.out_path);

    for (const auto& report : reports) {
        if (!report.passed()) {
            return 1;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hermite polynomial families, the ODE coefficient triangle of their "
                 "generating function, and machine verification of the related identities"};
    app.require_subcommand(1);

    TableOptions table;
    auto* table_cmd = app.add_subcommand("table", "Print the coefficient triangle a_i(N, v)");
    table_cmd->add_option("--max-n", table.max_n, "Largest row N")->required();
    table_cmd->add_flag("--matrix", table.matrix, "Square matrix view (a_i(j, v)) instead of the triangle");
    table_cmd->add_option("--format", table.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    table_cmd->add_option("--out", table.out_path, "Also write the output bytes to this file");
    table_cmd->add_flag("--unsafe-no-cap", table.uncapped, "Lift the hard parameter caps");

    PolyOptions poly;
    auto* poly_cmd = app.add_subcommand("poly", "Print or evaluate a Hermite polynomial");
    poly_cmd->add_option("--kind", poly.kind, "Polynomial family")
        ->required()->check(CLI::IsMember({"phys", "prob", "variance"}));
    poly_cmd->add_option("--n", poly.n, "Degree")->required();
    poly_cmd->add_option("--x", poly.x_text, "Evaluate at this exact rational x (\"p\" or \"p/q\")");
    poly_cmd->add_option("--nu", poly.nu_text, "Variance value (kind=variance only)");
    poly_cmd->add_option("--format", poly.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    poly_cmd->add_option("--out", poly.out_path, "Also write the output bytes to this file");
    poly_cmd->add_flag("--unsafe-no-cap", poly.uncapped, "Lift the hard parameter caps");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run the identity verification suites");
    verify_cmd->add_option("--suite", verify.suite, "Suite selection")
        ->check(CLI::IsMember({"all", "thm1", "thm2", "thm3", "operator", "monomial", "conversion", "ode"}))
        ->capture_default_str();
    verify_cmd->add_option("--max-k", verify.max_k, "Largest k for thm2/operator grids")->capture_default_str();
    auto* max_n_opt = verify_cmd->add_option("--max-N", verify.max_n_grid,
                                             "Largest N (thm1/thm2/operator grids; thm3 defaults to 40)");
    verify_cmd->add_option("--max-m", verify.max_m, "Largest m for the monomial suite")->capture_default_str();
    verify_cmd->add_option("--max-n", verify.max_family, "Largest n for conversion/ode suites")->capture_default_str();
    verify_cmd->add_option("--truncation", verify.truncation, "Series truncation order for thm1")->capture_default_str();
    verify_cmd->add_option("--format", verify.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    verify_cmd->add_option("--out", verify.out_path, "Also write the output bytes to this file");
    verify_cmd->add_flag("--full-failures", verify.full_failures, "List every failure instead of the first 5");
    verify_cmd->add_flag("--unsafe-no-cap", verify.uncapped, "Lift the hard parameter caps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    verify.max_n_given = max_n_opt->count() > 0;

    try {
        if (table_cmd->parsed()) {
            return run_table(table);
        }
        if (poly_cmd->parsed()) {
            return run_poly(poly);
        }
        return run_verify(verify);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
}
