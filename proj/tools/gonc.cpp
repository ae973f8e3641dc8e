// gonc: command-line front end for the goncarov library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "goncarov/commands.hpp"
#include "goncarov/error.hpp"
#include "goncarov/family.hpp"
#include "goncarov/json_io.hpp"
#include "goncarov/parking.hpp"
#include "goncarov/verify.hpp"

namespace {

constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

int run_compute(const gonc::ComputeRequest& request, bool pretty) {
    if (pretty) {
        std::cout << gonc::compute_poly(request).pretty() << '\n';
    } else {
        std::cout << gonc::compute_json(request).dump() << '\n';
    }
    return 0;
}

int run_verify(const std::string& suite, const gonc::VerifyOptions& options, bool pretty) {
    const auto reports = gonc::run_verify(suite, options);
    bool ok = true;
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& r : reports) {
        ok = ok && r.ok;
        if (pretty) {
            std::cout << (r.ok ? "PASS " : "FAIL ") << r.suite << ": " << r.name;
            if (!r.ok) std::cout << " -- " << r.detail;
            std::cout << '\n';
        }
        checks.push_back({{"suite", r.suite}, {"name", r.name}, {"ok", r.ok}, {"ops", r.ops}, {"detail", r.detail}});
    }
    if (!pretty) std::cout << nlohmann::json{{"suite", suite}, {"ok", ok}, {"checks", checks}}.dump() << '\n';
    if (!ok) {
        for (const auto& r : reports) {
            if (!r.ok) {
                std::cerr << "first failure: " << r.suite << ": " << r.name << ": " << r.detail << '\n';
                break;
            }
        }
        return kVerifyFailed;
    }
    return 0;
}

int run_list_families(bool pretty) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& name : gonc::builtin_family_names()) {
        const auto F = gonc::builtin_family(name);
        nlohmann::json decks = nlohmann::json::object();
        for (unsigned k = 1; k <= 6; ++k) decks[std::to_string(k)] = F.deck(k).get_str();
        if (pretty) {
            std::cout << name << '\n';
        } else {
            out.push_back({{"name", name}, {"d", decks}});
        }
    }
    if (!pretty) std::cout << out.dump() << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized Goncarov polynomials, parking functions and partition lattices"};
    app.require_subcommand(1, 1);

    gonc::ComputeRequest request;
    std::string kind;
    bool pretty = false;
    auto* compute = app.add_subcommand("compute", "compute an enumerator or Goncarov polynomial");
    compute->add_option("kind", kind, "zeta | mobius | hand | type | goncarov | goncarov-constant")->required();
    compute->add_option("--n", request.n, "degree")->capture_default_str();
    compute->add_option("--family", request.family, "builtin name or @file.json");
    compute->add_option("--basic", request.basic, "monomials | falling | zeta | mobius (when no --family)")->capture_default_str();
    compute->add_option("--grid", request.grid, "'z' (symbolic), comma-separated or JSON list")->capture_default_str();
    compute->add_flag("--negate-grid", request.negate_grid, "use -Z");
    compute->add_option("--y", request.y, "y assignments, e.g. all=1 or y3=2,y4=0");
    compute->add_option("--w", request.w, "w assignments, e.g. all=1");
    compute->add_option("--at", request.at, "evaluate, e.g. x=0");
    compute->add_flag("--pretty", pretty, "conventional notation instead of JSON");

    std::string suite;
    gonc::VerifyOptions options;
    std::string verify_grid;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "algebra | lattice | operator | goncarov | parking | family | cli | all")->required();
    verify->add_option("--n-max", options.n_max, "largest size (suite default if omitted)");
    verify->add_option("--grid", verify_grid, "integer grid for the parking suite, comma-separated");
    verify->add_option("--x", options.x, "evaluation point for the parking decomposition");
    verify->add_flag("--quick", options.quick, "smaller sizes");
    verify->add_flag("--pretty", pretty, "one line per check instead of JSON");

    std::string which;
    unsigned table_n = 5;
    std::string section;
    auto* tables = app.add_subcommand("tables", "emit a CSV table with a provenance column");
    tables->add_option("which", which, "a030019 | paper-goldens")->required();
    tables->add_option("--n-max", table_n, "rows 0..n-max-1 (a030019)")->capture_default_str();
    tables->add_option("--section", section, "paper-goldens section filter");

    auto* list = app.add_subcommand("list-families", "list builtin exponential families");
    list->add_flag("--pretty", pretty, "names only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (compute->parsed()) {
            request.kind = gonc::parse_compute_kind(kind);
            return run_compute(request, pretty);
        }
        if (verify->parsed()) {
            if (!verify_grid.empty()) {
                options.grid = gonc::parse_integer_list(verify_grid);
                gonc::ParkingVector check(options.grid);  // malformed grids are usage errors
            }
            return run_verify(suite, options, pretty);
        }
        if (tables->parsed()) {
            std::cout << gonc::table_csv(gonc::parse_table_kind(which), table_n, section);
            return 0;
        }
        return run_list_families(pretty);
    } catch (const gonc::Error& e) {
        std::cerr << "gonc: " << e.what() << '\n';
        return e.code() == gonc::ErrorCode::InternalCrossCheckFailure ? kVerifyFailed : kUsage;
    } catch (const std::exception& e) {
        std::cerr << "gonc: " << e.what() << '\n';
        return kUsage;
    }
}
