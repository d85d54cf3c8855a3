#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "struveint/errors.hpp"
#include "struveint/suite.hpp"

namespace {

constexpr int kExitPolicyFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitInfrastructureError = 3;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerically verify the generalized-Struve integral identities"};

    std::string config_path;
    std::vector<std::string> only;
    double tol = 0.0;
    double quad_tol = 0.0;
    std::string format;
    std::string out_path;
    std::uint64_t seed = 0;
    std::string fail_on;

    app.add_option("--config", config_path, "Suite configuration file (JSON)");
    app.add_option("--only", only, "Restrict to these case ids (repeatable)");
    app.add_option("--tol", tol, "Confirmation tolerance");
    app.add_option("--quad-tol", quad_tol, "Quadrature tolerance");
    app.add_option("--format", format, "Output format: json|csv|md");
    app.add_option("--out", out_path, "Output path (default: stdout)");
    app.add_option("--seed", seed, "Random-sampling seed");
    app.add_option("--fail-on", fail_on, "Exit policy: derived_discrepant|any_discrepant|never");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        std::cerr << e.what() << "\n";
        return kExitConfigError;
    }

    struveint::SuiteConfig cfg;
    try {
        cfg = config_path.empty() ? struveint::default_config()
                                  : struveint::load_config(config_path);
        if (app.count("--tol") > 0) {
            cfg.tol = tol;
            if (app.count("--quad-tol") == 0) {
                cfg.quad_tol = tol / 100.0;
            }
        }
        if (app.count("--quad-tol") > 0) {
            cfg.quad_tol = quad_tol;
        }
        if (app.count("--format") > 0) {
            cfg.format = struveint::output_format_from_string(format);
        }
        if (app.count("--out") > 0) {
            cfg.output_path = out_path;
        }
        if (app.count("--seed") > 0) {
            cfg.seed = seed;
        }
        if (app.count("--fail-on") > 0) {
            cfg.fail_on = struveint::fail_policy_from_string(fail_on);
        }
        if (!only.empty()) {
            std::vector<struveint::CaseId> keep;
            for (const std::string& s : only) {
                keep.push_back(struveint::case_id_from_string(s));
            }
            std::vector<struveint::CaseSelector> filtered;
            for (const auto& sel : cfg.cases) {
                for (struveint::CaseId id : keep) {
                    if (sel.id == id) {
                        filtered.push_back(sel);
                        break;
                    }
                }
            }
            cfg.cases = filtered;
        }
        cfg.validate();
    } catch (const struveint::Error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfigError;
    }

    try {
        const auto reports = struveint::run_suite(cfg);
        struveint::emit_report(reports, cfg, cfg.format, cfg.output_path);
        return struveint::exit_code(reports, cfg.fail_on) == 0 ? 0 : kExitPolicyFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfrastructureError;
    }
}
