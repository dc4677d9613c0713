// Command line front end: runs scenario files and writes their reports.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hsg/runner.hpp"
#include "hsg/serialize.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Numerical experiments with semigroups of holomorphic self-maps of the upper half-plane"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::string out_dir = "out";
    std::optional<double> tol;
    std::optional<double> horizon;
    std::string format = "csv";

    CLI::App* run_cmd = app.add_subcommand("run", "Run one or more scenario files");
    run_cmd->add_option("files", files, "Scenario JSON files")->required();
    run_cmd->add_option("--out", out_dir, "Output directory (reports go to <out>/<scenario name>/)");
    run_cmd->add_option("--tol", tol, "Relative tolerance for the ODE and quadrature (scenario values win)")
        ->check(CLI::PositiveNumber);
    run_cmd->add_option("--horizon", horizon, "Final time t_max (scenario values win)")->check(CLI::Range(1.0, 1e300));
    run_cmd->add_option("--format", format, "Series output format")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : hsg::kExitInputError;
    }

    hsg::ScenarioDefaults defaults{horizon, tol};
    hsg::RunOptions opts;
    opts.out_dir = out_dir;
    opts.format = format == "json" ? hsg::OutputFormat::json : hsg::OutputFormat::csv;

    bool input_error = false;
    bool disagreement = false;
    for (const std::string& file : files) {
        try {
            const hsg::Scenario scenario = hsg::load_scenario(file, defaults);
            const hsg::RunOutcome outcome = hsg::run(scenario, opts);
            for (const std::string& m : outcome.messages) std::cerr << scenario.name << ": " << m << '\n';
            std::cout << scenario.name << ": " << (outcome.exit_code == hsg::kExitOk ? "ok" : "cross-validation disagreement")
                      << ", " << outcome.files.size() << " files in " << (opts.out_dir / scenario.name).string() << '\n';
            disagreement = disagreement || outcome.exit_code == hsg::kExitDisagreement;
        } catch (const hsg::SchemaError& e) {
            std::cerr << "error: " << e.what() << '\n';
            input_error = true;
        } catch (const hsg::DomainError& e) {
            std::cerr << "error: " << file << ": " << e.what() << '\n';
            input_error = true;
        } catch (const std::exception& e) {
            std::cerr << "error: " << file << ": " << e.what() << '\n';
            input_error = true;
        }
    }
    if (input_error) return hsg::kExitInputError;
    return disagreement ? hsg::kExitDisagreement : hsg::kExitOk;
}
