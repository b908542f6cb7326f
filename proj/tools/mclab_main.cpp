// mclab command line: run the configured experiments and emit the report.
//
//   mclab run --method generated,ellipse-1:1 --trials 175000 --seed 1
//   mclab run --all --workers 4 --format csv --out report.csv
//   mclab run --list-methods
//
// Exit codes: 0 success, 2 configuration error, 3 sampler non-convergence.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mclab/errors.hpp"
#include "mclab/runner.hpp"
#include "mclab/version.hpp"

namespace {

int run_command(const std::vector<std::string>& methods, bool all,
                bool list_methods, std::uint64_t trials, std::uint64_t seed,
                int workers, const std::string& format,
                const std::string& out_path) {
    using namespace mclab;

    if (list_methods) {
        for (const std::string& name : runner::method_names()) {
            std::cout << name << '\n';
        }
        return 0;
    }

    runner::ExperimentConfig config;
    config.trials = trials;
    config.seed = seed;
    config.workers = workers;
    if (format == "csv") {
        config.format = runner::OutputFormat::csv;
    } else if (format == "json") {
        config.format = runner::OutputFormat::json;
    } else if (format == "table") {
        config.format = runner::OutputFormat::table;
    } else {
        throw ConfigError("unknown format: " + format);
    }

    if (all) {
        config.methods = runner::method_names();
    } else {
        config.methods = methods;
    }
    if (config.methods.empty()) {
        throw ConfigError("no methods selected; use --method or --all");
    }

    const runner::ExperimentReport report = runner::run(config);

    if (out_path.empty()) {
        runner::emit(report, config.format, std::cout);
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return 1;
    }
    runner::emit(report, config.format, out);
    if (!out) {
        std::cerr << "error: write to " << out_path << " failed\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo laboratory for classic geometric-probability "
                 "problems"};
    app.set_version_flag("--version", mclab::kVersion);
    app.require_subcommand(0, 1);

    std::vector<std::string> methods;
    bool all = false;
    bool list_methods = false;
    std::uint64_t trials = 175000;
    std::uint64_t seed = 1;
    int workers = 1;
    std::string format = "table";
    std::string out_path;

    CLI::App* run = app.add_subcommand("run", "run experiments");
    run->add_option("--method", methods,
                    "comma-separated method names (see --list-methods)")
        ->delimiter(',');
    run->add_flag("--all", all, "run every known method");
    run->add_flag("--list-methods", list_methods,
                  "print the method registry and exit");
    run->add_option("--trials", trials, "trials per experiment")
        ->capture_default_str();
    run->add_option("--seed", seed, "root seed")->capture_default_str();
    run->add_option("--workers", workers, "parallel workers")
        ->capture_default_str();
    run->add_option("--format", format, "csv|json|table")
        ->capture_default_str();
    run->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (!run->parsed()) {
        std::cout << app.help();
        return 0;
    }

    try {
        return run_command(methods, all, list_methods, trials, seed, workers,
                           format, out_path);
    } catch (const mclab::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const mclab::NonConvergenceError& e) {
        std::cerr << "non-convergence: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
