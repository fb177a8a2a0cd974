#include <CLI11.hpp>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "slfem/runner.hpp"

namespace {

std::vector<std::string> split_values(const std::string& csv) {
    std::vector<std::string> out;
    std::istringstream stream(csv);
    std::string item;
    while (std::getline(stream, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2D strain-limiting elasticity solver for the compressed edge-crack benchmark"};
    app.require_subcommand(1);

    std::string config_path;
    std::string output_prefix;
    CLI::App* solve = app.add_subcommand("solve", "run a single configuration");
    solve->add_option("config", config_path, "path to a `key = value` config file")->required();
    solve->add_option("--output-prefix", output_prefix, "override the config's output prefix");

    std::string sweep_config;
    std::string sweep_key;
    std::string sweep_values;
    CLI::App* sweep = app.add_subcommand("sweep", "run a parameter sweep over one key");
    sweep->add_option("config", sweep_config, "path to the base config file")->required();
    sweep->add_option("--key", sweep_key, "one of alpha, beta, load_c, fiber")->required();
    sweep->add_option("--values", sweep_values, "comma-separated values")->required();

    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in invariant checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            slfem::RunConfig cfg = slfem::load_config(config_path);
            if (!output_prefix.empty()) cfg.output_prefix = output_prefix;
            const slfem::RunResult result = slfem::run_single(cfg);
            std::cout << (result.report.converged ? "converged" : "NOT converged") << " in "
                      << result.report.iterations << " iterations, max beta*s "
                      << result.report.max_beta_s_final << '\n';
            return result.exit_status;
        }
        if (sweep->parsed()) {
            const slfem::RunConfig base = slfem::load_config(sweep_config);
            return slfem::run_sweep(base, sweep_key, split_values(sweep_values));
        }
        if (selftest->parsed()) return slfem::run_selftest();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
