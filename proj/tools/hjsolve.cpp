// Command-line driver for the level-set solver library.
//
//   hjsolve run ...           solve a registered problem, write snapshots,
//                             zero-set extractions and a report
//   hjsolve bench ...         time repeated identical solves
//   hjsolve convergence ...   derivative accuracy study (CSV)

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "levelset/runner.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::string problem;
    int grid_counts = 0;
    std::vector<double> tspan;
    int checkpoints = 0;
    std::string scheme;
    std::string integrator;
    double cfl_factor = 0.0;
    std::string clamp;
    std::string output;
    std::uint64_t seed = 0;
};

void add_common_flags(CLI::App& cmd, CommonFlags& flags) {
    cmd.add_option("--config", flags.config_path, "flat key = value config file")
        ->check(CLI::ExistingFile);
    cmd.add_option("--problem", flags.problem, "problem name (rockets, rigid_rotation)");
    cmd.add_option("--grid-counts", flags.grid_counts, "nodes per grid dimension");
    cmd.add_option("--tspan", flags.tspan, "time span start and end")->expected(2);
    cmd.add_option("--checkpoints", flags.checkpoints, "number of checkpoints including the initial field");
    cmd.add_option("--scheme", flags.scheme, "derivative scheme (first, eno2, eno3, weno5)");
    cmd.add_option("--integrator", flags.integrator, "time integrator (cfl_1, cfl_2, cfl_3)");
    cmd.add_option("--cfl-factor", flags.cfl_factor, "fraction of the CFL bound per step");
    cmd.add_option("--clamp", flags.clamp, "monotone update clamp (true/false)");
    cmd.add_option("--output", flags.output, "output directory");
    cmd.add_option("--seed", flags.seed, "seed for randomized sampling utilities");
}

levelset::RunConfig config_from(const CLI::App& cmd, const CommonFlags& flags) {
    std::vector<std::pair<std::string, std::string>> overrides;
    auto passed = [&cmd](const std::string& name) { return cmd.count(name) > 0; };

    if (passed("--problem")) overrides.emplace_back("problem", flags.problem);
    if (passed("--grid-counts")) overrides.emplace_back("grid_counts", std::to_string(flags.grid_counts));
    if (passed("--tspan")) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g %.17g", flags.tspan[0], flags.tspan[1]);
        overrides.emplace_back("tspan", buf);
    }
    if (passed("--checkpoints")) overrides.emplace_back("checkpoints", std::to_string(flags.checkpoints));
    if (passed("--scheme")) overrides.emplace_back("scheme", flags.scheme);
    if (passed("--integrator")) overrides.emplace_back("integrator", flags.integrator);
    if (passed("--cfl-factor")) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.17g", flags.cfl_factor);
        overrides.emplace_back("cfl_factor", buf);
    }
    if (passed("--clamp")) overrides.emplace_back("clamp", flags.clamp);
    if (passed("--output")) overrides.emplace_back("output_dir", flags.output);
    if (passed("--seed")) overrides.emplace_back("seed", std::to_string(flags.seed));

    std::optional<std::filesystem::path> file;
    if (!flags.config_path.empty())
        file = flags.config_path;
    return levelset::load_config(file, overrides);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamilton-Jacobi level-set solver"};
    app.require_subcommand(1);

    CommonFlags run_flags;
    CLI::App* run_cmd = app.add_subcommand("run", "solve and write snapshots, zero sets and a report");
    add_common_flags(*run_cmd, run_flags);

    CommonFlags bench_flags;
    int repeats = 20;
    CLI::App* bench_cmd = app.add_subcommand("bench", "time repeated identical solves");
    add_common_flags(*bench_cmd, bench_flags);
    bench_cmd->add_option("--repeats", repeats, "number of timed solves");

    std::string conv_scheme = "weno5";
    int refinements = 3;
    std::string profile = "sin";
    std::string conv_output;
    CLI::App* conv_cmd = app.add_subcommand("convergence", "derivative accuracy study (CSV)");
    conv_cmd->add_option("--scheme", conv_scheme, "derivative scheme (first, eno2, eno3, weno5)");
    conv_cmd->add_option("--refinements", refinements, "number of grid doublings from n = 32");
    conv_cmd->add_option("--profile", profile, "test profile (sin, linear)");
    conv_cmd->add_option("--output", conv_output, "write the CSV here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            const levelset::RunConfig config = config_from(*run_cmd, run_flags);
            const levelset::RunReport report = levelset::run(config);
            std::cout << "wrote " << config.checkpoints << " snapshots to " << config.output_dir
                      << " (" << report.steps_taken << " steps, " << report.global_time_mean
                      << " s)\n";
        } else if (bench_cmd->parsed()) {
            const levelset::RunConfig config = config_from(*bench_cmd, bench_flags);
            const levelset::RunReport report = levelset::bench(config, repeats);
            std::cout << "global_time_mean " << report.global_time_mean << "\n"
                      << "global_time_std " << report.global_time_std << "\n"
                      << "avg_local_time " << report.avg_local_time << "\n"
                      << "steps_taken " << report.steps_taken << "\n"
                      << "repeats " << report.repeats << "\n";
        } else if (conv_cmd->parsed()) {
            const auto rows = levelset::convergence_study(levelset::parse_scheme(conv_scheme),
                                                          refinements, profile);
            const std::string table = levelset::format_convergence_table(rows);
            if (conv_output.empty()) {
                std::cout << table;
            } else {
                std::ofstream os(conv_output);
                if (!os) {
                    std::cerr << "error: cannot open " << conv_output << " for writing\n";
                    return 1;
                }
                os << table;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
