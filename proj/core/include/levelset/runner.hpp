#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "levelset/integrator.hpp"
#include "levelset/reachability.hpp"
#include "levelset/spatial_derivatives.hpp"

namespace levelset {

/// Everything needed to reproduce a solve.
struct RunConfig {
    std::string problem = "rockets";
    int grid_counts = 50;
    double t0 = -2.5;
    double t1 = 0.0;
    int checkpoints = 11;
    std::string scheme = "eno2";
    std::string integrator = "cfl_3";
    double cfl_factor = 0.32;
    bool clamp = true;
    std::string output_dir = "out";
    std::uint64_t seed = 0;
};

/// Aggregate timing results of one or more identical solves.
struct RunReport {
    double global_time_mean = 0.0;  // seconds per full solve
    double global_time_std = 0.0;   // 0 when repeats == 1
    double avg_local_time = 0.0;    // seconds per accepted step
    long steps_taken = 0;
    int repeats = 1;
};

/// Problem registry defaults: rockets (3-D pursuit game, backward tube) or
/// rigid_rotation (2-D advection validation).  Throws on unknown names,
/// listing the valid ones.
RunConfig default_config(const std::string& problem);

/// Parses one `key = value` assignment into the config.  Unknown keys and
/// malformed values throw std::invalid_argument.
void apply_config_entry(RunConfig& config, const std::string& key, const std::string& value);

/// Reads a flat key = value config file ('#' starts a comment).  The
/// config starts from the file's problem defaults (or the rockets defaults),
/// then `overrides` are applied in order.
RunConfig load_config(const std::optional<std::filesystem::path>& file,
                      const std::vector<std::pair<std::string, std::string>>& overrides);

/// Rejects invalid names and out-of-range numerics before any compute.
void validate_config(const RunConfig& config);

DerivativeScheme parse_scheme(const std::string& name);
TimeIntegrator parse_integrator(const std::string& name);

/// Builds the configured problem with the configured scheme and clamp.
ProblemSetup build_problem(const RunConfig& config);

/// Solves the configured problem and writes per-checkpoint snapshot files
/// (snapshot_###.bin), per-checkpoint zero-set segment files
/// (zeroset_###.txt; 3-D fields are sliced at the middle index of the last
/// dimension), and report.txt into config.output_dir.
RunReport run(const RunConfig& config);

/// Times `repeats` identical solves without writing snapshots, then writes
/// report.txt into config.output_dir.  Step counts must agree across
/// repeats (solves are deterministic).
RunReport bench(const RunConfig& config, int repeats);

/// One resolution level of a derivative accuracy study.
struct ConvergenceRow {
    int n = 0;
    double dx = 0.0;
    double max_error = 0.0;
    double order = 0.0;   // NaN on the coarsest level
    bool exact = false;   // error at rounding level; order not meaningful
};

/// Measures max-norm derivative error against the analytic derivative over
/// grids n = 32, 64, ..., 32 * 2^refinements.  Profiles:
///   "sin"     periodic sin(2 pi x) on one period
///   "linear"  v = x with extrapolating boundaries
std::vector<ConvergenceRow> convergence_study(DerivativeScheme scheme, int refinements,
                                              const std::string& profile = "sin");

/// Renders rows as a CSV table (n, dx, max_error, order).
std::string format_convergence_table(const std::vector<ConvergenceRow>& rows);

/// Writes the plain-text report format (key value lines plus a hardware
/// disclaimer for the timing fields).
void write_report(const std::filesystem::path& path, const RunReport& report,
                  const RunConfig& config);

} // namespace levelset
