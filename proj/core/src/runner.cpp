#include "levelset/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "levelset/contour.hpp"
#include "levelset/snapshot.hpp"

namespace levelset {

namespace {

const char* kProblems = "rockets, rigid_rotation";
const char* kSchemes = "first, eno2, eno3, weno5";
const char* kIntegrators = "cfl_1, cfl_2, cfl_3";

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_real(const std::string& value, const std::string& key) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: '" + key + "' expects a real number, got '" + value + "'");
    }
    if (trim(value.substr(used)).size())
        throw std::invalid_argument("config: '" + key + "' expects a real number, got '" + value + "'");
    return v;
}

long parse_integer(const std::string& value, const std::string& key) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(value, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: '" + key + "' expects an integer, got '" + value + "'");
    }
    if (trim(value.substr(used)).size())
        throw std::invalid_argument("config: '" + key + "' expects an integer, got '" + value + "'");
    return v;
}

bool parse_flag(const std::string& value, const std::string& key) {
    if (value == "true" || value == "1" || value == "on" || value == "yes")
        return true;
    if (value == "false" || value == "0" || value == "off" || value == "no")
        return false;
    throw std::invalid_argument("config: '" + key + "' expects a boolean, got '" + value + "'");
}

} // namespace

RunConfig default_config(const std::string& problem) {
    if (problem == "rockets")
        return RunConfig{};
    if (problem == "rigid_rotation") {
        RunConfig config;
        config.problem = "rigid_rotation";
        config.grid_counts = 101;
        config.t0 = 0.0;
        config.t1 = 2.0 * std::numbers::pi;
        config.checkpoints = 11;
        config.scheme = "weno5";
        config.integrator = "cfl_3";
        config.clamp = false;
        return config;
    }
    throw std::invalid_argument("config: unknown problem '" + problem + "' (valid: " +
                                std::string(kProblems) + ")");
}

void apply_config_entry(RunConfig& config, const std::string& key, const std::string& value) {
    if (key == "problem") {
        config.problem = value;
    } else if (key == "grid_counts") {
        config.grid_counts = static_cast<int>(parse_integer(value, key));
    } else if (key == "tspan") {
        std::istringstream ss(value);
        double a = 0.0, b = 0.0;
        char sep = ' ';
        if (!(ss >> a))
            throw std::invalid_argument("config: 'tspan' expects two reals, got '" + value + "'");
        ss >> std::ws;
        if (ss.peek() == ',')
            ss >> sep;
        if (!(ss >> b))
            throw std::invalid_argument("config: 'tspan' expects two reals, got '" + value + "'");
        config.t0 = a;
        config.t1 = b;
    } else if (key == "checkpoints") {
        config.checkpoints = static_cast<int>(parse_integer(value, key));
    } else if (key == "scheme") {
        config.scheme = value;
    } else if (key == "integrator") {
        config.integrator = value;
    } else if (key == "cfl_factor") {
        config.cfl_factor = parse_real(value, key);
    } else if (key == "clamp") {
        config.clamp = parse_flag(value, key);
    } else if (key == "output_dir") {
        config.output_dir = value;
    } else if (key == "seed") {
        config.seed = static_cast<std::uint64_t>(parse_integer(value, key));
    } else {
        throw std::invalid_argument("config: unknown key '" + key + "'");
    }
}

RunConfig load_config(const std::optional<std::filesystem::path>& file,
                      const std::vector<std::pair<std::string, std::string>>& overrides) {
    std::vector<std::pair<std::string, std::string>> entries;
    if (file) {
        std::ifstream is(*file);
        if (!is)
            throw std::runtime_error("config: cannot open " + file->string());
        std::string line;
        int line_no = 0;
        while (std::getline(is, line)) {
            ++line_no;
            const auto hash = line.find('#');
            if (hash != std::string::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                            " is not a key = value assignment");
            entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        }
    }

    // The problem name decides the defaults; later assignments override.
    std::string problem = "rockets";
    for (const auto& [key, value] : entries)
        if (key == "problem")
            problem = value;
    for (const auto& [key, value] : overrides)
        if (key == "problem")
            problem = value;

    RunConfig config = default_config(problem);
    for (const auto& [key, value] : entries)
        apply_config_entry(config, key, value);
    for (const auto& [key, value] : overrides)
        apply_config_entry(config, key, value);
    return config;
}

DerivativeScheme parse_scheme(const std::string& name) {
    if (name == "first") return DerivativeScheme::First;
    if (name == "eno2") return DerivativeScheme::Eno2;
    if (name == "eno3") return DerivativeScheme::Eno3;
    if (name == "weno5") return DerivativeScheme::Weno5;
    throw std::invalid_argument("unknown scheme '" + name + "' (valid: " + std::string(kSchemes) + ")");
}

TimeIntegrator parse_integrator(const std::string& name) {
    if (name == "cfl_1") return TimeIntegrator::Cfl1;
    if (name == "cfl_2") return TimeIntegrator::Cfl2;
    if (name == "cfl_3") return TimeIntegrator::Cfl3;
    throw std::invalid_argument("unknown integrator '" + name + "' (valid: " +
                                std::string(kIntegrators) + ")");
}

void validate_config(const RunConfig& config) {
    if (config.problem != "rockets" && config.problem != "rigid_rotation")
        throw std::invalid_argument("config: unknown problem '" + config.problem + "' (valid: " +
                                    std::string(kProblems) + ")");
    const DerivativeScheme scheme = parse_scheme(config.scheme);
    parse_integrator(config.integrator);
    if (config.grid_counts < min_nodes(scheme))
        throw std::invalid_argument("config: grid_counts must be at least " +
                                    std::to_string(min_nodes(scheme)) + " for scheme " + config.scheme);
    if (config.checkpoints < 1)
        throw std::invalid_argument("config: checkpoints must be at least 1");
    if (!(config.cfl_factor > 0.0))
        throw std::invalid_argument("config: cfl_factor must be positive");
    if (!std::isfinite(config.t0) || !std::isfinite(config.t1))
        throw std::invalid_argument("config: tspan must be finite");
    if (config.output_dir.empty())
        throw std::invalid_argument("config: output_dir must not be empty");
}

ProblemSetup build_problem(const RunConfig& config) {
    validate_config(config);
    ProblemSetup setup = config.problem == "rockets"
                             ? build_rocket_problem(config.grid_counts)
                             : rigid_rotation_problem(config.grid_counts);
    setup.problem.costate_scheme = parse_scheme(config.scheme);
    setup.problem.restrict_update = config.clamp;
    return setup;
}

namespace {

SolveOutcome solve_configured(const RunConfig& config, const ProblemSetup& setup) {
    IntegratorOptions opts;
    opts.cfl_factor = config.cfl_factor;
    return solve_brt(setup, {config.t0, config.t1}, config.checkpoints,
                     parse_integrator(config.integrator), opts);
}

RunReport report_from(const std::vector<double>& times, long steps, int repeats) {
    RunReport report;
    report.repeats = repeats;
    report.steps_taken = steps;
    double mean = 0.0;
    for (double t : times)
        mean += t;
    mean /= static_cast<double>(times.size());
    report.global_time_mean = mean;
    if (times.size() > 1) {
        double ss = 0.0;
        for (double t : times)
            ss += (t - mean) * (t - mean);
        report.global_time_std = std::sqrt(ss / static_cast<double>(times.size() - 1));
    }
    report.avg_local_time = steps > 0 ? mean / static_cast<double>(steps) : 0.0;
    return report;
}

void write_zero_set(const std::filesystem::path& path, const ScalarField& field) {
    // 3-D fields are viewed through their middle slice along the last dim.
    const int dim = field.grid().dim();
    const ScalarField view =
        dim >= 3 ? slice_2d(field, dim - 1, field.grid().count(dim - 1) / 2) : field;

    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("run: cannot open " + path.string() + " for writing");
    os << std::setprecision(17);
    for (const Segment2& s : extract_zero_set_2d(view))
        os << s.a.x << " " << s.a.y << " " << s.b.x << " " << s.b.y << "\n";
}

} // namespace

RunReport run(const RunConfig& config) {
    ProblemSetup setup = build_problem(config);
    std::filesystem::create_directories(config.output_dir);

    SolveOutcome outcome = solve_configured(config, setup);

    char name[32];
    for (std::size_t k = 0; k < outcome.checkpoints.size(); ++k) {
        std::snprintf(name, sizeof(name), "snapshot_%03zu.bin", k);
        write_snapshot(std::filesystem::path(config.output_dir) / name, outcome.checkpoints[k],
                       outcome.checkpoint_times[k]);
        std::snprintf(name, sizeof(name), "zeroset_%03zu.txt", k);
        write_zero_set(std::filesystem::path(config.output_dir) / name, outcome.checkpoints[k]);
    }

    RunReport report = report_from({outcome.integration_seconds},
                                   static_cast<long>(outcome.steps.size()), 1);
    write_report(std::filesystem::path(config.output_dir) / "report.txt", report, config);
    return report;
}

RunReport bench(const RunConfig& config, int repeats) {
    if (repeats < 1)
        throw std::invalid_argument("bench: repeats must be at least 1");
    ProblemSetup setup = build_problem(config);

    std::vector<double> times;
    long steps = -1;
    for (int r = 0; r < repeats; ++r) {
        SolveOutcome outcome = solve_configured(config, setup);
        times.push_back(outcome.integration_seconds);
        const long this_steps = static_cast<long>(outcome.steps.size());
        if (steps >= 0 && this_steps != steps)
            throw std::runtime_error("bench: step count varied across repeats; solves should be deterministic");
        steps = this_steps;
    }

    RunReport report = report_from(times, steps, repeats);
    std::filesystem::create_directories(config.output_dir);
    write_report(std::filesystem::path(config.output_dir) / "report.txt", report, config);
    return report;
}

std::vector<ConvergenceRow> convergence_study(DerivativeScheme scheme, int refinements,
                                              const std::string& profile) {
    if (refinements < 1)
        throw std::invalid_argument("convergence_study: refinements must be at least 1");
    if (profile != "sin" && profile != "linear")
        throw std::invalid_argument("convergence_study: unknown profile '" + profile +
                                    "' (valid: sin, linear)");
    const bool periodic = profile == "sin";
    constexpr double two_pi = 2.0 * std::numbers::pi;

    std::vector<ConvergenceRow> rows;
    for (int level = 0; level <= refinements; ++level) {
        const int n = 32 << level;
        GridPtr grid = periodic
                           ? Grid::create({0.0}, {1.0 - 1.0 / static_cast<double>(n)}, {n}, {0})
                           : Grid::create({0.0}, {1.0}, {n});
        ScalarField v(grid);
        for (int i = 0; i < n; ++i) {
            const double x = grid->axis(0)[static_cast<std::size_t>(i)];
            v[static_cast<std::size_t>(i)] = periodic ? std::sin(two_pi * x) : x;
        }

        DerivativePair pair = upwind_derivative(v, 0, scheme);
        double max_error = 0.0;
        for (int i = 0; i < n; ++i) {
            const double x = grid->axis(0)[static_cast<std::size_t>(i)];
            const double truth = periodic ? two_pi * std::cos(two_pi * x) : 1.0;
            max_error = std::max(max_error,
                                 std::abs(pair.left[static_cast<std::size_t>(i)] - truth));
            max_error = std::max(max_error,
                                 std::abs(pair.right[static_cast<std::size_t>(i)] - truth));
        }

        ConvergenceRow row;
        row.n = n;
        row.dx = grid->spacing(0);
        row.max_error = max_error;
        row.exact = max_error <= 1e-12;
        row.order = rows.empty() ? std::numeric_limits<double>::quiet_NaN()
                                 : std::log2(rows.back().max_error / max_error);
        rows.push_back(row);
    }
    return rows;
}

std::string format_convergence_table(const std::vector<ConvergenceRow>& rows) {
    std::ostringstream os;
    os << std::setprecision(12);
    os << "n,dx,max_error,order\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ConvergenceRow& row = rows[i];
        os << row.n << "," << row.dx << "," << row.max_error << ",";
        if (i == 0)
            os << "";
        else if (row.exact && rows[i - 1].exact)
            os << "exact";
        else
            os << row.order;
        os << "\n";
    }
    return os.str();
}

void write_report(const std::filesystem::path& path, const RunReport& report,
                  const RunConfig& config) {
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("report: cannot open " + path.string() + " for writing");
    os << std::setprecision(17);
    os << "problem " << config.problem << "\n";
    os << "grid_counts " << config.grid_counts << "\n";
    os << "scheme " << config.scheme << "\n";
    os << "integrator " << config.integrator << "\n";
    os << "cfl_factor " << config.cfl_factor << "\n";
    os << "clamp " << (config.clamp ? "true" : "false") << "\n";
    os << "seed " << config.seed << "\n";
    os << "global_time_mean " << report.global_time_mean << "\n";
    os << "global_time_std " << report.global_time_std << "\n";
    os << "avg_local_time " << report.avg_local_time << "\n";
    os << "steps_taken " << report.steps_taken << "\n";
    os << "repeats " << report.repeats << "\n";
    os << "hardware_note wall-clock timings depend on host hardware and load;"
          " compare them only within a single machine\n";
}

} // namespace levelset
