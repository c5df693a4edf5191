#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "levelset/contour.hpp"
#include "levelset/implicit_surfaces.hpp"
#include "levelset/runner.hpp"
#include "levelset/snapshot.hpp"

using namespace levelset;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("levelset_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

bool mentions(const std::exception& e, const std::string& needle) {
    return std::string(e.what()).find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("snapshots round-trip bit for bit") {
    const fs::path dir = fresh_dir("snapshot_roundtrip");
    const double pi = std::numbers::pi;
    auto g = Grid::create({-2.0, -2.0, -pi / 2.0}, {2.0, 2.0, pi / 2.0 - pi / 9.0}, {9, 9, 9}, {2});

    ScalarField v(g);
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = dist(rng);

    const double t = -0.75;
    write_snapshot(dir / "snap.bin", v, t);
    const Snapshot back = read_snapshot(dir / "snap.bin");

    CHECK(back.time == t);
    REQUIRE(back.grid->dim() == 3);
    for (int d = 0; d < 3; ++d) {
        CHECK(back.grid->count(d) == g->count(d));
        CHECK(back.grid->min(d) == g->min(d));   // 17 significant digits round-trip doubles
        CHECK(back.grid->max(d) == g->max(d));
        CHECK(back.grid->spacing(d) == doctest::Approx(g->spacing(d)).epsilon(1e-15));
    }
    REQUIRE(back.field.size() == v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        CHECK(back.field[i] == v[i]);
}

TEST_CASE("snapshot reader rejects malformed files") {
    const fs::path dir = fresh_dir("snapshot_errors");

    CHECK_THROWS_AS((void)read_snapshot(dir / "absent.bin"), std::runtime_error);

    {
        std::ofstream os(dir / "badheader.bin", std::ios::binary);
        os << "sizes 2\n";
    }
    CHECK_THROWS_AS((void)read_snapshot(dir / "badheader.bin"), std::runtime_error);

    {
        std::ofstream os(dir / "truncated.bin", std::ios::binary);
        os << "dims 1\ncounts 5\nmins 0\nmaxs 1\ntime 0\n";
        const double few[2] = {1.0, 2.0}; // payload needs 5 values
        os.write(reinterpret_cast<const char*>(few), sizeof(few));
    }
    CHECK_THROWS_AS((void)read_snapshot(dir / "truncated.bin"), std::runtime_error);

    {
        auto g = Grid::create({0.0}, {1.0}, {4});
        ScalarField v(g, 1.0);
        v[2] = std::numeric_limits<double>::quiet_NaN();
        write_snapshot(dir / "nonfinite.bin", v, 0.0);
    }
    CHECK_THROWS_AS((void)read_snapshot(dir / "nonfinite.bin"), std::runtime_error);
}

TEST_CASE("marching squares recovers a circle") {
    auto g = Grid::create({-1.0, -1.0}, {1.0, 1.0}, {81, 81});
    const ScalarField v = sphere(g, {0.0, 0.0}, 0.5);
    const std::vector<Segment2> segments = extract_zero_set_2d(v);
    REQUIRE(!segments.empty());

    const double dx = g->spacing(0);
    for (const Segment2& s : segments) {
        for (const Point2& p : {s.a, s.b}) {
            const double r = std::hypot(p.x, p.y);
            CHECK(std::abs(r - 0.5) <= dx);
        }
    }
    const double length = polyline_length(segments);
    CHECK(length == doctest::Approx(2.0 * std::numbers::pi * 0.5).epsilon(0.05));
}

TEST_CASE("marching squares puts a planar interface on the exact zero line") {
    auto g = Grid::create({-1.0, -1.0}, {1.0, 1.0}, {21, 21});
    ScalarField v(g);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = g->coords(0)[i];

    const std::vector<Segment2> segments = extract_zero_set_2d(v);
    REQUIRE(!segments.empty());
    for (const Segment2& s : segments) {
        CHECK(s.a.x == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(s.b.x == doctest::Approx(0.0).epsilon(1e-14));
    }
    CHECK(polyline_length(segments) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("strictly positive fields have an empty zero set") {
    auto g = Grid::create({0.0, 0.0}, {1.0, 1.0}, {11, 11});
    const ScalarField v(g, 0.25);
    CHECK(extract_zero_set_2d(v).empty());
    CHECK(polyline_length({}) == 0.0);
}

TEST_CASE("slice_2d pins one dimension and keeps the rest") {
    auto g = Grid::create({0.0, 0.0, 0.0}, {4.0, 5.0, 6.0}, {5, 6, 7});
    ScalarField v(g);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = g->coords(0)[i] + 10.0 * g->coords(1)[i] + 100.0 * g->coords(2)[i];

    const ScalarField w = slice_2d(v, 2, 3); // z = 3
    CHECK(w.grid().dim() == 2);
    CHECK(w.grid().count(0) == 5);
    CHECK(w.grid().count(1) == 6);
    CHECK(w.grid().max(0) == 4.0);
    CHECK(w.grid().max(1) == 5.0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double expect = w.grid().coords(0)[i] + 10.0 * w.grid().coords(1)[i] + 300.0;
        CHECK(w[i] == doctest::Approx(expect).epsilon(1e-14));
    }

    const ScalarField u = slice_2d(v, 0, 2); // x = 2
    CHECK(u.grid().count(0) == 6);
    CHECK(u.grid().count(1) == 7);
    CHECK(u[0] == doctest::Approx(2.0).epsilon(1e-14));

    CHECK_THROWS_AS((void)slice_2d(v, 2, 7), std::invalid_argument);
    CHECK_THROWS_AS((void)slice_2d(v, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)slice_2d(w, 0, 0), std::invalid_argument);
}

TEST_CASE("problem registry defaults") {
    const RunConfig rockets = default_config("rockets");
    CHECK(rockets.problem == "rockets");
    CHECK(rockets.grid_counts == 50);
    CHECK(rockets.t0 == -2.5);
    CHECK(rockets.t1 == 0.0);
    CHECK(rockets.checkpoints == 11);
    CHECK(rockets.scheme == "eno2");
    CHECK(rockets.integrator == "cfl_3");
    CHECK(rockets.clamp);

    const RunConfig rotation = default_config("rigid_rotation");
    CHECK(rotation.grid_counts == 101);
    CHECK(rotation.t0 == 0.0);
    CHECK(rotation.t1 == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-15));
    CHECK(rotation.scheme == "weno5");
    CHECK(!rotation.clamp);

    try {
        (void)default_config("pendulum");
        FAIL("expected a throw");
    } catch (const std::invalid_argument& e) {
        CHECK(mentions(e, "rockets"));
        CHECK(mentions(e, "rigid_rotation"));
    }
}

TEST_CASE("config entries parse and validate") {
    RunConfig c = default_config("rockets");
    apply_config_entry(c, "tspan", "-1.5, 0");
    CHECK(c.t0 == -1.5);
    CHECK(c.t1 == 0.0);
    apply_config_entry(c, "tspan", "0 6.28");
    CHECK(c.t0 == 0.0);
    CHECK(c.t1 == 6.28);
    apply_config_entry(c, "grid_counts", "41");
    CHECK(c.grid_counts == 41);
    apply_config_entry(c, "clamp", "off");
    CHECK(!c.clamp);
    apply_config_entry(c, "seed", "12345");
    CHECK(c.seed == 12345);

    CHECK_THROWS_AS(apply_config_entry(c, "grid_counts", "many"), std::invalid_argument);
    CHECK_THROWS_AS(apply_config_entry(c, "cfl_factor", "0.3x"), std::invalid_argument);
    CHECK_THROWS_AS(apply_config_entry(c, "clamp", "maybe"), std::invalid_argument);
    CHECK_THROWS_AS(apply_config_entry(c, "tspan", "1.0"), std::invalid_argument);
    CHECK_THROWS_AS(apply_config_entry(c, "banana", "1"), std::invalid_argument);
}

TEST_CASE("config files choose defaults by problem, then apply entries in order") {
    const fs::path dir = fresh_dir("config_files");
    {
        std::ofstream os(dir / "rotation.cfg");
        os << "# rotation study\n";
        os << "problem = rigid_rotation\n";
        os << "grid_counts = 41   # coarse\n";
        os << "tspan = 0, 1.0\n";
    }

    const RunConfig c = load_config(dir / "rotation.cfg", {});
    CHECK(c.problem == "rigid_rotation");
    CHECK(c.grid_counts == 41);          // file overrides the 101 default
    CHECK(c.scheme == "weno5");          // untouched default of the problem
    CHECK(c.t1 == 1.0);

    // command-line overrides run after the file
    const RunConfig d = load_config(dir / "rotation.cfg", {{"grid_counts", "31"}});
    CHECK(d.grid_counts == 31);

    // an override can switch the problem entirely; defaults follow it
    const RunConfig e = load_config(dir / "rotation.cfg", {{"problem", "rockets"}, {"tspan", "-2 0"}});
    CHECK(e.problem == "rockets");
    CHECK(e.clamp);
    CHECK(e.grid_counts == 41); // file entry still applies on top of rockets defaults
    CHECK(e.t0 == -2.0);

    CHECK_THROWS_AS((void)load_config(dir / "absent.cfg", {}), std::runtime_error);
    {
        std::ofstream os(dir / "broken.cfg");
        os << "problem rigid_rotation\n"; // missing '='
    }
    CHECK_THROWS_AS((void)load_config(dir / "broken.cfg", {}), std::invalid_argument);
}

TEST_CASE("config validation lists the valid names") {
    RunConfig c = default_config("rockets");
    c.scheme = "spectral";
    try {
        validate_config(c);
        FAIL("expected a throw");
    } catch (const std::invalid_argument& e) {
        CHECK(mentions(e, "first"));
        CHECK(mentions(e, "weno5"));
    }

    c = default_config("rockets");
    c.integrator = "rk4";
    try {
        validate_config(c);
        FAIL("expected a throw");
    } catch (const std::invalid_argument& e) {
        CHECK(mentions(e, "cfl_3"));
    }

    c = default_config("rockets");
    c.grid_counts = 3; // below the eno2 stencil minimum
    CHECK_THROWS_AS(validate_config(c), std::invalid_argument);

    c = default_config("rockets");
    c.checkpoints = 0;
    CHECK_THROWS_AS(validate_config(c), std::invalid_argument);

    c = default_config("rockets");
    c.cfl_factor = -0.1;
    CHECK_THROWS_AS(validate_config(c), std::invalid_argument);

    c = default_config("rockets");
    c.output_dir.clear();
    CHECK_THROWS_AS(validate_config(c), std::invalid_argument);
}

TEST_CASE("build_problem honors the configured scheme and clamp") {
    RunConfig c = default_config("rigid_rotation");
    c.grid_counts = 21;
    c.scheme = "eno3";
    c.clamp = true;
    const ProblemSetup setup = build_problem(c);
    CHECK(setup.problem.costate_scheme == DerivativeScheme::Eno3);
    CHECK(setup.problem.restrict_update);
    CHECK(setup.problem.grid->count(0) == 21);
}

TEST_CASE("run writes snapshots, zero sets, and a report") {
    const fs::path dir = fresh_dir("run_smoke");
    RunConfig c = default_config("rigid_rotation");
    c.grid_counts = 21;
    c.t1 = 0.35;
    c.checkpoints = 3;
    c.output_dir = (dir / "out").string();

    const RunReport report = run(c);
    CHECK(report.steps_taken > 0);
    CHECK(report.repeats == 1);
    CHECK(report.global_time_mean > 0.0);

    for (const char* name : {"snapshot_000.bin", "snapshot_001.bin", "snapshot_002.bin",
                             "zeroset_000.txt", "zeroset_001.txt", "zeroset_002.txt",
                             "report.txt"})
        CHECK(fs::exists(fs::path(c.output_dir) / name));

    // the first snapshot is the untouched initial surface
    const Snapshot first = read_snapshot(fs::path(c.output_dir) / "snapshot_000.bin");
    const ScalarField initial = rigid_rotation_problem(21).initial_value;
    CHECK(first.time == 0.0);
    REQUIRE(first.field.size() == initial.size());
    for (std::size_t i = 0; i < initial.size(); ++i)
        CHECK(first.field[i] == initial[i]);

    const Snapshot last = read_snapshot(fs::path(c.output_dir) / "snapshot_002.bin");
    CHECK(last.time == doctest::Approx(0.35).epsilon(1e-15));

    // the initial zero set is the circle of radius 0.5
    std::ifstream zs(fs::path(c.output_dir) / "zeroset_000.txt");
    REQUIRE(zs.good());
    std::vector<Segment2> segments;
    double ax, ay, bx, by;
    while (zs >> ax >> ay >> bx >> by)
        segments.push_back({{ax, ay}, {bx, by}});
    CHECK(polyline_length(segments) == doctest::Approx(std::numbers::pi).epsilon(0.05));

    std::ifstream rep(fs::path(c.output_dir) / "report.txt");
    std::string text((std::istreambuf_iterator<char>(rep)), std::istreambuf_iterator<char>());
    CHECK(text.find("problem rigid_rotation") != std::string::npos);
    CHECK(text.find("steps_taken") != std::string::npos);
    CHECK(text.find("hardware_note") != std::string::npos);
}

TEST_CASE("bench repeats the solve and reports aggregate timings") {
    const fs::path dir = fresh_dir("bench_smoke");
    RunConfig c = default_config("rigid_rotation");
    c.grid_counts = 15;
    c.t1 = 0.2;
    c.checkpoints = 2;
    c.output_dir = (dir / "out").string();

    const RunReport report = bench(c, 3);
    CHECK(report.repeats == 3);
    CHECK(report.steps_taken > 0);
    CHECK(report.global_time_mean > 0.0);
    CHECK(report.global_time_std >= 0.0);
    // per-step time times step count reproduces the mean solve time
    CHECK(report.avg_local_time * static_cast<double>(report.steps_taken) ==
          doctest::Approx(report.global_time_mean).epsilon(1e-12));
    CHECK(fs::exists(fs::path(c.output_dir) / "report.txt"));

    CHECK_THROWS_AS((void)bench(c, 0), std::invalid_argument);
}

TEST_CASE("convergence study reports shrinking errors and design orders") {
    const auto rows = convergence_study(DerivativeScheme::Eno2, 2, "sin");
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].n == 32);
    CHECK(rows[1].n == 64);
    CHECK(rows[2].n == 128);
    CHECK(std::isnan(rows[0].order));
    CHECK(rows[1].max_error < rows[0].max_error);
    CHECK(rows[1].order >= 1.8);
    CHECK(rows[2].order >= 1.8);

    const std::string table = format_convergence_table(rows);
    CHECK(table.find("n,dx,max_error,order") == 0);
    CHECK(table.find("\n32,") != std::string::npos);

    // linear data is reproduced to rounding by every scheme
    const auto flat = convergence_study(DerivativeScheme::Eno2, 1, "linear");
    CHECK(flat[0].exact);
    CHECK(flat[1].exact);
    CHECK(format_convergence_table(flat).find("exact") != std::string::npos);

    CHECK_THROWS_AS((void)convergence_study(DerivativeScheme::Eno2, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)convergence_study(DerivativeScheme::Eno2, 1, "cubic"),
                    std::invalid_argument);
}
