#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "levelset/grid.hpp"
#include "levelset/spatial_derivatives.hpp"

using namespace levelset;

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

ScalarField sample_1d(GridPtr g, double (*f)(double)) {
    ScalarField v(g);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = f(g->axis(0)[i]);
    return v;
}

/// One period of sin(2 pi x) sampled without the duplicate endpoint.
GridPtr periodic_unit_grid(int n) {
    return Grid::create({0.0}, {1.0 - 1.0 / static_cast<double>(n)}, {n}, {0});
}

double measured_order(DerivativeScheme scheme, int coarse_n) {
    double errors[2];
    for (int level = 0; level < 2; ++level) {
        const int n = coarse_n << level;
        auto g = periodic_unit_grid(n);
        const ScalarField v = sample_1d(g, [](double x) { return std::sin(two_pi * x); });
        const DerivativePair d = upwind_derivative(v, 0, scheme);
        double err = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const double truth = two_pi * std::cos(two_pi * g->axis(0)[i]);
            err = std::max(err, std::abs(d.left[i] - truth));
            err = std::max(err, std::abs(d.right[i] - truth));
        }
        errors[level] = err;
    }
    return std::log2(errors[0] / errors[1]);
}

ScalarField random_field(GridPtr grid, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ScalarField f(grid);
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i] = dist(rng);
    return f;
}

} // namespace

TEST_CASE("first: one-sided differences of a parabola") {
    auto g = Grid::create({0.0}, {2.0}, {5});
    const ScalarField v = sample_1d(g, [](double x) { return x * x; });
    const DerivativePair d = upwind_first_first(v, 0);
    CHECK(d.dim == 0);
    // node x = 1 with dx = 0.5
    CHECK(d.left[2] == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(d.right[2] == doctest::Approx(2.5).epsilon(1e-14));
}

TEST_CASE("all schemes: exact on linear data, zero on constants") {
    auto g = Grid::create({-1.0}, {1.0}, {9});
    const ScalarField lin = sample_1d(g, [](double x) { return 3.0 * x; });
    const ScalarField flat = sample_1d(g, [](double) { return 4.25; });
    for (DerivativeScheme s : {DerivativeScheme::First, DerivativeScheme::Eno2,
                               DerivativeScheme::Eno3, DerivativeScheme::Weno5}) {
        const DerivativePair dl = upwind_derivative(lin, 0, s);
        const DerivativePair df = upwind_derivative(flat, 0, s);
        for (std::size_t i = 0; i < lin.size(); ++i) {
            CHECK(dl.left[i] == doctest::Approx(3.0).epsilon(1e-12));
            CHECK(dl.right[i] == doctest::Approx(3.0).epsilon(1e-12));
            CHECK(df.left[i] == doctest::Approx(0.0).epsilon(1e-12));
            CHECK(df.right[i] == doctest::Approx(0.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("all schemes: linear fields in 2-D are differentiated exactly in both dims") {
    auto g = Grid::create({0.0, -1.0}, {1.0, 1.0}, {9, 11});
    ScalarField v(g);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = 2.0 * g->coords(0)[i] - 0.75 * g->coords(1)[i];
    for (DerivativeScheme s : {DerivativeScheme::First, DerivativeScheme::Eno2,
                               DerivativeScheme::Eno3, DerivativeScheme::Weno5}) {
        const DerivativePair d0 = upwind_derivative(v, 0, s);
        const DerivativePair d1 = upwind_derivative(v, 1, s);
        for (std::size_t i = 0; i < v.size(); ++i) {
            CHECK(d0.left[i] == doctest::Approx(2.0).epsilon(1e-12));
            CHECK(d0.right[i] == doctest::Approx(2.0).epsilon(1e-12));
            CHECK(d1.left[i] == doctest::Approx(-0.75).epsilon(1e-12));
            CHECK(d1.right[i] == doctest::Approx(-0.75).epsilon(1e-12));
        }
    }
}

TEST_CASE("eno2: quadratics are differentiated exactly away from extrapolated ghosts") {
    auto g = Grid::create({0.0}, {1.0}, {33});
    const ScalarField v = sample_1d(g, [](double x) { return x * x; });
    const DerivativePair d = upwind_first_eno2(v, 0);
    for (std::size_t i = 2; i + 2 < v.size(); ++i) {
        const double truth = 2.0 * g->axis(0)[i];
        CHECK(d.left[i] == doctest::Approx(truth).epsilon(1e-12));
        CHECK(d.right[i] == doctest::Approx(truth).epsilon(1e-12));
    }
}

TEST_CASE("eno2: step data selects the smooth side and stays bounded") {
    auto g = Grid::create({0.0}, {7.0}, {8});
    const ScalarField v(g, std::vector<double>{0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0});
    const DerivativePair d = upwind_first_eno2(v, 0);

    // max one-sided first difference is the jump 1 / dx = 1
    double max_first = 0.0;
    const DerivativePair f = upwind_first_first(v, 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        max_first = std::max({max_first, std::abs(f.left[i]), std::abs(f.right[i])});
    CHECK(max_first == doctest::Approx(1.0).epsilon(1e-14));

    for (std::size_t i = 0; i < v.size(); ++i) {
        CHECK(std::abs(d.left[i]) <= 2.0 * max_first + 1e-14);
        CHECK(std::abs(d.right[i]) <= 2.0 * max_first + 1e-14);
    }
    // one node past the jump the left-biased stencil sees flat data only
    CHECK(d.left[6] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(d.right[5] == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("eno3: cubics are differentiated exactly away from extrapolated ghosts") {
    auto g = Grid::create({-1.0}, {1.0}, {33});
    const ScalarField v = sample_1d(g, [](double x) { return x * x * x; });
    const DerivativePair d = upwind_first_eno3(v, 0);
    for (std::size_t i = 3; i + 3 < v.size(); ++i) {
        const double x = g->axis(0)[i];
        CHECK(d.left[i] == doctest::Approx(3.0 * x * x).epsilon(1e-10));
        CHECK(d.right[i] == doctest::Approx(3.0 * x * x).epsilon(1e-10));
    }
}

TEST_CASE("weno5: quartic derivative error shrinks at high order") {
    double errors[2];
    for (int level = 0; level < 2; ++level) {
        const int n = 64 << level;
        auto g = Grid::create({0.0}, {1.0}, {n});
        const ScalarField v = sample_1d(g, [](double x) { return x * x * x * x; });
        const DerivativePair d = upwind_first_weno5(v, 0);
        double err = 0.0;
        for (std::size_t i = 3; i + 3 < v.size(); ++i) {
            const double truth = 4.0 * std::pow(g->axis(0)[i], 3);
            err = std::max(err, std::abs(d.left[i] - truth));
            err = std::max(err, std::abs(d.right[i] - truth));
        }
        errors[level] = err;
    }
    CHECK(std::log2(errors[0] / errors[1]) >= 4.0);
}

TEST_CASE("schemes converge at their design order on smooth periodic data") {
    CHECK(measured_order(DerivativeScheme::First, 64) >= 0.9);
    CHECK(measured_order(DerivativeScheme::Eno2, 64) >= 1.8);
    CHECK(measured_order(DerivativeScheme::Eno3, 64) >= 2.7);
    CHECK(measured_order(DerivativeScheme::Weno5, 64) >= 4.3);
}

TEST_CASE("derivatives commute with periodic translation bit-for-bit") {
    auto g = Grid::create({0.0, 0.0}, {1.0, 1.0}, {16, 12}, {0, 1});
    const ScalarField v = random_field(g, 7);

    for (int dim = 0; dim < 2; ++dim) {
        const int n = g->count(dim);
        for (DerivativeScheme s : {DerivativeScheme::First, DerivativeScheme::Eno2,
                                   DerivativeScheme::Eno3, DerivativeScheme::Weno5}) {
            const DerivativePair base = upwind_derivative(v, dim, s);
            const ScalarField shifted = shift_along_dim(pad_ghost(v, dim, 1), 1);
            const DerivativePair moved = upwind_derivative(shifted, dim, s);
            // moved(i) must equal base(i + 1 mod n) along dim, bit-for-bit
            for (std::size_t i = 0; i < v.size(); ++i) {
                auto multi = g->multi_index(i);
                multi[static_cast<std::size_t>(dim)] = (multi[static_cast<std::size_t>(dim)] + 1) % n;
                const std::size_t j = g->index(multi);
                CHECK(moved.left[i] == base.left[j]);
                CHECK(moved.right[i] == base.right[j]);
            }
        }
    }
}

TEST_CASE("axis reversal swaps and negates the one-sided derivatives") {
    for (bool periodic : {false, true}) {
        auto g = periodic ? Grid::create({-1.0}, {1.0}, {24}, {0}) : Grid::create({-1.0}, {1.0}, {24});
        const ScalarField v = random_field(g, 41);
        ScalarField w(g);
        const std::size_t n = v.size();
        for (std::size_t i = 0; i < n; ++i)
            w[i] = v[n - 1 - i];

        for (DerivativeScheme s : {DerivativeScheme::First, DerivativeScheme::Eno2,
                                   DerivativeScheme::Eno3, DerivativeScheme::Weno5}) {
            const DerivativePair dv = upwind_derivative(v, 0, s);
            const DerivativePair dw = upwind_derivative(w, 0, s);
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(dw.left[i] == -dv.right[n - 1 - i]);
                CHECK(dw.right[i] == -dv.left[n - 1 - i]);
            }
        }
    }
}

TEST_CASE("derivatives of finite data are finite") {
    auto g = Grid::create({0.0, 0.0}, {1.0, 2.0}, {9, 8}, {1});
    const ScalarField v = random_field(g, 1234);
    for (int dim = 0; dim < 2; ++dim) {
        for (DerivativeScheme s : {DerivativeScheme::First, DerivativeScheme::Eno2,
                                   DerivativeScheme::Eno3, DerivativeScheme::Weno5}) {
            const DerivativePair d = upwind_derivative(v, dim, s);
            for (std::size_t i = 0; i < v.size(); ++i) {
                CHECK(std::isfinite(d.left[i]));
                CHECK(std::isfinite(d.right[i]));
            }
        }
    }
}

TEST_CASE("derivative kernels validate their stencil room") {
    auto tiny = Grid::create({0.0}, {1.0}, {5});
    const ScalarField v(tiny, 0.0);
    CHECK_NOTHROW((void)upwind_first_eno2(v, 0));
    CHECK_THROWS_AS((void)upwind_first_eno3(v, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)upwind_first_weno5(v, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)upwind_first_first(v, 1), std::invalid_argument);
}
