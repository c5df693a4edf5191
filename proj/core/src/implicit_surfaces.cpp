#include "levelset/implicit_surfaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace levelset {

namespace {

void check_center(const Grid& g, const std::vector<double>& center, const char* what) {
    if (center.size() != static_cast<std::size_t>(g.dim()))
        throw std::invalid_argument(std::string(what) + ": center length must equal the grid dimension");
}

} // namespace

ScalarField sphere(GridPtr grid, const std::vector<double>& center, double radius) {
    if (!grid)
        throw std::invalid_argument("sphere: null grid");
    check_center(*grid, center, "sphere");
    if (!(radius > 0.0))
        throw std::invalid_argument("sphere: radius must be positive");

    ScalarField out(grid);
    const std::size_t total = grid->node_count();
    for (std::size_t i = 0; i < total; ++i) {
        double r2 = 0.0;
        for (int d = 0; d < grid->dim(); ++d) {
            const double dx = grid->coords(d)[i] - center[static_cast<std::size_t>(d)];
            r2 += dx * dx;
        }
        out[i] = std::sqrt(r2) - radius;
    }
    return out;
}

ScalarField cylinder(GridPtr grid, const std::set<int>& ignored_dims,
                     const std::vector<double>& center, double radius) {
    if (!grid)
        throw std::invalid_argument("cylinder: null grid");
    check_center(*grid, center, "cylinder");
    if (!(radius > 0.0))
        throw std::invalid_argument("cylinder: radius must be positive");
    if (ignored_dims.empty())
        throw std::invalid_argument("cylinder: ignored_dims must be nonempty");
    for (int d : ignored_dims)
        if (d < 0 || d >= grid->dim())
            throw std::invalid_argument("cylinder: ignored dimension " + std::to_string(d) + " out of range");
    if (static_cast<int>(ignored_dims.size()) >= grid->dim())
        throw std::invalid_argument("cylinder: at least one dimension must remain active");

    std::vector<int> active;
    for (int d = 0; d < grid->dim(); ++d)
        if (!ignored_dims.count(d))
            active.push_back(d);

    ScalarField out(grid);
    const std::size_t total = grid->node_count();
    for (std::size_t i = 0; i < total; ++i) {
        double r2 = 0.0;
        for (int d : active) {
            const double dx = grid->coords(d)[i] - center[static_cast<std::size_t>(d)];
            r2 += dx * dx;
        }
        out[i] = std::sqrt(r2) - radius;
    }
    return out;
}

ScalarField rectangle(GridPtr grid, const std::vector<double>& lower,
                      const std::vector<double>& upper) {
    if (!grid)
        throw std::invalid_argument("rectangle: null grid");
    const std::size_t dim = static_cast<std::size_t>(grid->dim());
    if (lower.size() != dim || upper.size() != dim)
        throw std::invalid_argument("rectangle: corner length must equal the grid dimension");
    for (std::size_t d = 0; d < dim; ++d)
        if (!(upper[d] > lower[d]))
            throw std::invalid_argument("rectangle: upper must exceed lower in dimension " + std::to_string(d));

    ScalarField out(grid);
    const std::size_t total = grid->node_count();
    for (std::size_t i = 0; i < total; ++i) {
        double v = -std::numeric_limits<double>::infinity();
        for (std::size_t d = 0; d < dim; ++d) {
            const double x = grid->coords(static_cast<int>(d))[i];
            v = std::max(v, std::max(lower[d] - x, x - upper[d]));
        }
        out[i] = v;
    }
    return out;
}

ScalarField ellipsoid(GridPtr grid, double radius) {
    if (!grid)
        throw std::invalid_argument("ellipsoid: null grid");
    if (grid->dim() != 2 && grid->dim() != 3)
        throw std::invalid_argument("ellipsoid: only 2-D and 3-D grids are supported");
    if (!(radius > 0.0))
        throw std::invalid_argument("ellipsoid: radius must be positive");

    ScalarField out(grid);
    const std::size_t total = grid->node_count();
    const bool three_d = grid->dim() == 3;
    for (std::size_t i = 0; i < total; ++i) {
        const double x0 = grid->coords(0)[i];
        const double x1 = grid->coords(1)[i];
        double v = x0 * x0 + 4.0 * x1 * x1;
        if (three_d) {
            const double x2 = grid->coords(2)[i];
            v += 9.0 * x2 * x2;
        }
        out[i] = v - radius;
    }
    return out;
}

namespace {

void check_same_grid(const ScalarField& a, const ScalarField& b, const char* what) {
    if (a.grid_ptr() != b.grid_ptr())
        throw std::invalid_argument(std::string(what) + ": operands must share a grid");
}

} // namespace

ScalarField set_union(const ScalarField& a, const ScalarField& b) {
    check_same_grid(a, b, "set_union");
    ScalarField out(a.grid_ptr());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = std::min(a[i], b[i]);
    return out;
}

ScalarField set_intersection(const ScalarField& a, const ScalarField& b) {
    check_same_grid(a, b, "set_intersection");
    ScalarField out(a.grid_ptr());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = std::max(a[i], b[i]);
    return out;
}

ScalarField set_complement(const ScalarField& a) {
    ScalarField out(a.grid_ptr());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = -a[i];
    return out;
}

} // namespace levelset
