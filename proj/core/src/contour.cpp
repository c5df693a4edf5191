#include "levelset/contour.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace levelset {

namespace {

// Cell edges: 0 bottom, 1 right, 2 top, 3 left.
struct EdgePair { int first; int second; };

Point2 edge_crossing(int edge, double x0, double y0, double dx, double dy,
                     double c0, double c1, double c2, double c3) {
    auto lerp = [](double va, double vb) { return va / (va - vb); };
    switch (edge) {
        case 0: return {x0 + lerp(c0, c1) * dx, y0};            // c0 -> c1
        case 1: return {x0 + dx, y0 + lerp(c1, c2) * dy};       // c1 -> c2
        case 2: return {x0 + lerp(c3, c2) * dx, y0 + dy};       // c3 -> c2
        default: return {x0, y0 + lerp(c0, c3) * dy};           // c0 -> c3
    }
}

} // namespace

std::vector<Segment2> extract_zero_set_2d(const ScalarField& field) {
    const Grid& g = field.grid();
    if (g.dim() != 2)
        throw std::invalid_argument("extract_zero_set_2d: field must be 2-D");

    const int nx = g.count(0);
    const int ny = g.count(1);
    const double dx = g.spacing(0);
    const double dy = g.spacing(1);
    const std::size_t sx = g.stride(0);
    const std::size_t sy = g.stride(1);

    std::vector<Segment2> segments;
    for (int j = 0; j + 1 < ny; ++j) {
        for (int i = 0; i + 1 < nx; ++i) {
            const std::size_t base = static_cast<std::size_t>(i) * sx + static_cast<std::size_t>(j) * sy;
            const double c0 = field[base];
            const double c1 = field[base + sx];
            const double c2 = field[base + sx + sy];
            const double c3 = field[base + sy];

            int code = 0;
            if (c0 < 0.0) code |= 1;
            if (c1 < 0.0) code |= 2;
            if (c2 < 0.0) code |= 4;
            if (c3 < 0.0) code |= 8;
            if (code == 0 || code == 15)
                continue;

            EdgePair pairs[2];
            int n_pairs = 1;
            switch (code) {
                case 1: pairs[0] = {3, 0}; break;
                case 2: pairs[0] = {0, 1}; break;
                case 3: pairs[0] = {3, 1}; break;
                case 4: pairs[0] = {1, 2}; break;
                case 6: pairs[0] = {0, 2}; break;
                case 7: pairs[0] = {3, 2}; break;
                case 8: pairs[0] = {3, 2}; break;
                case 9: pairs[0] = {0, 2}; break;
                case 11: pairs[0] = {1, 2}; break;
                case 12: pairs[0] = {3, 1}; break;
                case 13: pairs[0] = {0, 1}; break;
                case 14: pairs[0] = {3, 0}; break;
                case 5: {
                    const bool center_inside = 0.25 * (c0 + c1 + c2 + c3) < 0.0;
                    if (center_inside) { pairs[0] = {3, 2}; pairs[1] = {0, 1}; }
                    else { pairs[0] = {3, 0}; pairs[1] = {1, 2}; }
                    n_pairs = 2;
                    break;
                }
                case 10: {
                    const bool center_inside = 0.25 * (c0 + c1 + c2 + c3) < 0.0;
                    if (center_inside) { pairs[0] = {3, 0}; pairs[1] = {1, 2}; }
                    else { pairs[0] = {0, 1}; pairs[1] = {3, 2}; }
                    n_pairs = 2;
                    break;
                }
                default: continue;
            }

            const double x0 = g.axis(0)[static_cast<std::size_t>(i)];
            const double y0 = g.axis(1)[static_cast<std::size_t>(j)];
            for (int p = 0; p < n_pairs; ++p) {
                segments.push_back({edge_crossing(pairs[p].first, x0, y0, dx, dy, c0, c1, c2, c3),
                                    edge_crossing(pairs[p].second, x0, y0, dx, dy, c0, c1, c2, c3)});
            }
        }
    }
    return segments;
}

ScalarField slice_2d(const ScalarField& field, int fixed_dim, int index) {
    const Grid& g = field.grid();
    if (g.dim() < 3)
        throw std::invalid_argument("slice_2d: field must be at least 3-D");
    if (fixed_dim < 0 || fixed_dim >= g.dim())
        throw std::invalid_argument("slice_2d: fixed dimension out of range");
    if (index < 0 || index >= g.count(fixed_dim))
        throw std::invalid_argument("slice_2d: slice index out of range");

    std::vector<double> mins, maxs;
    std::vector<int> counts;
    std::set<int> periodic;
    std::vector<int> kept;
    for (int d = 0; d < g.dim(); ++d) {
        if (d == fixed_dim)
            continue;
        if (g.boundary(d) == BoundaryCondition::Periodic)
            periodic.insert(static_cast<int>(kept.size()));
        mins.push_back(g.min(d));
        maxs.push_back(g.max(d));
        counts.push_back(g.count(d));
        kept.push_back(d);
    }
    GridPtr slice_grid = Grid::create(std::move(mins), std::move(maxs), std::move(counts), periodic);

    ScalarField out(slice_grid);
    const std::size_t fixed_offset = static_cast<std::size_t>(index) * g.stride(fixed_dim);
    const std::size_t total = slice_grid->node_count();
    for (std::size_t i = 0; i < total; ++i) {
        const std::vector<int> multi = slice_grid->multi_index(i);
        std::size_t src = fixed_offset;
        for (std::size_t d = 0; d < kept.size(); ++d)
            src += static_cast<std::size_t>(multi[d]) * g.stride(kept[d]);
        out[i] = field[src];
    }
    return out;
}

double polyline_length(const std::vector<Segment2>& segments) {
    double length = 0.0;
    for (const auto& s : segments)
        length += std::hypot(s.b.x - s.a.x, s.b.y - s.a.y);
    return length;
}

} // namespace levelset
