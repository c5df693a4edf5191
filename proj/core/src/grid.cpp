#include "levelset/grid.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace levelset {

std::shared_ptr<const Grid> Grid::create(std::vector<double> mins,
                                         std::vector<double> maxs,
                                         std::vector<int> counts,
                                         const std::set<int>& periodic_dims) {
    const std::size_t dim = counts.size();
    if (dim == 0)
        throw std::invalid_argument("grid: dimension must be at least 1");
    if (mins.size() != dim || maxs.size() != dim)
        throw std::invalid_argument("grid: mins, maxs and counts must have equal length");
    for (std::size_t d = 0; d < dim; ++d) {
        if (counts[d] < 3)
            throw std::invalid_argument("grid: counts[" + std::to_string(d) + "] must be >= 3");
        if (!(maxs[d] > mins[d]))
            throw std::invalid_argument("grid: max must exceed min in dimension " + std::to_string(d));
    }
    for (int d : periodic_dims)
        if (d < 0 || d >= static_cast<int>(dim))
            throw std::invalid_argument("grid: periodic dimension " + std::to_string(d) + " out of range");

    auto grid = std::shared_ptr<Grid>(new Grid());
    grid->mins_ = std::move(mins);
    grid->maxs_ = std::move(maxs);
    grid->counts_ = std::move(counts);

    grid->spacings_.resize(dim);
    grid->boundary_.assign(dim, BoundaryCondition::ExtrapolateLinear);
    grid->strides_.resize(dim);
    grid->axes_.resize(dim);

    std::size_t total = 1;
    for (std::size_t d = 0; d < dim; ++d) {
        const int n = grid->counts_[d];
        grid->spacings_[d] = (grid->maxs_[d] - grid->mins_[d]) / static_cast<double>(n - 1);
        if (periodic_dims.count(static_cast<int>(d)))
            grid->boundary_[d] = BoundaryCondition::Periodic;
        grid->strides_[d] = total;
        total *= static_cast<std::size_t>(n);

        auto& axis = grid->axes_[d];
        axis.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            axis[static_cast<std::size_t>(i)] = grid->mins_[d] + static_cast<double>(i) * grid->spacings_[d];
    }
    grid->node_count_ = total;

    grid->coord_fields_.resize(dim);
    for (std::size_t d = 0; d < dim; ++d) {
        auto& xs = grid->coord_fields_[d];
        xs.resize(total);
        const auto& axis = grid->axes_[d];
        const std::size_t stride = grid->strides_[d];
        const std::size_t n = static_cast<std::size_t>(grid->counts_[d]);
        const std::size_t block = stride * n;
        for (std::size_t i = 0; i < total; ++i)
            xs[i] = axis[(i % block) / stride];
    }
    return grid;
}

std::size_t Grid::index(std::span<const int> multi) const {
    if (multi.size() != counts_.size())
        throw std::invalid_argument("grid: multi-index length mismatch");
    std::size_t linear = 0;
    for (std::size_t d = 0; d < counts_.size(); ++d) {
        const int i = multi[d];
        if (i < 0 || i >= counts_[d])
            throw std::out_of_range("grid: index out of range in dimension " + std::to_string(d));
        linear += static_cast<std::size_t>(i) * strides_[d];
    }
    return linear;
}

std::vector<int> Grid::multi_index(std::size_t linear) const {
    if (linear >= node_count_)
        throw std::out_of_range("grid: linear index out of range");
    std::vector<int> multi(counts_.size());
    for (std::size_t d = 0; d < counts_.size(); ++d) {
        multi[d] = static_cast<int>((linear / strides_[d]) % static_cast<std::size_t>(counts_[d]));
    }
    return multi;
}

ScalarField::ScalarField(GridPtr grid, double fill)
    : grid_(std::move(grid)) {
    if (!grid_)
        throw std::invalid_argument("field: null grid");
    data_.assign(grid_->node_count(), fill);
}

ScalarField::ScalarField(GridPtr grid, std::vector<double> data)
    : grid_(std::move(grid)), data_(std::move(data)) {
    if (!grid_)
        throw std::invalid_argument("field: null grid");
    if (data_.size() != grid_->node_count())
        throw std::invalid_argument("field: data size does not match grid node count");
}

namespace detail {

void fill_padded_line(std::span<const double> field, std::size_t base, std::size_t stride,
                      int n, int width, BoundaryCondition bc, std::span<double> dst) {
    for (int j = 0; j < n; ++j)
        dst[static_cast<std::size_t>(width + j)] = field[base + static_cast<std::size_t>(j) * stride];

    if (bc == BoundaryCondition::Periodic) {
        for (int k = 0; k < width; ++k) {
            dst[static_cast<std::size_t>(k)] = dst[static_cast<std::size_t>(k + n)];
            dst[static_cast<std::size_t>(width + n + k)] = dst[static_cast<std::size_t>(width + k)];
        }
    } else {
        const double lo = dst[static_cast<std::size_t>(width)];
        const double lo_slope = lo - dst[static_cast<std::size_t>(width + 1)];
        const double hi = dst[static_cast<std::size_t>(width + n - 1)];
        const double hi_slope = hi - dst[static_cast<std::size_t>(width + n - 2)];
        for (int k = 1; k <= width; ++k) {
            dst[static_cast<std::size_t>(width - k)] = lo + static_cast<double>(k) * lo_slope;
            dst[static_cast<std::size_t>(width + n - 1 + k)] = hi + static_cast<double>(k) * hi_slope;
        }
    }
}

} // namespace detail

PaddedField pad_ghost(const ScalarField& field, int dim, int width) {
    const Grid& g = field.grid();
    if (dim < 0 || dim >= g.dim())
        throw std::invalid_argument("pad_ghost: dimension out of range");
    if (width < 1)
        throw std::invalid_argument("pad_ghost: width must be >= 1");
    const int n = g.count(dim);
    if (width >= n)
        throw std::invalid_argument("pad_ghost: width must be smaller than the node count along dim");

    PaddedField out;
    out.grid = field.grid_ptr();
    out.dim = dim;
    out.width = width;
    out.data.resize(g.node_count() / static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 2 * width));

    const std::size_t stride = g.stride(dim);
    const std::size_t line_block = stride * static_cast<std::size_t>(n);
    const std::size_t padded_block = stride * static_cast<std::size_t>(n + 2 * width);
    const std::size_t n_outer = g.node_count() / line_block;
    const BoundaryCondition bc = g.boundary(dim);

    std::vector<double> scratch(static_cast<std::size_t>(n + 2 * width));
    for (std::size_t outer = 0; outer < n_outer; ++outer) {
        for (std::size_t inner = 0; inner < stride; ++inner) {
            const std::size_t src_base = outer * line_block + inner;
            const std::size_t dst_base = outer * padded_block + inner;
            detail::fill_padded_line(field.values(), src_base, stride, n, width, bc, scratch);
            for (int j = 0; j < n + 2 * width; ++j)
                out.data[dst_base + static_cast<std::size_t>(j) * stride] = scratch[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

ScalarField shift_along_dim(const PaddedField& padded, int offset) {
    if (!padded.grid)
        throw std::invalid_argument("shift_along_dim: padded field has no grid");
    if (offset < -padded.width || offset > padded.width)
        throw std::invalid_argument("shift_along_dim: |offset| must not exceed the ghost width");

    const Grid& g = *padded.grid;
    const int dim = padded.dim;
    const int n = g.count(dim);
    const std::size_t stride = g.stride(dim);
    const std::size_t line_block = stride * static_cast<std::size_t>(n);
    const std::size_t padded_block = stride * static_cast<std::size_t>(n + 2 * padded.width);
    const std::size_t n_outer = g.node_count() / line_block;

    ScalarField out(padded.grid);
    const int start = padded.width + offset;
    for (std::size_t outer = 0; outer < n_outer; ++outer) {
        for (std::size_t inner = 0; inner < stride; ++inner) {
            const std::size_t src_base = outer * padded_block + inner + static_cast<std::size_t>(start) * stride;
            const std::size_t dst_base = outer * line_block + inner;
            for (int j = 0; j < n; ++j)
                out[dst_base + static_cast<std::size_t>(j) * stride] =
                    padded.data[src_base + static_cast<std::size_t>(j) * stride];
        }
    }
    return out;
}

} // namespace levelset
