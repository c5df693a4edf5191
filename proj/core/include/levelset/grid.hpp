#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <span>
#include <vector>

namespace levelset {

/// Ghost-cell fill rule for one grid dimension.
///
/// Periodic wraps node values cyclically over the full sample count.
/// ExtrapolateLinear continues the edge values with the slope of the two
/// outermost nodes: ghost_k = edge + k * (edge - next_inner).
enum class BoundaryCondition { Periodic, ExtrapolateLinear };

/// Uniform Cartesian grid over an axis-aligned box.
///
/// Each dimension d spans [mins[d], maxs[d]] inclusive with counts[d] nodes,
/// so spacing(d) = (maxs[d] - mins[d]) / (counts[d] - 1).  Node data is stored
/// column-major: the linear index of (i0, i1, ..., i_{n-1}) is
/// i0 + counts[0] * (i1 + counts[1] * (i2 + ...)).
///
/// Grids are immutable; create() returns a shared handle so fields can
/// reference their grid without lifetime concerns.
class Grid {
public:
    static std::shared_ptr<const Grid> create(std::vector<double> mins,
                                              std::vector<double> maxs,
                                              std::vector<int> counts,
                                              const std::set<int>& periodic_dims = {});

    int dim() const { return static_cast<int>(counts_.size()); }
    double min(int d) const { return mins_[static_cast<std::size_t>(d)]; }
    double max(int d) const { return maxs_[static_cast<std::size_t>(d)]; }
    int count(int d) const { return counts_[static_cast<std::size_t>(d)]; }
    double spacing(int d) const { return spacings_[static_cast<std::size_t>(d)]; }
    BoundaryCondition boundary(int d) const { return boundary_[static_cast<std::size_t>(d)]; }

    /// Total number of nodes.
    std::size_t node_count() const { return node_count_; }

    /// Column-major stride of dimension d.
    std::size_t stride(int d) const { return strides_[static_cast<std::size_t>(d)]; }

    /// 1-D node coordinates along dimension d (length counts[d]).
    std::span<const double> axis(int d) const { return axes_[static_cast<std::size_t>(d)]; }

    /// Full n-D coordinate field of dimension d (length node_count()),
    /// column-major: coords(d)[i] is the d-th coordinate of node i.
    std::span<const double> coords(int d) const { return coord_fields_[static_cast<std::size_t>(d)]; }

    /// Linear index of a multi-index (bounds-checked).
    std::size_t index(std::span<const int> multi) const;

    /// Multi-index of a linear index.
    std::vector<int> multi_index(std::size_t linear) const;

private:
    Grid() = default;

    std::vector<double> mins_, maxs_, spacings_;
    std::vector<int> counts_;
    std::vector<BoundaryCondition> boundary_;
    std::vector<std::size_t> strides_;
    std::size_t node_count_ = 0;
    std::vector<std::vector<double>> axes_;
    std::vector<std::vector<double>> coord_fields_;
};

using GridPtr = std::shared_ptr<const Grid>;

/// One scalar value per grid node, column-major, same layout as Grid.
class ScalarField {
public:
    explicit ScalarField(GridPtr grid, double fill = 0.0);
    ScalarField(GridPtr grid, std::vector<double> data);

    const Grid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    std::size_t size() const { return data_.size(); }

    double operator[](std::size_t i) const { return data_[i]; }
    double& operator[](std::size_t i) { return data_[i]; }
    std::span<const double> values() const { return data_; }
    std::span<double> values() { return data_; }

    double at(std::span<const int> multi) const { return data_[grid_->index(multi)]; }
    double& at(std::span<const int> multi) { return data_[grid_->index(multi)]; }

private:
    GridPtr grid_;
    std::vector<double> data_;
};

/// A field padded with ghost nodes along one dimension.  Layout stays
/// column-major with count(dim) + 2*width nodes along dim; all other
/// dimensions keep the interior extents.
struct PaddedField {
    GridPtr grid;   // interior grid
    int dim = 0;
    int width = 0;
    std::vector<double> data;
};

/// Pads `field` along `dim` with `width` ghost nodes per side, filled
/// according to the grid's boundary condition for that dimension.
/// Periodic fill satisfies padded[i] = interior[(i - width) mod count].
PaddedField pad_ghost(const ScalarField& field, int dim, int width);

/// Gathers an interior-shaped field from a padded one, offset nodes along
/// the padded dimension: out(i) = padded(i + offset).  |offset| <= width.
ScalarField shift_along_dim(const PaddedField& padded, int offset);

namespace detail {

/// Copies one grid line (n nodes at `base`, step `stride`) into dst[width..
/// width+n) and fills `width` ghost nodes on each side per `bc`.
/// dst must have length n + 2*width.
void fill_padded_line(std::span<const double> field, std::size_t base, std::size_t stride,
                      int n, int width, BoundaryCondition bc, std::span<double> dst);

} // namespace detail

} // namespace levelset
