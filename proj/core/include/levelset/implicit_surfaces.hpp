#pragma once

#include <set>
#include <vector>

#include "levelset/grid.hpp"

namespace levelset {

// Implicit-surface fields: negative inside the represented set, positive
// outside, zero on the surface.  All constructors sample node coordinates
// from the field's grid.

/// Signed distance to a sphere: |x - center| - radius.
ScalarField sphere(GridPtr grid, const std::vector<double>& center, double radius);

/// Signed distance to a cylinder aligned with the ignored dimensions:
/// the distance is measured only over dimensions not in `ignored_dims`.
/// `ignored_dims` must be a nonempty proper subset of the dimensions.
ScalarField cylinder(GridPtr grid, const std::set<int>& ignored_dims,
                     const std::vector<double>& center, double radius);

/// Axis-aligned box [lower, upper]: v(x) = max_d max(lower[d] - x_d, x_d - upper[d]).
/// Zero on the boundary, negative inside; exact distance only along faces.
ScalarField rectangle(GridPtr grid, const std::vector<double>& lower,
                      const std::vector<double>& upper);

/// Anisotropically scaled quadratic level function (2-D or 3-D grids):
///   2-D: x0^2 + 4 x1^2 - radius
///   3-D: x0^2 + 4 x1^2 + 9 x2^2 - radius
/// Not a distance function; its zero set is the ellipse/ellipsoid where the
/// weighted quadratic equals `radius`.
ScalarField ellipsoid(GridPtr grid, double radius);

/// Pointwise min: the union of the represented sets.
ScalarField set_union(const ScalarField& a, const ScalarField& b);

/// Pointwise max: the intersection of the represented sets.
ScalarField set_intersection(const ScalarField& a, const ScalarField& b);

/// Pointwise negation: the complement of the represented set.
ScalarField set_complement(const ScalarField& a);

} // namespace levelset
