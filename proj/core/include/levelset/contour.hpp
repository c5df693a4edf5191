#pragma once

#include <vector>

#include "levelset/grid.hpp"

namespace levelset {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

struct Segment2 {
    Point2 a;
    Point2 b;
};

/// Extracts the zero contour of a 2-D field by marching squares with linear
/// interpolation along cell edges.  Segment endpoints are in physical grid
/// coordinates.  A node counts as inside when its value is negative;
/// ambiguous saddle cells are split by the sign of the cell-center average.
std::vector<Segment2> extract_zero_set_2d(const ScalarField& field);

/// Restricts an n-D field to the 2-D slice fixed_dim = index; the result
/// lives on a 2-D grid built from the two remaining dimensions (n must
/// be 3 for now: slicing is used to view 3-D solves).
ScalarField slice_2d(const ScalarField& field, int fixed_dim, int index);

/// Total length of a set of segments.
double polyline_length(const std::vector<Segment2>& segments);

} // namespace levelset
