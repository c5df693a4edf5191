#pragma once

#include "levelset/grid.hpp"

namespace levelset {

/// Upwind derivative scheme along one grid dimension.
enum class DerivativeScheme { First, Eno2, Eno3, Weno5 };

/// Ghost nodes each scheme needs per side: 1 / 2 / 3 / 3.
int ghost_width(DerivativeScheme scheme);

/// Minimum node count along a dimension for each scheme: 3 / 5 / 7 / 7.
int min_nodes(DerivativeScheme scheme);

/// One-sided derivative approximations along a single dimension.
/// left is biased to nodes below i (backward), right to nodes above i
/// (forward); both have one value per grid node.
struct DerivativePair {
    ScalarField left;
    ScalarField right;
    int dim = 0;
};

/// First-order one-sided differences:
///   left[i]  = (v[i] - v[i-1]) / dx
///   right[i] = (v[i+1] - v[i]) / dx
DerivativePair upwind_first_first(const ScalarField& v, int dim);

/// Second-order essentially non-oscillatory derivative.  Starts from the
/// first-order difference and adds the smoother of the two second-difference
/// corrections (ties pick the lower-index candidate).
DerivativePair upwind_first_eno2(const ScalarField& v, int dim);

/// Third-order essentially non-oscillatory derivative: divided-difference
/// tables to third order, choosing the smoothest stencil at each level.
DerivativePair upwind_first_eno3(const ScalarField& v, int dim);

/// Fifth-order weighted ENO derivative: convex combination of the three
/// third-order substencil derivatives, weighted by classic smoothness
/// indicators (weights c = (0.1, 0.6, 0.3), regularizer eps = 1e-6).
DerivativePair upwind_first_weno5(const ScalarField& v, int dim);

/// Dispatch by scheme tag.
DerivativePair upwind_derivative(const ScalarField& v, int dim, DerivativeScheme scheme);

} // namespace levelset
