#include "levelset/spatial_derivatives.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace levelset {

int ghost_width(DerivativeScheme scheme) {
    switch (scheme) {
        case DerivativeScheme::First: return 1;
        case DerivativeScheme::Eno2: return 2;
        case DerivativeScheme::Eno3: return 3;
        case DerivativeScheme::Weno5: return 3;
    }
    throw std::invalid_argument("unknown derivative scheme");
}

int min_nodes(DerivativeScheme scheme) {
    switch (scheme) {
        case DerivativeScheme::First: return 3;
        case DerivativeScheme::Eno2: return 5;
        case DerivativeScheme::Eno3: return 7;
        case DerivativeScheme::Weno5: return 7;
    }
    throw std::invalid_argument("unknown derivative scheme");
}

namespace {

inline double minmag(double a, double b) { return std::abs(a) <= std::abs(b) ? a : b; }

/// Runs `kernel` on every 1-D line of `v` along `dim`.  The kernel receives
/// the ghost-padded line s (n + 2*width values, node i at s[i + width]) and
/// writes n left/right derivative values.
template <typename Kernel>
DerivativePair linewise(const ScalarField& v, int dim, DerivativeScheme scheme,
                        const char* name, Kernel&& kernel) {
    const Grid& g = v.grid();
    if (dim < 0 || dim >= g.dim())
        throw std::invalid_argument(std::string(name) + ": dimension out of range");
    const int n = g.count(dim);
    if (n < min_nodes(scheme))
        throw std::invalid_argument(std::string(name) + ": needs at least " +
                                    std::to_string(min_nodes(scheme)) + " nodes along dim " +
                                    std::to_string(dim));

    const int width = ghost_width(scheme);
    const double dx = g.spacing(dim);
    const BoundaryCondition bc = g.boundary(dim);
    const std::size_t stride = g.stride(dim);
    const std::size_t line_block = stride * static_cast<std::size_t>(n);
    const std::size_t n_outer = g.node_count() / line_block;

    DerivativePair out{ScalarField(v.grid_ptr()), ScalarField(v.grid_ptr()), dim};
    std::vector<double> s(static_cast<std::size_t>(n + 2 * width));
    std::vector<double> left_line(static_cast<std::size_t>(n));
    std::vector<double> right_line(static_cast<std::size_t>(n));

    for (std::size_t outer = 0; outer < n_outer; ++outer) {
        for (std::size_t inner = 0; inner < stride; ++inner) {
            const std::size_t base = outer * line_block + inner;
            detail::fill_padded_line(v.values(), base, stride, n, width, bc, s);
            kernel(s.data(), n, dx, left_line.data(), right_line.data());
            for (int j = 0; j < n; ++j) {
                const std::size_t at = base + static_cast<std::size_t>(j) * stride;
                out.left[at] = left_line[static_cast<std::size_t>(j)];
                out.right[at] = right_line[static_cast<std::size_t>(j)];
            }
        }
    }
    return out;
}

/// Fifth-order weighted combination of the three third-order substencil
/// derivatives; v1..v5 are consecutive first differences, upwind-ordered.
inline double weno5_onesided(double v1, double v2, double v3, double v4, double v5) {
    constexpr double eps = 1e-6;

    const double phi1 = v1 / 3.0 - 7.0 * v2 / 6.0 + 11.0 * v3 / 6.0;
    const double phi2 = -v2 / 6.0 + 5.0 * v3 / 6.0 + v4 / 3.0;
    const double phi3 = v3 / 3.0 + 5.0 * v4 / 6.0 - v5 / 6.0;

    const double s1 = (13.0 / 12.0) * (v1 - 2.0 * v2 + v3) * (v1 - 2.0 * v2 + v3) +
                      0.25 * (v1 - 4.0 * v2 + 3.0 * v3) * (v1 - 4.0 * v2 + 3.0 * v3);
    const double s2 = (13.0 / 12.0) * (v2 - 2.0 * v3 + v4) * (v2 - 2.0 * v3 + v4) +
                      0.25 * (v2 - v4) * (v2 - v4);
    const double s3 = (13.0 / 12.0) * (v3 - 2.0 * v4 + v5) * (v3 - 2.0 * v4 + v5) +
                      0.25 * (3.0 * v3 - 4.0 * v4 + v5) * (3.0 * v3 - 4.0 * v4 + v5);

    const double a1 = 0.1 / ((eps + s1) * (eps + s1));
    const double a2 = 0.6 / ((eps + s2) * (eps + s2));
    const double a3 = 0.3 / ((eps + s3) * (eps + s3));
    const double inv = 1.0 / (a1 + a2 + a3);
    return (a1 * phi1 + a2 * phi2 + a3 * phi3) * inv;
}

} // namespace

DerivativePair upwind_first_first(const ScalarField& v, int dim) {
    return linewise(v, dim, DerivativeScheme::First, "upwind_first_first",
                    [](const double* s, int n, double dx, double* left, double* right) {
        const double inv_dx = 1.0 / dx;
        for (int i = 0; i < n; ++i) {
            left[i] = (s[i + 1] - s[i]) * inv_dx;
            right[i] = (s[i + 2] - s[i + 1]) * inv_dx;
        }
    });
}

DerivativePair upwind_first_eno2(const ScalarField& v, int dim) {
    std::vector<double> d1, d2;
    return linewise(v, dim, DerivativeScheme::Eno2, "upwind_first_eno2",
                    [&d1, &d2](const double* s, int n, double dx, double* left, double* right) {
        // d1[k] lives between s[k] and s[k+1]; d2[k] is centered at s[k].
        d1.resize(static_cast<std::size_t>(n + 3));
        d2.resize(static_cast<std::size_t>(n + 3));
        const double inv_dx = 1.0 / dx;
        for (int k = 0; k <= n + 2; ++k)
            d1[static_cast<std::size_t>(k)] = (s[k + 1] - s[k]) * inv_dx;
        for (int k = 1; k <= n + 2; ++k)
            d2[static_cast<std::size_t>(k)] =
                (d1[static_cast<std::size_t>(k)] - d1[static_cast<std::size_t>(k - 1)]) * (0.5 * inv_dx);

        for (int i = 0; i < n; ++i) {
            const int si = i + 2;
            left[i] = d1[static_cast<std::size_t>(si - 1)] +
                      minmag(d2[static_cast<std::size_t>(si - 1)], d2[static_cast<std::size_t>(si)]) * dx;
            right[i] = d1[static_cast<std::size_t>(si)] -
                       minmag(d2[static_cast<std::size_t>(si)], d2[static_cast<std::size_t>(si + 1)]) * dx;
        }
    });
}

DerivativePair upwind_first_eno3(const ScalarField& v, int dim) {
    std::vector<double> d1, d2, d3;
    return linewise(v, dim, DerivativeScheme::Eno3, "upwind_first_eno3",
                    [&d1, &d2, &d3](const double* s, int n, double dx, double* left, double* right) {
        // d1[k] between s[k], s[k+1]; d2[k] at s[k]; d3[k] between s[k], s[k+1].
        d1.resize(static_cast<std::size_t>(n + 5));
        d2.resize(static_cast<std::size_t>(n + 5));
        d3.resize(static_cast<std::size_t>(n + 4));
        const double inv_dx = 1.0 / dx;
        for (int k = 0; k <= n + 4; ++k)
            d1[static_cast<std::size_t>(k)] = (s[k + 1] - s[k]) * inv_dx;
        for (int k = 1; k <= n + 4; ++k)
            d2[static_cast<std::size_t>(k)] =
                (d1[static_cast<std::size_t>(k)] - d1[static_cast<std::size_t>(k - 1)]) * (0.5 * inv_dx);
        for (int k = 1; k <= n + 3; ++k)
            d3[static_cast<std::size_t>(k)] =
                (d2[static_cast<std::size_t>(k + 1)] - d2[static_cast<std::size_t>(k)]) * (inv_dx / 3.0);

        const double dx2 = dx * dx;
        for (int i = 0; i < n; ++i) {
            const int si = i + 3;
            {
                // left-biased: first-level stencil starts at k = si - 1
                const double q1 = d1[static_cast<std::size_t>(si - 1)];
                int kstar;
                double c;
                if (std::abs(d2[static_cast<std::size_t>(si - 1)]) <= std::abs(d2[static_cast<std::size_t>(si)])) {
                    c = d2[static_cast<std::size_t>(si - 1)];
                    kstar = si - 2;
                } else {
                    c = d2[static_cast<std::size_t>(si)];
                    kstar = si - 1;
                }
                const double q2 = c * dx;
                const double cstar = minmag(d3[static_cast<std::size_t>(kstar)],
                                            d3[static_cast<std::size_t>(kstar + 1)]);
                const int istar = si - kstar;
                const double factor = static_cast<double>(3 * istar * istar - 6 * istar + 2);
                left[i] = q1 + q2 + cstar * factor * dx2;
            }
            {
                // right-biased: first-level stencil starts at k = si
                const double q1 = d1[static_cast<std::size_t>(si)];
                int kstar;
                double c;
                if (std::abs(d2[static_cast<std::size_t>(si)]) <= std::abs(d2[static_cast<std::size_t>(si + 1)])) {
                    c = d2[static_cast<std::size_t>(si)];
                    kstar = si - 1;
                } else {
                    c = d2[static_cast<std::size_t>(si + 1)];
                    kstar = si;
                }
                const double q2 = -c * dx;
                const double cstar = minmag(d3[static_cast<std::size_t>(kstar)],
                                            d3[static_cast<std::size_t>(kstar + 1)]);
                const int istar = si - kstar;
                const double factor = static_cast<double>(3 * istar * istar - 6 * istar + 2);
                right[i] = q1 + q2 + cstar * factor * dx2;
            }
        }
    });
}

DerivativePair upwind_first_weno5(const ScalarField& v, int dim) {
    std::vector<double> d1;
    return linewise(v, dim, DerivativeScheme::Weno5, "upwind_first_weno5",
                    [&d1](const double* s, int n, double dx, double* left, double* right) {
        d1.resize(static_cast<std::size_t>(n + 5));
        const double inv_dx = 1.0 / dx;
        for (int k = 0; k <= n + 4; ++k)
            d1[static_cast<std::size_t>(k)] = (s[k + 1] - s[k]) * inv_dx;

        for (int i = 0; i < n; ++i) {
            const std::size_t b = static_cast<std::size_t>(i);
            left[i] = weno5_onesided(d1[b], d1[b + 1], d1[b + 2], d1[b + 3], d1[b + 4]);
            right[i] = weno5_onesided(d1[b + 5], d1[b + 4], d1[b + 3], d1[b + 2], d1[b + 1]);
        }
    });
}

DerivativePair upwind_derivative(const ScalarField& v, int dim, DerivativeScheme scheme) {
    switch (scheme) {
        case DerivativeScheme::First: return upwind_first_first(v, dim);
        case DerivativeScheme::Eno2: return upwind_first_eno2(v, dim);
        case DerivativeScheme::Eno3: return upwind_first_eno3(v, dim);
        case DerivativeScheme::Weno5: return upwind_first_weno5(v, dim);
    }
    throw std::invalid_argument("unknown derivative scheme");
}

} // namespace levelset
