#pragma once

// Gaussian symmetrization along the first coordinate: f°(x) = f*_mu(Phi(x1)).

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

#include "gsym/error.hpp"
#include "gsym/field.hpp"
#include "gsym/gaussian.hpp"
#include "gsym/profile.hpp"
#include "gsym/rearrange.hpp"

namespace gsym {

enum class Interpolation {
    /// f° takes the profile's step values; its gradient vanishes a.e.
    piecewise_constant,
    /// f° follows the plateau interpolant used by neg_derivative.
    linear,
};

struct SymmetrizeOptions {
    Interpolation mode = Interpolation::piecewise_constant;
    /// s-grid size used by the derivative checks; floors the ramp width of the
    /// linear interpolant at one s-step. Zero means no floor.
    std::size_t sgrid = 0;
};

/// x -> p(Phi(x1)) on R^dim. Depends on x1 only and is nonincreasing in it.
/// The gradient is left to central differences.
inline ScalarField symmetrized_field(const Profile& p, std::size_t dim, SymmetrizeOptions opts = {}) {
    auto prof = std::make_shared<const Profile>(p);
    if (opts.mode == Interpolation::piecewise_constant) {
        return ScalarField(
            dim, [prof](std::span<const double> x) { return (*prof)(Phi(x[0])); }, "symmetrized");
    }
    auto q = std::make_shared<const PlateauInterpolant>(p, opts.sgrid);
    return ScalarField(
        dim, [q](std::span<const double> x) { return q->at_x(x[0]); }, "symmetrized");
}

/// |grad f°| per grid cell for f° in linear mode, averaged over each cell
/// against the Gaussian measure.
inline std::vector<double> symmetrized_gradient_cells(const Profile& p, const GaussianGrid& grid, std::size_t m = 0) {
    const PlateauInterpolant q(p, m);
    const std::size_t n = grid.cells_per_axis();
    const double nd = static_cast<double>(n);
    std::vector<double> along(n);
    for (std::size_t k = 0; k < n; ++k)
        along[k] = q.weighted_drop(static_cast<double>(k) / nd, static_cast<double>(k + 1) / nd) * nd;
    const std::size_t stride = grid.size() / n;
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = along[i / stride];
    return out;
}

/// Interior band of the s-grid on which the pointwise identity is compared;
/// I vanishes and Phi_inv blows up at the ends.
inline constexpr double identity_band_lo = 0.05;
inline constexpr double identity_band_hi = 0.95;

struct IdentityCurves {
    std::vector<double> s;
    /// (-f*)'(s) I(s)
    std::vector<double> surrogate;
    /// |grad f°| at (Phi_inv(s), 0, ..., 0), by central differences
    std::vector<double> gradient;
};

/// Both sides of (-f*)'(Phi(x1)) I(Phi(x1)) = |grad f°(x)| on the interior
/// s-grid points.
inline IdentityCurves identity_curves(const ScalarField& field, const GaussianGrid& grid, std::size_t m) {
    if (!field.smooth())
        throw non_smooth_field("pointwise identity needs a smooth field, '" + field.label() + "' is not");
    const Profile fstar = decreasing_rearrangement(field, grid);
    const std::vector<double> surrogate = weighted_neg_derivative(fstar, m);
    const ScalarField sym = symmetrized_field(fstar, grid.dim(), {Interpolation::linear, m});

    IdentityCurves out;
    std::vector<double> x(grid.dim(), 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        const double s = sgrid_point(j, m);
        if (s < identity_band_lo || s > identity_band_hi)
            continue;
        x[0] = Phi_inv(s);
        out.s.push_back(s);
        out.surrogate.push_back(surrogate[j]);
        out.gradient.push_back(gradient_norm_at(sym, x));
    }
    return out;
}

inline double pointwise_identity_gap(const ScalarField& field, const GaussianGrid& grid, std::size_t m) {
    const IdentityCurves c = identity_curves(field, grid, m);
    double gap = 0.0;
    for (std::size_t i = 0; i < c.s.size(); ++i)
        gap = std::max(gap, std::abs(c.surrogate[i] - c.gradient[i]));
    return gap;
}

/// sup over the s-grid of |(f°)*_mu - f*_mu|, with f° in step mode.
inline double symmetrization_preserves_rearrangement(const ScalarField& field, const GaussianGrid& grid,
                                                     std::size_t m) {
    const Profile fstar = decreasing_rearrangement(field, grid);
    const ScalarField sym = symmetrized_field(fstar, grid.dim());
    const Profile symstar = decreasing_rearrangement(sym, grid);
    double gap = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        const double s = sgrid_point(j, m);
        gap = std::max(gap, std::abs(symstar(s) - fstar(s)));
    }
    return gap;
}

}  // namespace gsym
