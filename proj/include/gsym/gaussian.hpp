#pragma once

// Standard normal special functions, the Gaussian isoperimetric profile and
// equal-measure product grids on R^n.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "gsym/error.hpp"

namespace gsym {

/// Standard normal density.
template <class Real = double>
Real phi(Real x) {
    const Real inv_sqrt_2pi = Real(1) / std::sqrt(Real(2) * std::numbers::pi_v<Real>);
    return inv_sqrt_2pi * std::exp(-x * x / Real(2));
}

/// Standard normal distribution function, computed from the complementary
/// error function in both tails.
template <class Real = double>
Real Phi(Real x) {
    return Real(0.5) * std::erfc(-x / std::numbers::sqrt2_v<Real>);
}

namespace detail {

// Acklam's rational approximation of the lower-tail normal quantile,
// relative error about 1.15e-9 on (0, 1/2].
template <class Real>
Real quantile_guess(Real q) {
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                                   1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                                   6.680131188771972e+01,  -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                                   -2.549671010229528e+00, 4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                                   3.754408661907416e+00};
    constexpr double q_low = 0.02425;

    if (q < Real(q_low)) {
        const Real r = std::sqrt(-Real(2) * std::log(q));
        return (((((Real(c[0]) * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]) /
               ((((Real(d[0]) * r + d[1]) * r + d[2]) * r + d[3]) * r + 1);
    }
    const Real u = q - Real(0.5);
    const Real r = u * u;
    return (((((Real(a[0]) * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * u /
           (((((Real(b[0]) * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
}

}  // namespace detail

/// Lower clamp applied to probabilities before inversion.
inline constexpr double quantile_clamp_low = 1e-300;
/// Upper clamp, 1 - 1e-16.
inline constexpr double quantile_clamp_gap = 1e-16;

/// Inverse of Phi. Throws domain_error for p outside the open unit interval;
/// inside, p is clamped to [1e-300, 1 - 1e-16].
template <class Real = double>
Real Phi_inv(Real p) {
    if (!(p > Real(0) && p < Real(1)))
        throw domain_error("Phi_inv: probability must lie in (0,1)");
    p = std::clamp(p, Real(quantile_clamp_low), Real(1) - Real(quantile_clamp_gap));

    // Work in the lower tail; 1 - p is exact for p >= 1/2.
    const bool upper = p > Real(0.5);
    const Real q = upper ? Real(1) - p : p;
    Real x = detail::quantile_guess(q);

    // Halley steps on Phi(x) - q, each cubically convergent.
    for (int it = 0; it < 2; ++it) {
        const Real e = Phi(x) - q;
        const Real dens = phi(x);
        if (e == Real(0) || dens == Real(0))
            break;
        const Real u = e / dens;
        x -= u / (Real(1) + x * u / Real(2));
    }
    return upper ? -x : x;
}

/// Gaussian isoperimetric profile I(t) = phi(Phi_inv(t)); zero at the
/// endpoints of [0,1]. Evaluated on min(t, 1-t).
template <class Real = double>
Real iso_profile(Real t) {
    if (!(t > Real(0) && t < Real(1)))
        return Real(0);
    const Real q = t > Real(0.5) ? Real(1) - t : t;
    return phi(Phi_inv(q));
}

/// Default ceiling on the number of cells of an equal-measure grid (128^3).
inline constexpr std::size_t default_cell_budget = std::size_t{1} << 21;

/// Product grid on R^n whose cells all carry Gaussian measure N^-n.
///
/// Along each axis the cell boundaries are Phi_inv(k/N), k = 0..N, and the
/// k-th representative is the measure midpoint Phi_inv((k+1/2)/N). Cells are
/// numbered row-major with x1 varying slowest.
class GaussianGrid {
public:
    GaussianGrid(std::size_t dim, std::size_t cells_per_axis, std::size_t cell_budget = default_cell_budget)
        : dim_(dim), n_(cells_per_axis) {
        if (dim < 1 || dim > 3)
            throw invalid_parameter("grid dimension must be 1, 2 or 3, got " + std::to_string(dim));
        if (cells_per_axis < 2)
            throw invalid_parameter("grid must be ≥ 2 cells per axis, got " + std::to_string(cells_per_axis));

        std::size_t cells = 1;
        for (std::size_t d = 0; d < dim; ++d) {
            if (cells > cell_budget / cells_per_axis)
                throw budget_error(cells * cells_per_axis, cell_budget);
            cells *= cells_per_axis;
        }
        size_ = cells;

        // upper half mirrors the lower half exactly
        axis_.resize(n_);
        const double nd = static_cast<double>(n_);
        for (std::size_t k = 0; k < (n_ + 1) / 2; ++k) {
            axis_[k] = Phi_inv((static_cast<double>(k) + 0.5) / nd);
            axis_[n_ - 1 - k] = -axis_[k];
        }
        if (n_ % 2 == 1)
            axis_[n_ / 2] = 0.0;

        measure_ = std::pow(nd, -static_cast<double>(dim_));

        points_.resize(size_ * dim_);
        for (std::size_t i = 0; i < size_; ++i) {
            std::size_t rest = i;
            for (std::size_t d = dim_; d-- > 0;) {
                points_[i * dim_ + d] = axis_[rest % n_];
                rest /= n_;
            }
        }
    }

    std::size_t dim() const noexcept { return dim_; }
    std::size_t cells_per_axis() const noexcept { return n_; }
    std::size_t size() const noexcept { return size_; }
    double cell_measure() const noexcept { return measure_; }

    std::span<const double> point(std::size_t i) const { return {points_.data() + i * dim_, dim_}; }
    std::span<const double> axis_nodes() const noexcept { return axis_; }

    /// Boundary k (0..N) along an axis; infinite at both ends.
    double axis_boundary(std::size_t k) const {
        if (k == 0)
            return -std::numeric_limits<double>::infinity();
        if (k >= n_)
            return std::numeric_limits<double>::infinity();
        return Phi_inv(static_cast<double>(k) / static_cast<double>(n_));
    }

private:
    std::size_t dim_;
    std::size_t n_;
    std::size_t size_ = 0;
    double measure_ = 0.0;
    std::vector<double> axis_;
    std::vector<double> points_;
};

inline GaussianGrid equal_measure_grid(std::size_t dim, std::size_t cells_per_axis,
                                       std::size_t cell_budget = default_cell_budget) {
    return GaussianGrid(dim, cells_per_axis, cell_budget);
}

}  // namespace gsym
