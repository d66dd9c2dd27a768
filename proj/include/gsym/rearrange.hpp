#pragma once

// Distribution functions and decreasing rearrangements with respect to the
// Gaussian measure (on grid data) and to Lebesgue measure on (0,1).

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "gsym/error.hpp"
#include "gsym/field.hpp"
#include "gsym/gaussian.hpp"
#include "gsym/profile.hpp"
#include "gsym/young.hpp"

namespace gsym {

/// |f| at every cell representative, in cell order.
inline std::vector<double> sample_abs(const ScalarField& field, const GaussianGrid& grid) {
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        out[i] = std::abs(field(grid.point(i)));
    return out;
}

/// |grad f| at every cell representative, in cell order.
inline std::vector<double> sample_gradient_norm(const ScalarField& field, const GaussianGrid& grid) {
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        out[i] = gradient_norm_at(field, grid.point(i));
    return out;
}

/// Rearranges equal-measure cell values: |v| sorted descending, ties kept in
/// cell order.
inline Profile rearrange_cells(std::vector<double> cell_values) {
    for (double& v : cell_values)
        v = std::abs(v);
    std::vector<std::size_t> order(cell_values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return cell_values[a] > cell_values[b]; });
    std::vector<double> sorted(order.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        sorted[k] = cell_values[order[k]];
    return Profile::uniform(std::move(sorted));
}

/// Gaussian measure of {|f| > lambda}, counted on cell representatives.
inline double distribution_function(const ScalarField& field, const GaussianGrid& grid, double lambda) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (std::abs(field(grid.point(i))) > lambda)
            ++count;
    return static_cast<double>(count) * grid.cell_measure();
}

/// f*_mu: decreasing rearrangement of |f| with respect to the grid's Gaussian
/// cell measures.
inline Profile decreasing_rearrangement(const ScalarField& field, const GaussianGrid& grid) {
    return rearrange_cells(sample_abs(field, grid));
}

struct WeightedSample {
    double weight;
    double value;
};

/// Decreasing rearrangement on (0,1) with Lebesgue measure: values sorted
/// descending (stable), weights become knot increments. Values are taken as
/// given, so callers pass nonnegative data.
inline Profile lebesgue_rearrangement(std::vector<WeightedSample> samples) {
    if (samples.empty())
        throw invalid_parameter("lebesgue_rearrangement needs at least one sample");
    double total = 0.0;
    for (const auto& s : samples) {
        if (!(s.weight > 0.0))
            throw weight_sum_error("sample weights must be positive");
        total += s.weight;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw weight_sum_error("sample weights must sum to 1, got " + std::to_string(total));

    std::stable_sort(samples.begin(), samples.end(),
                     [](const WeightedSample& a, const WeightedSample& b) { return a.value > b.value; });
    std::vector<double> knots(samples.size() + 1, 0.0);
    std::vector<double> values(samples.size());
    for (std::size_t k = 0; k < samples.size(); ++k) {
        knots[k + 1] = knots[k] + samples[k].weight;
        values[k] = samples[k].value;
    }
    knots.back() = 1.0;
    return Profile(std::move(knots), std::move(values));
}

/// Lebesgue rearrangement of a curve sampled on the uniform s-grid.
inline Profile rearrange_sgrid(const std::vector<double>& samples) {
    std::vector<double> sorted(samples);
    std::stable_sort(sorted.begin(), sorted.end(), std::greater<>{});
    return Profile::uniform(std::move(sorted));
}

/// Continuous stand-in for a profile, used whenever the profile has to be
/// differentiated or evaluated between cells.
///
/// Runs of equal values are merged into plateaus first. Each jump between two
/// plateaus becomes a ramp centred on the jump, with half-width
///
///     r = min(w_left / 2, w_right / 2, R),
///
/// where R is the widest interior plateau, or 1/m if that is larger.
///
/// Along a ramp the interpolant is linear in the Gaussian coordinate
/// x = Phi_inv(s). I(s) (-q)'(s) is constant on every ramp and equals the
/// slope of x -> q(Phi(x)).
class PlateauInterpolant {
public:
    explicit PlateauInterpolant(const Profile& p, std::size_t m = 0) {
        const auto& v = p.values();
        const auto& s = p.knots();
        std::vector<double> lo, hi, val;
        for (std::size_t k = 0; k < v.size();) {
            std::size_t e = k + 1;
            while (e < v.size() && v[e] == v[k])
                ++e;
            lo.push_back(s[k]);
            hi.push_back(s[e]);
            val.push_back(v[k]);
            k = e;
        }
        const std::size_t count = val.size();
        double cap = m > 0 ? 1.0 / static_cast<double>(m) : 0.0;
        for (std::size_t k = 1; k + 1 < count; ++k)
            cap = std::max(cap, hi[k] - lo[k]);
        if (count <= 2 && cap == 0.0)
            cap = 1.0;

        std::vector<double> r(count, 0.0);  // r[k]: half-width of the ramp after plateau k
        for (std::size_t k = 0; k + 1 < count; ++k)
            r[k] = std::min({0.5 * (hi[k] - lo[k]), 0.5 * (hi[k + 1] - lo[k + 1]), cap});
        for (std::size_t k = 0; k < count; ++k) {
            add(lo[k] + (k > 0 ? r[k - 1] : 0.0), val[k]);
            add(hi[k] - r[k], val[k]);
        }
        xs_.resize(s_.size());
        for (std::size_t i = 0; i < s_.size(); ++i)
            xs_[i] = s_[i] <= 0.0 ? -std::numeric_limits<double>::infinity()
                     : s_[i] >= 1.0 ? std::numeric_limits<double>::infinity()
                                    : Phi_inv(s_[i]);
    }

    /// q(s) for s in [0,1].
    double operator()(double s) const {
        if (s <= s_.front())
            return values_.front();
        if (s >= s_.back())
            return values_.back();
        return at_x(Phi_inv(s));
    }

    /// q(Phi(x)).
    double at_x(double x) const {
        if (!(x > xs_.front()))
            return values_.front();
        if (!(x < xs_.back()))
            return values_.back();
        const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
        const std::size_t i = static_cast<std::size_t>(it - xs_.begin());
        if (values_[i - 1] == values_[i])
            return values_[i];
        const double w = (x - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
        return values_[i - 1] + w * (values_[i] - values_[i - 1]);
    }

    /// Integral of I(s) (-q)'(s) over [a,b].
    double weighted_drop(double a, double b) const {
        double sum = 0.0;
        for (std::size_t i = 1; i < s_.size(); ++i) {
            const double lo = std::max(a, s_[i - 1]);
            const double hi = std::min(b, s_[i]);
            if (hi > lo && values_[i - 1] != values_[i])
                sum += (values_[i - 1] - values_[i]) / (xs_[i] - xs_[i - 1]) * (hi - lo);
        }
        return sum;
    }

    /// Breakpoints of the interpolant in s, nondecreasing.
    const std::vector<double>& nodes() const noexcept { return s_; }

private:
    void add(double s, double v) {
        if (!s_.empty() && s <= s_.back() && v == values_.back())
            return;
        s_.push_back(s);
        values_.push_back(v);
    }

    std::vector<double> s_;
    std::vector<double> xs_;
    std::vector<double> values_;
};

/// Samples of (-p)' on the M-point s-grid: the difference quotient of the
/// plateau interpolant across each s-step. Round-off negatives are clamped
/// to zero.
inline std::vector<double> neg_derivative(const Profile& p, std::size_t m) {
    if (m < 8)
        throw invalid_parameter("neg_derivative needs an s-grid of at least 8 points");
    const PlateauInterpolant q(p, m);
    const double md = static_cast<double>(m);
    std::vector<double> edge(m + 1);
    for (std::size_t j = 0; j <= m; ++j)
        edge[j] = q(static_cast<double>(j) / md);
    std::vector<double> out(m);
    for (std::size_t j = 0; j < m; ++j)
        out[j] = std::max(0.0, (edge[j] - edge[j + 1]) * md);
    return out;
}

/// Step averages of (-p)' I on the M-point s-grid, taken from the plateau
/// interpolant.
inline std::vector<double> weighted_neg_derivative(const Profile& p, std::size_t m) {
    if (m < 8)
        throw invalid_parameter("weighted_neg_derivative needs an s-grid of at least 8 points");
    const PlateauInterpolant q(p, m);
    const double md = static_cast<double>(m);
    std::vector<double> out(m);
    for (std::size_t j = 0; j < m; ++j)
        out[j] = std::max(0.0, q.weighted_drop(static_cast<double>(j) / md, static_cast<double>(j + 1) / md) * md);
    return out;
}

/// |sum_cells A(|f|) * measure - int_0^1 A(f*_mu)|; zero up to round-off since
/// both sides sum the same multiset.
inline double equimeasurability_gap(const ScalarField& field, const GaussianGrid& grid, const YoungFunction& A) {
    const std::vector<double> values = sample_abs(field, grid);
    double lhs = 0.0;
    for (double v : values)
        lhs += A(v) * grid.cell_measure();
    const Profile p = rearrange_cells(values);
    double rhs = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k)
        rhs += A(p.values()[k]) * p.width(k);
    return std::abs(lhs - rhs);
}

}  // namespace gsym
