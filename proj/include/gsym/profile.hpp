#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "gsym/error.hpp"

namespace gsym {

/// Nonincreasing step function on (0,1].
///
/// Cell k covers (knots[k], knots[k+1]] and carries values[k]. The knots start
/// at 0, end at 1 and increase strictly; the values never increase.
class Profile {
public:
    Profile(std::vector<double> knots, std::vector<double> values)
        : knots_(std::move(knots)), values_(std::move(values)) {
        validate();
        build_prefix();
    }

    /// Profile whose K cells all have width 1/K.
    static Profile uniform(std::vector<double> values) {
        const std::size_t k = values.size();
        std::vector<double> knots(k + 1);
        for (std::size_t i = 0; i <= k; ++i)
            knots[i] = static_cast<double>(i) / static_cast<double>(k);
        return Profile(std::move(knots), std::move(values));
    }

    static Profile constant(double c) { return Profile({0.0, 1.0}, {c}); }

    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<double>& knots() const noexcept { return knots_; }
    const std::vector<double>& values() const noexcept { return values_; }
    double width(std::size_t k) const { return knots_[k + 1] - knots_[k]; }

    /// Index of the cell containing s, with s <= 0 mapped to the first cell
    /// and s > 1 to the last.
    std::size_t cell_of(double s) const {
        auto it = std::lower_bound(knots_.begin() + 1, knots_.end() - 1, s);
        return static_cast<std::size_t>(it - (knots_.begin() + 1));
    }

    /// Right-continuous evaluation: the value at knot s_k is values[k-1].
    double operator()(double s) const { return values_[cell_of(s)]; }

    /// Integral over (0, t), t clipped to [0,1].
    double cumulative(double t) const {
        if (t <= 0.0)
            return 0.0;
        if (t >= 1.0)
            return prefix_.back();
        const std::size_t k = cell_of(t);
        return prefix_[k] + values_[k] * (t - knots_[k]);
    }

    double integral() const noexcept { return prefix_.back(); }

    /// Mean over [a,b] intersected with [0,1], accumulated relative to the
    /// first value in the window.
    double window_average(double a, double b) const {
        a = std::clamp(a, 0.0, 1.0);
        b = std::clamp(b, 0.0, 1.0);
        if (!(b > a))
            return (*this)(a);
        std::size_t k = cell_of(a);
        if (a >= knots_[k + 1] && k + 1 < size())
            ++k;
        const double ref = values_[k];
        double acc = 0.0;
        for (; k < size() && knots_[k] < b; ++k) {
            const double lo = std::max(a, knots_[k]);
            const double hi = std::min(b, knots_[k + 1]);
            if (hi > lo)
                acc += (values_[k] - ref) * (hi - lo);
        }
        return ref + acc / (b - a);
    }

    double max_width() const {
        double w = 0.0;
        for (std::size_t k = 0; k < size(); ++k)
            w = std::max(w, width(k));
        return w;
    }

    friend bool operator==(const Profile&, const Profile&) = default;

private:
    void validate() const {
        if (values_.empty() || knots_.size() != values_.size() + 1)
            throw invalid_parameter("profile needs K >= 1 values and K+1 knots");
        if (knots_.front() != 0.0 || knots_.back() != 1.0)
            throw invalid_parameter("profile knots must start at 0 and end at 1");
        for (std::size_t k = 0; k + 1 < knots_.size(); ++k)
            if (!(knots_[k + 1] > knots_[k]))
                throw invalid_parameter("profile knots must increase strictly");
        for (std::size_t k = 0; k < values_.size(); ++k) {
            if (!std::isfinite(values_[k]))
                throw invalid_parameter("profile values must be finite");
            if (k > 0 && values_[k] > values_[k - 1])
                throw invalid_parameter("profile values must be nonincreasing (cell " + std::to_string(k) + ")");
        }
    }

    void build_prefix() {
        prefix_.assign(values_.size() + 1, 0.0);
        for (std::size_t k = 0; k < values_.size(); ++k)
            prefix_[k + 1] = prefix_[k] + values_[k] * width(k);
    }

    std::vector<double> knots_;
    std::vector<double> values_;
    std::vector<double> prefix_;
};

/// Uniform grid of M points s_j = (j + 1/2)/M on (0,1), used for every
/// comparison made on the unit interval.
inline double sgrid_point(std::size_t j, std::size_t m) {
    return (static_cast<double>(j) + 0.5) / static_cast<double>(m);
}

/// Right end t_j = (j+1)/M of the j-th s-grid cell; cumulative curves are
/// sampled here.
inline double sgrid_edge(std::size_t j, std::size_t m) {
    return static_cast<double>(j + 1) / static_cast<double>(m);
}

}  // namespace gsym
