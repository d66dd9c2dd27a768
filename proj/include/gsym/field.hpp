#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsym/error.hpp"
#include "gsym/expr.hpp"

namespace gsym {

using Params = std::map<std::string, double, std::less<>>;

enum class GradientMode { analytic, finite_difference };

/// A deterministic scalar function on R^dim, optionally with a closed-form
/// gradient. Copies share the underlying callables.
class ScalarField {
public:
    using Evaluator = std::function<double(std::span<const double>)>;
    using Gradient = std::function<void(std::span<const double>, std::span<double>)>;

    ScalarField(std::size_t dim, Evaluator f, std::string label, Gradient grad = {}, bool smooth = true)
        : dim_(dim), f_(std::move(f)), grad_(std::move(grad)), label_(std::move(label)), smooth_(smooth) {}

    double operator()(std::span<const double> x) const { return f_(x); }

    std::size_t dim() const noexcept { return dim_; }
    const std::string& label() const noexcept { return label_; }
    GradientMode gradient_mode() const noexcept {
        return grad_ ? GradientMode::analytic : GradientMode::finite_difference;
    }
    /// False when the field is built from non-differentiable pieces such as abs.
    bool smooth() const noexcept { return smooth_; }
    const Gradient& analytic_gradient() const noexcept { return grad_; }

private:
    std::size_t dim_;
    Evaluator f_;
    Gradient grad_;
    std::string label_;
    bool smooth_;
};

/// Central-difference step for coordinate value xi.
inline double fd_step(double xi) {
    static const double base = std::cbrt(std::numeric_limits<double>::epsilon());
    return base * (1.0 + std::abs(xi));
}

/// Central-difference gradient, ignoring any analytic gradient.
inline void fd_gradient(const ScalarField& field, std::span<const double> x, std::span<double> out) {
    std::vector<double> probe(x.begin(), x.end());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double h0 = fd_step(x[i]);
        const volatile double up = x[i] + h0;
        const volatile double down = x[i] - h0;
        probe[i] = up;
        const double fp = field(probe);
        probe[i] = down;
        const double fm = field(probe);
        probe[i] = x[i];
        out[i] = (fp - fm) / (up - down);
    }
}

inline void gradient_at(const ScalarField& field, std::span<const double> x, std::span<double> out) {
    if (field.analytic_gradient())
        field.analytic_gradient()(x, out);
    else
        fd_gradient(field, x, out);
}

inline std::vector<double> gradient_at(const ScalarField& field, std::span<const double> x) {
    std::vector<double> g(x.size());
    gradient_at(field, x, g);
    return g;
}

inline double gradient_norm_at(const ScalarField& field, std::span<const double> x) {
    std::vector<double> g(x.size());
    gradient_at(field, x, g);
    double sum = 0.0;
    for (double gi : g)
        sum += gi * gi;
    return std::sqrt(sum);
}

/// Description of one entry of the builtin corpus.
struct BuiltinInfo {
    std::string_view name;
    std::string_view formula;
    std::string_view gradient;
    Params defaults;
};

inline const std::vector<BuiltinInfo>& builtin_catalog() {
    static const std::vector<BuiltinInfo> catalog{
        {"coordinate", "f(x) = x_axis", "|∇f| ≡ 1 (constant unit vector e_axis)", {{"axis", 1.0}}},
        {"halfspace_indicator_smooth", "f(x) = (1 - tanh((x1 - a)/eps))/2, a smoothed indicator of {x1 < a}",
         "analytic, concentrated near x1 = a with peak 1/(2 eps)", {{"a", 0.0}, {"eps", 0.05}}},
        {"gaussian_bump", "f(x) = exp(-c |x|^2)", "analytic, -2c x f(x); vanishes at the origin", {{"c", 1.0}}},
        {"mixture", "f(x) = exp(-|x - shift e1|^2) + weight exp(-2 |x + shift e1|^2)", "analytic",
         {{"shift", 1.0}, {"weight", 0.5}}},
        {"poly_tanh", "f(x) = tanh(a x1) + b x1^2 + sum_{i>=2} tanh(x_i)/2", "analytic",
         {{"a", 2.0}, {"b", 0.25}}},
        {"monotone1d", "f(x) = exp(-a x1), nonnegative and strictly decreasing in x1",
         "analytic, |grad f| = a f; a fixed point of Gaussian symmetrization", {{"a", 1.0}}},
    };
    return catalog;
}

inline const BuiltinInfo& builtin_info(std::string_view name) {
    for (const auto& info : builtin_catalog())
        if (info.name == name)
            return info;
    throw unknown_field(std::string(name));
}

namespace detail {

inline Params merge_params(const BuiltinInfo& info, const Params& given) {
    Params out = info.defaults;
    for (const auto& [key, value] : given) {
        if (!out.contains(key))
            throw invalid_parameter("field '" + std::string(info.name) + "' has no parameter '" + key + "'");
        if (!std::isfinite(value))
            throw invalid_parameter("parameter '" + key + "' must be finite");
        out[key] = value;
    }
    return out;
}

inline std::string make_label(std::string_view name, const Params& params) {
    std::string label(name);
    for (const auto& [key, value] : params) {
        char buf[64];
        std::snprintf(buf, sizeof buf, ",%s=%g", key.c_str(), value);
        label += buf;
    }
    return label;
}

inline double squared_norm(std::span<const double> x) {
    double s = 0.0;
    for (double v : x)
        s += v * v;
    return s;
}

}  // namespace detail

/// Instantiates a field of the builtin corpus on R^dim.
inline ScalarField builtin_field(std::string_view name, const Params& params, std::size_t dim) {
    const BuiltinInfo& info = builtin_info(name);
    const Params p = detail::merge_params(info, params);
    const std::string label = detail::make_label(name, p);
    if (dim < 1)
        throw invalid_parameter("field dimension must be positive");

    if (name == "coordinate") {
        const double axis_value = p.at("axis");
        if (axis_value != std::floor(axis_value) || axis_value < 1 || axis_value > static_cast<double>(dim))
            throw invalid_parameter("coordinate axis must be an integer in 1.." + std::to_string(dim));
        const auto axis = static_cast<std::size_t>(axis_value) - 1;
        return ScalarField(
            dim, [axis](std::span<const double> x) { return x[axis]; }, label,
            [axis](std::span<const double>, std::span<double> g) {
                std::fill(g.begin(), g.end(), 0.0);
                g[axis] = 1.0;
            });
    }
    if (name == "halfspace_indicator_smooth") {
        const double a = p.at("a"), eps = p.at("eps");
        if (!(eps > 0))
            throw invalid_parameter("halfspace_indicator_smooth needs eps > 0");
        return ScalarField(
            dim, [a, eps](std::span<const double> x) { return 0.5 * (1.0 - std::tanh((x[0] - a) / eps)); }, label,
            [a, eps](std::span<const double> x, std::span<double> g) {
                std::fill(g.begin(), g.end(), 0.0);
                const double t = std::tanh((x[0] - a) / eps);
                g[0] = -0.5 * (1.0 - t * t) / eps;
            });
    }
    if (name == "gaussian_bump") {
        const double c = p.at("c");
        if (!(c > 0))
            throw invalid_parameter("gaussian_bump needs c > 0");
        return ScalarField(
            dim, [c](std::span<const double> x) { return std::exp(-c * detail::squared_norm(x)); }, label,
            [c](std::span<const double> x, std::span<double> g) {
                const double f = std::exp(-c * detail::squared_norm(x));
                for (std::size_t i = 0; i < x.size(); ++i)
                    g[i] = -2.0 * c * x[i] * f;
            });
    }
    if (name == "mixture") {
        const double shift = p.at("shift"), weight = p.at("weight");
        if (!(weight >= 0))
            throw invalid_parameter("mixture needs weight >= 0");
        auto parts = [shift](std::span<const double> x, double& r1, double& r2) {
            r1 = r2 = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                const double off = i == 0 ? shift : 0.0;
                r1 += (x[i] - off) * (x[i] - off);
                r2 += (x[i] + off) * (x[i] + off);
            }
        };
        return ScalarField(
            dim,
            [parts, weight](std::span<const double> x) {
                double r1, r2;
                parts(x, r1, r2);
                return std::exp(-r1) + weight * std::exp(-2.0 * r2);
            },
            label,
            [parts, shift, weight](std::span<const double> x, std::span<double> g) {
                double r1, r2;
                parts(x, r1, r2);
                const double e1 = std::exp(-r1), e2 = weight * std::exp(-2.0 * r2);
                for (std::size_t i = 0; i < x.size(); ++i) {
                    const double off = i == 0 ? shift : 0.0;
                    g[i] = -2.0 * (x[i] - off) * e1 - 4.0 * (x[i] + off) * e2;
                }
            });
    }
    if (name == "poly_tanh") {
        const double a = p.at("a"), b = p.at("b");
        return ScalarField(
            dim,
            [a, b](std::span<const double> x) {
                double v = std::tanh(a * x[0]) + b * x[0] * x[0];
                for (std::size_t i = 1; i < x.size(); ++i)
                    v += 0.5 * std::tanh(x[i]);
                return v;
            },
            label,
            [a, b](std::span<const double> x, std::span<double> g) {
                const double t = std::tanh(a * x[0]);
                g[0] = a * (1.0 - t * t) + 2.0 * b * x[0];
                for (std::size_t i = 1; i < x.size(); ++i) {
                    const double ti = std::tanh(x[i]);
                    g[i] = 0.5 * (1.0 - ti * ti);
                }
            });
    }
    // monotone1d
    const double a = p.at("a");
    if (!(a > 0))
        throw invalid_parameter("monotone1d needs a > 0");
    return ScalarField(
        dim, [a](std::span<const double> x) { return std::exp(-a * x[0]); }, label,
        [a](std::span<const double> x, std::span<double> g) {
            std::fill(g.begin(), g.end(), 0.0);
            g[0] = -a * std::exp(-a * x[0]);
        });
}

/// Field defined by an expression in x1..x9. The gradient is always taken by
/// central differences; expressions using abs are marked non-smooth.
inline ScalarField parse_field(std::string_view text, std::size_t dim) {
    auto expr = std::make_shared<const Expression>(Expression::parse(text, dim));
    const bool smooth = !expr->uses_abs();
    return ScalarField(
        dim, [expr](std::span<const double> x) { return (*expr)(x); }, std::string(text), {}, smooth);
}

}  // namespace gsym
