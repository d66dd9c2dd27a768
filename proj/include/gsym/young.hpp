#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include "gsym/error.hpp"

namespace gsym {

/// Convex nondecreasing A on [0, inf) with A(0) = 0. Negative arguments are
/// evaluated at their absolute value.
class YoungFunction {
public:
    enum class kind { power, hinge, exp_sq_truncated };

    /// t^p, p >= 1.
    static YoungFunction power(double p) {
        if (!(p >= 1.0) || !std::isfinite(p))
            throw invalid_parameter("power Young function needs finite p >= 1");
        return {kind::power, p};
    }

    /// (t - c)_+, c >= 0.
    static YoungFunction hinge(double c) {
        if (!(c >= 0.0) || !std::isfinite(c))
            throw invalid_parameter("hinge Young function needs finite c >= 0");
        return {kind::hinge, c};
    }

    /// exp(t^2) - 1 up to t = T, continued linearly with slope 2T exp(T^2).
    static YoungFunction exp_sq_truncated(double T = 20.0) {
        if (!(T > 0.0 && T <= 26.0))
            throw invalid_parameter("exp_sq_truncated needs 0 < T <= 26");
        return {kind::exp_sq_truncated, T};
    }

    kind which() const noexcept { return kind_; }
    double parameter() const noexcept { return param_; }

    double operator()(double t) const {
        t = std::abs(t);
        switch (kind_) {
            case kind::power: return std::pow(t, param_);
            case kind::hinge: return t > param_ ? t - param_ : 0.0;
            case kind::exp_sq_truncated: {
                if (t <= param_)
                    return std::expm1(t * t);
                const double tail = std::exp(param_ * param_);
                return (tail - 1.0) + 2.0 * param_ * tail * (t - param_);
            }
        }
        return 0.0;
    }

    std::string name() const {
        switch (kind_) {
            case kind::power: return "power(" + format(param_) + ")";
            case kind::hinge: return "hinge(" + format(param_) + ")";
            case kind::exp_sq_truncated: return "expsq(" + format(param_) + ")";
        }
        return {};
    }

private:
    YoungFunction(kind k, double p) : kind_(k), param_(p) {}

    static std::string format(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%g", v);
        return buf;
    }

    kind kind_;
    double param_;
};

}  // namespace gsym
