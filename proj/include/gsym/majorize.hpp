#pragma once

// Orlicz integrals, rearrangement-invariant norms of profiles and
// Hardy-Littlewood-Polya majorization.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "gsym/error.hpp"
#include "gsym/profile.hpp"
#include "gsym/young.hpp"

namespace gsym {

/// int_0^1 A(p(s)) ds, exact for a step function.
inline double orlicz_integral(const Profile& p, const YoungFunction& A) {
    double sum = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k)
        sum += A(p.values()[k]) * p.width(k);
    return sum;
}

/// A rearrangement-invariant function norm on (0,1).
class RINorm {
public:
    enum class kind { lp, lorentz, marcinkiewicz, orlicz };

    static RINorm lp(double p) {
        if (!(p >= 1.0))
            throw invalid_parameter("Lp norm needs p >= 1");
        return RINorm(kind::lp, p, YoungFunction::power(1.0));
    }
    static RINorm lp_inf() { return lp(std::numeric_limits<double>::infinity()); }
    /// Lambda(p): int p*(s) d(s^{1/p}).
    static RINorm lorentz(double p) {
        if (!(p >= 1.0) || !std::isfinite(p))
            throw invalid_parameter("Lorentz norm needs finite p >= 1");
        return RINorm(kind::lorentz, p, YoungFunction::power(1.0));
    }
    /// M(p): sup_t t^{1/p} (1/t) int_0^t p*.
    static RINorm marcinkiewicz(double p) {
        if (!(p > 1.0) || !std::isfinite(p))
            throw invalid_parameter("Marcinkiewicz norm needs finite p > 1");
        return RINorm(kind::marcinkiewicz, p, YoungFunction::power(1.0));
    }
    /// Luxemburg norm of A.
    static RINorm orlicz(const YoungFunction& A) { return RINorm(kind::orlicz, 0.0, A); }

    /// Parses `lp:2`, `lp:inf`, `lorentz:2`, `marcinkiewicz:2`, `orlicz:expsq`,
    /// `orlicz:expsq:T`, `orlicz:pow:p`.
    static RINorm parse(std::string_view spec) {
        auto bad = [&]() -> invalid_parameter {
            return invalid_parameter("unrecognised norm '" + std::string(spec) + "'");
        };
        const auto colon = spec.find(':');
        if (colon == std::string_view::npos)
            throw bad();
        const std::string_view family = spec.substr(0, colon);
        const std::string_view arg = spec.substr(colon + 1);
        auto number = [&](std::string_view text) {
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
            if (ec != std::errc{} || ptr != text.data() + text.size())
                throw bad();
            return v;
        };
        if (family == "lp")
            return arg == "inf" ? lp_inf() : lp(number(arg));
        if (family == "lorentz")
            return lorentz(number(arg));
        if (family == "marcinkiewicz")
            return marcinkiewicz(number(arg));
        if (family == "orlicz") {
            if (arg == "expsq")
                return orlicz(YoungFunction::exp_sq_truncated());
            if (arg.starts_with("expsq:"))
                return orlicz(YoungFunction::exp_sq_truncated(number(arg.substr(6))));
            if (arg.starts_with("pow:"))
                return orlicz(YoungFunction::power(number(arg.substr(4))));
        }
        throw bad();
    }

    kind which() const noexcept { return kind_; }
    double exponent() const noexcept { return p_; }
    const YoungFunction& young() const noexcept { return young_; }

    std::string name() const {
        auto num = [](double v) {
            if (std::isinf(v))
                return std::string("inf");
            char buf[32];
            std::snprintf(buf, sizeof buf, "%g", v);
            return std::string(buf);
        };
        switch (kind_) {
            case kind::lp: return "lp:" + num(p_);
            case kind::lorentz: return "lorentz:" + num(p_);
            case kind::marcinkiewicz: return "marcinkiewicz:" + num(p_);
            case kind::orlicz:
                if (young_.which() == YoungFunction::kind::exp_sq_truncated)
                    return young_.parameter() == 20.0 ? "orlicz:expsq" : "orlicz:expsq:" + num(young_.parameter());
                return "orlicz:pow:" + num(young_.parameter());
        }
        return {};
    }

private:
    RINorm(kind k, double p, YoungFunction a) : kind_(k), p_(p), young_(a) {}

    kind kind_;
    double p_;
    YoungFunction young_;
};

/// The finite stand-in for "every r.i. space" used by the norm checks.
inline std::vector<RINorm> default_norm_family() {
    return {RINorm::lp(1.0),      RINorm::lp(1.5),      RINorm::lp(2.0),
            RINorm::lp(4.0),      RINorm::lp_inf(),     RINorm::lorentz(2.0),
            RINorm::marcinkiewicz(2.0), RINorm::orlicz(YoungFunction::exp_sq_truncated())};
}

namespace detail {

inline double luxemburg(const Profile& p, const YoungFunction& A) {
    const double top = std::abs(p.values().front());
    if (top == 0.0)
        return 0.0;
    auto mass = [&](double lambda) {
        double sum = 0.0;
        for (std::size_t k = 0; k < p.size(); ++k)
            sum += A(p.values()[k] / lambda) * p.width(k);
        return sum;
    };
    double hi = top;
    for (int i = 0; mass(hi) > 1.0; ++i) {
        if (i > 2000)
            throw convergence_error("Luxemburg norm: cannot find an upper bracket");
        hi *= 2.0;
    }
    double lo = hi;
    for (int i = 0; mass(lo) <= 1.0; ++i) {
        if (i > 2000)
            throw convergence_error("Luxemburg norm: cannot find a lower bracket");
        lo *= 0.5;
    }
    // Invariant: mass(lo) > 1 >= mass(hi). Bisect down to adjacent doubles.
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        (mass(mid) > 1.0 ? lo : hi) = mid;
    }
    return hi;
}

}  // namespace detail

/// Norm of a nonnegative nonincreasing profile.
inline double ri_norm(const Profile& p, const RINorm& X) {
    const auto& v = p.values();
    switch (X.which()) {
        case RINorm::kind::lp: {
            const double q = X.exponent();
            const double top = std::abs(v.front());
            if (std::isinf(q) || top == 0.0)
                return top;
            double sum = 0.0;
            for (std::size_t k = 0; k < p.size(); ++k)
                sum += std::pow(std::abs(v[k]) / top, q) * p.width(k);
            return top * std::pow(sum, 1.0 / q);
        }
        case RINorm::kind::lorentz: {
            const double r = 1.0 / X.exponent();
            const auto& s = p.knots();
            double sum = 0.0;
            for (std::size_t k = 0; k < p.size(); ++k)
                sum += v[k] * (std::pow(s[k + 1], r) - std::pow(s[k], r));
            return sum;
        }
        case RINorm::kind::marcinkiewicz: {
            // t^{1/p-1} C(t) has no interior maximum on a cell, so the
            // supremum sits on a knot.
            const double a = 1.0 / X.exponent() - 1.0;
            double best = 0.0;
            for (std::size_t k = 1; k < p.knots().size(); ++k) {
                const double t = p.knots()[k];
                best = std::max(best, std::pow(t, a) * p.cumulative(t));
            }
            return best;
        }
        case RINorm::kind::orlicz: return detail::luxemburg(p, X.young());
    }
    return 0.0;
}

struct MajorizationVerdict {
    bool holds = true;
    /// min over t of int_0^t h - int_0^t g
    double min_margin = 0.0;
    double t_star = 0.0;
    /// Margin at t_j = (j+1)/M.
    std::vector<double> margin;
};

/// g is majorized by h: int_0^t g <= int_0^t h + tol for all t. The verdict is
/// exact (checked on every knot of both profiles as well as the M-grid); the
/// margin curve is reported on the M-grid.
inline MajorizationVerdict majorizes(const Profile& h, const Profile& g, std::size_t m, double tol = 1e-12) {
    MajorizationVerdict out;
    out.margin.resize(m);
    out.min_margin = std::numeric_limits<double>::infinity();
    auto visit = [&](double t) {
        const double margin = h.cumulative(t) - g.cumulative(t);
        if (margin < out.min_margin) {
            out.min_margin = margin;
            out.t_star = t;
        }
        return margin;
    };
    for (std::size_t j = 0; j < m; ++j)
        out.margin[j] = visit(sgrid_edge(j, m));
    for (double t : h.knots())
        if (t > 0.0)
            visit(t);
    for (double t : g.knots())
        if (t > 0.0)
            visit(t);
    out.holds = out.min_margin >= -tol;
    return out;
}

struct HlpReport {
    bool hinge_holds = true;
    bool partial_holds = true;
    bool agree = true;
    /// Worst hinge level and its margin int (h-c)_+ - int (g-c)_+.
    double c_star = 0.0;
    double hinge_margin = 0.0;
    /// Worst partial-sum location and margin.
    double t_star = 0.0;
    double partial_margin = 0.0;
};

/// Compares the Orlicz-integral ordering over the hinge family (t - c)_+ on
/// c_grid with partial-sum majorization of g by h.
inline HlpReport hlp_equivalence_check(const Profile& g, const Profile& h, const std::vector<double>& c_grid,
                                       std::size_t m = 4096, double tol = 1e-12) {
    HlpReport out;
    out.hinge_margin = std::numeric_limits<double>::infinity();
    for (double c : c_grid) {
        const YoungFunction A = YoungFunction::hinge(c);
        const double margin = orlicz_integral(h, A) - orlicz_integral(g, A);
        if (margin < out.hinge_margin) {
            out.hinge_margin = margin;
            out.c_star = c;
        }
    }
    out.hinge_holds = out.hinge_margin >= -tol;
    const MajorizationVerdict v = majorizes(h, g, m, tol);
    out.partial_holds = v.holds;
    out.t_star = v.t_star;
    out.partial_margin = v.min_margin;
    out.agree = out.hinge_holds == out.partial_holds;
    return out;
}

/// Uniform c-grid of `count` points on [0, max(g, h)].
inline std::vector<double> hinge_grid(const Profile& g, const Profile& h, std::size_t count = 256) {
    const double top = std::max(g.values().front(), h.values().front());
    std::vector<double> c(count);
    for (std::size_t i = 0; i < count; ++i)
        c[i] = top * static_cast<double>(i) / static_cast<double>(count - 1);
    return c;
}

struct NormVerdict {
    std::string norm;
    double lhs = 0.0;  // ||g||
    double rhs = 0.0;  // ||h||
    double margin = 0.0;
    bool pass = true;
};

struct CalderonReport {
    bool precondition_holds = true;
    double precondition_margin = 0.0;
    std::vector<NormVerdict> norms;
    bool pass = true;
};

/// Given g majorized by h, checks ||g||_X <= ||h||_X for every X. A failed
/// precondition is reported (and fails the report) but the norms are still
/// evaluated.
inline CalderonReport calderon_check(const Profile& g, const Profile& h, const std::vector<RINorm>& norms,
                                     double rel_tol = 1e-9, std::size_t m = 4096) {
    CalderonReport out;
    const MajorizationVerdict v = majorizes(h, g, m);
    out.precondition_holds = v.holds;
    out.precondition_margin = v.min_margin;
    out.pass = v.holds;
    for (const RINorm& X : norms) {
        NormVerdict nv;
        nv.norm = X.name();
        nv.lhs = ri_norm(g, X);
        nv.rhs = ri_norm(h, X);
        nv.margin = nv.rhs - nv.lhs;
        nv.pass = nv.margin >= -rel_tol * (1.0 + nv.rhs);
        out.pass = out.pass && nv.pass;
        out.norms.push_back(nv);
    }
    return out;
}

}  // namespace gsym
