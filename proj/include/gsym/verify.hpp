#pragma once

// The inequality checks and their reports.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsym/error.hpp"
#include "gsym/field.hpp"
#include "gsym/gaussian.hpp"
#include "gsym/majorize.hpp"
#include "gsym/profile.hpp"
#include "gsym/rearrange.hpp"
#include "gsym/symmetrize.hpp"

namespace gsym {

/// Outcome of one check. Curves are sampled on `abscissa`: points of (0,1]
/// (the s-grid or its right edges t_j) for every check except the Orlicz
/// equality, whose curves run over hinge levels c.
struct IneqReport {
    std::string check_name;
    std::string field_label;
    std::size_t dim = 0;
    std::size_t N = 0;
    std::size_t M = 0;
    std::string abscissa_name = "s";
    std::vector<double> abscissa;
    std::vector<double> lhs_curve;
    std::vector<double> rhs_curve;
    /// Positive means violated.
    double max_violation = 0.0;
    double tolerance = 0.0;
    bool pass = true;
    long long runtime_ms = 0;
    /// Check-specific scalars (argmax location, pointwise counts, ...).
    std::vector<std::pair<std::string, double>> details;

    void finish(double violation, double tol) {
        max_violation = violation;
        tolerance = tol;
        pass = violation <= tol;
    }
};

struct VerifyOptions {
    /// Replaces the tolerance model when set.
    std::optional<double> tol;
    /// Treat the inequality as an equality: violations are measured two-sided.
    bool equality = false;
};

/// Everything the checks share for one (field, grid, M) triple.
struct FieldAnalysis {
    std::string label;
    bool smooth = true;
    std::size_t dim = 0;
    std::size_t N = 0;
    std::size_t M = 0;
    double cell_measure = 0.0;

    /// |f| and |grad f| per cell, in cell order.
    std::vector<double> abs_values;
    std::vector<double> grad_values;
    /// |grad f°| per cell, f° in linear mode, as Gaussian cell averages.
    std::vector<double> sym_grad_values;

    Profile fstar = Profile::constant(0.0);
    Profile grad_star = Profile::constant(0.0);
    Profile sym_grad_star = Profile::constant(0.0);

    /// (-f*)' and (-f*)' I on the s-grid, and the Lebesgue rearrangement of
    /// the latter.
    std::vector<double> deriv;
    std::vector<double> surrogate;
    Profile surrogate_star = Profile::constant(0.0);

    double sup_grad = 0.0;
    double sup_surrogate = 0.0;
};

inline FieldAnalysis analyze(const ScalarField& field, const GaussianGrid& grid, std::size_t m) {
    if (field.dim() != grid.dim())
        throw invalid_parameter("field dimension " + std::to_string(field.dim()) + " does not match grid dimension " +
                                std::to_string(grid.dim()));
    if (m < 8)
        throw invalid_parameter("s-grid must have at least 8 points");
    FieldAnalysis a;
    a.label = field.label();
    a.smooth = field.smooth();
    a.dim = grid.dim();
    a.N = grid.cells_per_axis();
    a.M = m;
    a.cell_measure = grid.cell_measure();

    a.abs_values = sample_abs(field, grid);
    a.grad_values = sample_gradient_norm(field, grid);
    a.fstar = rearrange_cells(a.abs_values);
    a.grad_star = rearrange_cells(a.grad_values);

    a.deriv = neg_derivative(a.fstar, m);
    a.surrogate = weighted_neg_derivative(a.fstar, m);
    a.surrogate_star = rearrange_sgrid(a.surrogate);

    a.sym_grad_values = symmetrized_gradient_cells(a.fstar, grid, m);
    a.sym_grad_star = rearrange_cells(a.sym_grad_values);

    a.sup_grad = a.grad_star.values().front();
    a.sup_surrogate = a.surrogate_star.values().front();
    return a;
}

/// tol(N, M) = 5 sup|grad f| / sqrt(N) + 10 sup surrogate / M, doubled for
/// non-smooth fields, plus a 1e-12 round-off floor.
inline double default_tolerance(const FieldAnalysis& a) {
    double tol = 5.0 * a.sup_grad / std::sqrt(static_cast<double>(a.N)) +
                 10.0 * a.sup_surrogate / static_cast<double>(a.M);
    if (!a.smooth)
        tol *= 2.0;
    return tol + 1e-12;
}

namespace detail {

class Stopwatch {
public:
    long long elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline IneqReport make_report(std::string name, const FieldAnalysis& a) {
    IneqReport r;
    r.check_name = std::move(name);
    r.field_label = a.label;
    r.dim = a.dim;
    r.N = a.N;
    r.M = a.M;
    return r;
}

inline std::vector<double> sgrid_edges(std::size_t m) {
    std::vector<double> t(m);
    for (std::size_t j = 0; j < m; ++j)
        t[j] = sgrid_edge(j, m);
    return t;
}

/// Worst violation of lhs <= rhs (or of lhs == rhs when two-sided), with its
/// location recorded in the report details.
inline double curve_violation(IneqReport& r, bool two_sided) {
    double worst = -std::numeric_limits<double>::infinity();
    double where = 0.0;
    double min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < r.lhs_curve.size(); ++j) {
        const double diff = r.lhs_curve[j] - r.rhs_curve[j];
        const double v = two_sided ? std::abs(diff) : diff;
        if (v > worst) {
            worst = v;
            where = r.abscissa[j];
        }
        min_margin = std::min(min_margin, -diff);
    }
    r.details.emplace_back("argmax", where);
    r.details.emplace_back("min_margin", min_margin);
    return worst;
}

inline double resolve_tol(const FieldAnalysis& a, const VerifyOptions& opts) {
    return opts.tol ? *opts.tol : default_tolerance(a);
}

}  // namespace detail

/// int_0^t |grad f°|*_mu <= int_0^t |grad f|*_mu on the s-grid edges.
inline IneqReport check_polya_szego(const FieldAnalysis& a, const VerifyOptions& opts = {}) {
    detail::Stopwatch clock;
    IneqReport r = detail::make_report("dos", a);
    r.abscissa = detail::sgrid_edges(a.M);
    r.lhs_curve.resize(a.M);
    r.rhs_curve.resize(a.M);
    for (std::size_t j = 0; j < a.M; ++j) {
        r.lhs_curve[j] = a.sym_grad_star.cumulative(r.abscissa[j]);
        r.rhs_curve[j] = a.grad_star.cumulative(r.abscissa[j]);
    }
    r.finish(detail::curve_violation(r, opts.equality), detail::resolve_tol(a, opts));
    r.runtime_ms = clock.elapsed_ms();
    return r;
}

/// int_0^t ((-f*)' I)* <= int_0^t |grad f|*_mu on the s-grid edges.
inline IneqReport check_reformulated(const FieldAnalysis& a, const VerifyOptions& opts = {}) {
    detail::Stopwatch clock;
    IneqReport r = detail::make_report("uno", a);
    r.abscissa = detail::sgrid_edges(a.M);
    r.lhs_curve.resize(a.M);
    r.rhs_curve.resize(a.M);
    for (std::size_t j = 0; j < a.M; ++j) {
        r.lhs_curve[j] = a.surrogate_star.cumulative(r.abscissa[j]);
        r.rhs_curve[j] = a.grad_star.cumulative(r.abscissa[j]);
    }
    r.finish(detail::curve_violation(r, opts.equality), detail::resolve_tol(a, opts));
    r.runtime_ms = clock.elapsed_ms();
    return r;
}

/// ||(-f*)' I||_X <= || |grad f|_mu ||_X, one report per norm. The curves are
/// the two rearranged profiles on the s-grid.
inline std::vector<IneqReport> check_norm_inequality(const FieldAnalysis& a, const std::vector<RINorm>& norms,
                                                     const VerifyOptions& opts = {}) {
    std::vector<IneqReport> out;
    for (const RINorm& X : norms) {
        detail::Stopwatch clock;
        IneqReport r = detail::make_report("norm:" + X.name(), a);
        r.abscissa.resize(a.M);
        r.lhs_curve.resize(a.M);
        r.rhs_curve.resize(a.M);
        for (std::size_t j = 0; j < a.M; ++j) {
            const double s = sgrid_point(j, a.M);
            r.abscissa[j] = s;
            r.lhs_curve[j] = a.surrogate_star(s);
            r.rhs_curve[j] = a.grad_star(s);
        }
        const double lhs = ri_norm(a.surrogate_star, X);
        const double rhs = ri_norm(a.grad_star, X);
        r.details.emplace_back("lhs_norm", lhs);
        r.details.emplace_back("rhs_norm", rhs);
        r.finish(opts.equality ? std::abs(lhs - rhs) : lhs - rhs, detail::resolve_tol(a, opts));
        r.runtime_ms = clock.elapsed_ms();
        out.push_back(std::move(r));
    }
    return out;
}

/// Mazya-Talenti in integrated form:
///   int_0^t (-f*)'(s) I(s) ds <= int_{|f| > f*(t)} |grad f| dgamma.
/// The pointwise form is compared as well on s-steps where f* is resolved,
/// i.e. its drop across the step exceeds ten times its largest single-cell
/// jump inside the step.
inline IneqReport check_mazya_talenti(const FieldAnalysis& a, const VerifyOptions& opts = {}) {
    detail::Stopwatch clock;
    IneqReport r = detail::make_report("mt", a);
    r.abscissa = detail::sgrid_edges(a.M);
    r.lhs_curve.resize(a.M);
    r.rhs_curve.resize(a.M);

    // |grad f| summed over cells in decreasing order of |f|.
    std::vector<std::size_t> order(a.abs_values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a.abs_values[x] > a.abs_values[y]; });
    std::vector<double> sorted_abs(order.size());
    std::vector<double> grad_prefix(order.size() + 1, 0.0);
    for (std::size_t k = 0; k < order.size(); ++k) {
        sorted_abs[k] = a.abs_values[order[k]];
        grad_prefix[k + 1] = grad_prefix[k] + a.grad_values[order[k]];
    }
    auto level_integral = [&](double level) {
        // cells with |f| > level form a prefix of the sorted order
        const auto count = static_cast<std::size_t>(
            std::partition_point(sorted_abs.begin(), sorted_abs.end(), [&](double v) { return v > level; }) -
            sorted_abs.begin());
        return grad_prefix[count] * a.cell_measure;
    };

    const double md = static_cast<double>(a.M);
    const auto& fv = a.fstar.values();
    double acc = 0.0;
    double prev_rhs = 0.0;
    double prev_level = fv.front();
    double pointwise_worst = -std::numeric_limits<double>::infinity();
    std::size_t pointwise_count = 0;
    for (std::size_t j = 0; j < a.M; ++j) {
        const double t = r.abscissa[j];
        acc += a.surrogate[j] / md;
        const double level = a.fstar(t);
        r.lhs_curve[j] = acc;
        r.rhs_curve[j] = level_integral(level);

        const std::size_t k_lo = a.fstar.cell_of(t - 1.0 / md);
        const std::size_t k_hi = a.fstar.cell_of(t);
        double max_jump = 0.0;
        for (std::size_t k = k_lo; k < k_hi; ++k)
            max_jump = std::max(max_jump, fv[k] - fv[k + 1]);
        const double drop = prev_level - level;
        if (drop > 0.0 && drop > 4.0 * max_jump) {
            const double density = (r.rhs_curve[j] - prev_rhs) * md;
            pointwise_worst = std::max(pointwise_worst, a.surrogate[j] - density);
            ++pointwise_count;
        }
        prev_rhs = r.rhs_curve[j];
        prev_level = level;
    }

    const double tol = detail::resolve_tol(a, opts);
    double violation = detail::curve_violation(r, opts.equality);
    r.details.emplace_back("pointwise_steps", static_cast<double>(pointwise_count));
    if (pointwise_count > 0) {
        r.details.emplace_back("pointwise_max_violation", pointwise_worst);
        violation = std::max(violation, pointwise_worst);
    }
    r.finish(violation, tol);
    r.runtime_ms = clock.elapsed_ms();
    return r;
}

/// A finite union of disjoint open intervals in (0,1), ordered left to right.
/// Adjacent intervals may touch.
struct IntervalUnion {
    std::vector<std::pair<double, double>> parts;

    void validate() const {
        double last = 0.0;
        for (const auto& [lo, hi] : parts) {
            if (!(lo >= 0.0 && hi <= 1.0 && lo < hi))
                throw interval_error("interval (" + std::to_string(lo) + "," + std::to_string(hi) +
                                     ") is empty or leaves (0,1)");
            if (lo < last)
                throw interval_error("intervals overlap or are out of order at " + std::to_string(lo));
            last = hi;
        }
    }

    double measure() const {
        double m = 0.0;
        for (const auto& [lo, hi] : parts)
            m += hi - lo;
        return m;
    }

    /// The part of the union lying in (0, t).
    IntervalUnion truncated(double t) const {
        IntervalUnion out;
        for (const auto& [lo, hi] : parts)
            if (lo < t)
                out.parts.emplace_back(lo, std::min(hi, t));
        return out;
    }
};

/// Integral over (0, t) of a step function whose j-th value holds on
/// [j/M, (j+1)/M).
inline double sgrid_step_integral(const std::vector<double>& samples, double t) {
    const std::size_t m = samples.size();
    const double md = static_cast<double>(m);
    t = std::clamp(t, 0.0, 1.0);
    const auto full = std::min(static_cast<std::size_t>(t * md), m);
    double sum = 0.0;
    for (std::size_t j = 0; j < full; ++j)
        sum += samples[j];
    sum /= md;
    if (full < m)
        sum += samples[full] * (t - static_cast<double>(full) / md);
    return sum;
}

inline double sgrid_step_integral(const std::vector<double>& samples, const IntervalUnion& E) {
    double sum = 0.0;
    for (const auto& [lo, hi] : E.parts)
        sum += sgrid_step_integral(samples, hi) - sgrid_step_integral(samples, lo);
    return sum;
}

/// The union of s-grid steps carrying the largest samples, of total measure t
/// (the last step taken partially). Over all sets of measure t it maximizes
/// the integral of the step function.
inline IntervalUnion top_set(const std::vector<double>& samples, double t) {
    const std::size_t m = samples.size();
    const double md = static_cast<double>(m);
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return samples[x] > samples[y]; });

    std::vector<std::pair<double, double>> pieces;
    double remaining = std::clamp(t, 0.0, 1.0);
    for (std::size_t idx : order) {
        if (remaining <= 0.0)
            break;
        const double lo = static_cast<double>(idx) / md;
        const double width = std::min(1.0 / md, remaining);
        pieces.emplace_back(lo, lo + width);
        remaining -= width;
    }
    std::sort(pieces.begin(), pieces.end());
    IntervalUnion out;
    for (const auto& piece : pieces) {
        if (!out.parts.empty() && out.parts.back().second >= piece.first)
            out.parts.back().second = std::max(out.parts.back().second, piece.second);
        else
            out.parts.push_back(piece);
    }
    return out;
}

/// int_E (-f*)' I ds <= int_0^{|E|} |grad f|*_mu for a finite interval union
/// E. The curves follow E cut at each s-grid edge t_j, so every truncation
/// of E is checked too.
inline IneqReport check_interval_bound(const FieldAnalysis& a, const IntervalUnion& E, const VerifyOptions& opts = {}) {
    E.validate();
    detail::Stopwatch clock;
    IneqReport r = detail::make_report("interval", a);
    r.abscissa = detail::sgrid_edges(a.M);
    r.lhs_curve.resize(a.M);
    r.rhs_curve.resize(a.M);
    for (std::size_t j = 0; j < a.M; ++j) {
        const IntervalUnion part = E.truncated(r.abscissa[j]);
        r.lhs_curve[j] = sgrid_step_integral(a.surrogate, part);
        r.rhs_curve[j] = a.grad_star.cumulative(part.measure());
    }
    r.details.emplace_back("measure", E.measure());
    r.details.emplace_back("lhs_total", sgrid_step_integral(a.surrogate, E));
    r.details.emplace_back("rhs_total", a.grad_star.cumulative(E.measure()));
    r.finish(detail::curve_violation(r, opts.equality), detail::resolve_tol(a, opts));
    r.runtime_ms = clock.elapsed_ms();
    return r;
}

/// Hinge levels spanning both sides of the Orlicz equality.
inline std::vector<double> default_c_grid(const FieldAnalysis& a, std::size_t count = 256) {
    const double top = std::max(a.sup_surrogate, a.sym_grad_star.values().front());
    std::vector<double> c(count);
    for (std::size_t i = 0; i < count; ++i)
        c[i] = top * static_cast<double>(i) / static_cast<double>(count - 1);
    return c;
}

/// int_0^1 A_c((-f*)' I) ds = int A_c(|grad f°|) dgamma for every hinge
/// A_c(t) = (t - c)_+; always two-sided.
inline IneqReport check_orlicz_equality(const FieldAnalysis& a, const std::vector<double>& c_grid,
                                        const VerifyOptions& opts = {}) {
    detail::Stopwatch clock;
    IneqReport r = detail::make_report("orlicz", a);
    r.abscissa_name = "c";
    r.abscissa = c_grid;
    r.lhs_curve.resize(c_grid.size());
    r.rhs_curve.resize(c_grid.size());
    const double md = static_cast<double>(a.M);
    for (std::size_t i = 0; i < c_grid.size(); ++i) {
        const YoungFunction A = YoungFunction::hinge(c_grid[i]);
        double lhs = 0.0;
        for (double v : a.surrogate)
            lhs += A(v);
        double rhs = 0.0;
        for (double v : a.sym_grad_values)
            rhs += A(v);
        r.lhs_curve[i] = lhs / md;
        r.rhs_curve[i] = rhs * a.cell_measure;
    }
    r.finish(detail::curve_violation(r, true), detail::resolve_tol(a, opts));
    r.runtime_ms = clock.elapsed_ms();
    return r;
}

// Convenience overloads running the shared analysis first.

inline IneqReport check_polya_szego(const ScalarField& f, const GaussianGrid& g, std::size_t m,
                                    const VerifyOptions& opts = {}) {
    return check_polya_szego(analyze(f, g, m), opts);
}
inline IneqReport check_reformulated(const ScalarField& f, const GaussianGrid& g, std::size_t m,
                                     const VerifyOptions& opts = {}) {
    return check_reformulated(analyze(f, g, m), opts);
}
inline std::vector<IneqReport> check_norm_inequality(const ScalarField& f, const GaussianGrid& g,
                                                     const std::vector<RINorm>& norms, std::size_t m,
                                                     const VerifyOptions& opts = {}) {
    return check_norm_inequality(analyze(f, g, m), norms, opts);
}
inline IneqReport check_mazya_talenti(const ScalarField& f, const GaussianGrid& g, std::size_t m,
                                      const VerifyOptions& opts = {}) {
    return check_mazya_talenti(analyze(f, g, m), opts);
}
inline IneqReport check_interval_bound(const ScalarField& f, const GaussianGrid& g, const IntervalUnion& E,
                                       std::size_t m, const VerifyOptions& opts = {}) {
    E.validate();
    return check_interval_bound(analyze(f, g, m), E, opts);
}
inline IneqReport check_orlicz_equality(const ScalarField& f, const GaussianGrid& g, const std::vector<double>& c_grid,
                                        std::size_t m, const VerifyOptions& opts = {}) {
    return check_orlicz_equality(analyze(f, g, m), c_grid, opts);
}

/// Single-report checks by their CLI name: uno, dos, mt, interval, orlicz.
inline IneqReport run_check(const std::string& name, const FieldAnalysis& a, const VerifyOptions& opts = {},
                            const IntervalUnion& E = {{{0.1, 0.2}, {0.6, 0.7}}}) {
    if (name == "uno")
        return check_reformulated(a, opts);
    if (name == "dos")
        return check_polya_szego(a, opts);
    if (name == "mt")
        return check_mazya_talenti(a, opts);
    if (name == "interval")
        return check_interval_bound(a, E, opts);
    if (name == "orlicz")
        return check_orlicz_equality(a, default_c_grid(a), opts);
    throw invalid_parameter("unknown check '" + name + "'");
}

struct ConvergenceRow {
    std::size_t N = 0;
    double max_violation = 0.0;
    double tolerance = 0.0;
    /// max over the s-grid of the change in both curves against the next
    /// finer resolution; NaN on the finest row.
    double refinement_change = std::numeric_limits<double>::quiet_NaN();
};

struct ConvergenceResult {
    std::string check_name;
    std::vector<ConvergenceRow> rows;
    /// Positive parts of the violations never grow by more than the slack
    /// factor from one resolution to the next.
    bool nonincreasing = true;
    /// Least-squares slope of -log(refinement change) against log N. +inf
    /// when the curves no longer change, NaN with fewer than two changes.
    double order = std::numeric_limits<double>::quiet_NaN();
    bool pass = true;
};

inline constexpr double convergence_slack = 1.5;
inline constexpr double convergence_min_order = 0.5;

/// Runs each check at every resolution in Ns (increasing) on a dim-dimensional
/// grid and summarizes how violations and curves behave under refinement.
inline std::vector<ConvergenceResult> convergence_study(const ScalarField& field, std::size_t dim,
                                                        const std::vector<std::string>& checks,
                                                        const std::vector<std::size_t>& Ns, std::size_t m,
                                                        const VerifyOptions& opts = {}) {
    for (std::size_t i = 1; i < Ns.size(); ++i)
        if (Ns[i] <= Ns[i - 1])
            throw invalid_parameter("convergence study needs increasing resolutions");

    std::vector<std::vector<IneqReport>> reports(checks.size());
    for (std::size_t N : Ns) {
        const GaussianGrid grid(dim, N);
        const FieldAnalysis a = analyze(field, grid, m);
        for (std::size_t c = 0; c < checks.size(); ++c)
            reports[c].push_back(run_check(checks[c], a, opts));
    }

    std::vector<ConvergenceResult> out;
    for (std::size_t c = 0; c < checks.size(); ++c) {
        ConvergenceResult res;
        res.check_name = checks[c];
        const auto& reps = reports[c];
        for (std::size_t i = 0; i < reps.size(); ++i) {
            ConvergenceRow row;
            row.N = Ns[i];
            row.max_violation = reps[i].max_violation;
            row.tolerance = reps[i].tolerance;
            if (i + 1 < reps.size()) {
                double change = 0.0;
                for (std::size_t j = 0; j < reps[i].lhs_curve.size(); ++j) {
                    change = std::max(change, std::abs(reps[i].lhs_curve[j] - reps[i + 1].lhs_curve[j]));
                    change = std::max(change, std::abs(reps[i].rhs_curve[j] - reps[i + 1].rhs_curve[j]));
                }
                row.refinement_change = change;
            }
            res.rows.push_back(row);
        }
        for (std::size_t i = 1; i < res.rows.size(); ++i) {
            const double before = std::max(res.rows[i - 1].max_violation, 0.0);
            const double after = std::max(res.rows[i].max_violation, 0.0);
            if (after > convergence_slack * before + 1e-12)
                res.nonincreasing = false;
        }

        std::vector<std::pair<double, double>> pts;
        bool all_zero = res.rows.size() >= 2;
        for (std::size_t i = 0; i + 1 < res.rows.size(); ++i) {
            const double d = res.rows[i].refinement_change;
            if (d > 0.0) {
                all_zero = false;
                pts.emplace_back(std::log(static_cast<double>(res.rows[i].N)), std::log(d));
            }
        }
        const bool settled = res.rows.size() >= 2 && res.rows[res.rows.size() - 2].refinement_change == 0.0;
        if (all_zero || settled) {
            res.order = std::numeric_limits<double>::infinity();
        } else if (pts.size() >= 2) {
            double mx = 0.0, my = 0.0;
            for (const auto& [x, y] : pts) {
                mx += x;
                my += y;
            }
            mx /= static_cast<double>(pts.size());
            my /= static_cast<double>(pts.size());
            double sxy = 0.0, sxx = 0.0;
            for (const auto& [x, y] : pts) {
                sxy += (x - mx) * (y - my);
                sxx += (x - mx) * (x - mx);
            }
            res.order = -sxy / sxx;
        }
        res.pass = res.nonincreasing && !(res.order < convergence_min_order);
        out.push_back(std::move(res));
    }
    return out;
}

}  // namespace gsym
