#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "eomt/errors.hpp"

namespace eomt::analysis {

// geometric grid including both endpoints exactly
inline std::vector<double> log_grid(double lo, double hi, int points)
{
    if (!(lo > 0.0) || !(hi > 0.0))
        throw validation_error("log_grid: bounds must be > 0");
    if (hi < lo)
        throw validation_error("log_grid: max must be >= min");
    if (points < 1)
        throw validation_error("log_grid: points must be >= 1");
    std::vector<double> g(static_cast<std::size_t>(points));
    if (points == 1) {
        g[0] = lo;
        return g;
    }
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < points; ++i)
        g[static_cast<std::size_t>(i)] = std::exp(llo + (lhi - llo) * i / (points - 1));
    g.front() = lo;
    g.back() = hi;
    return g;
}

struct GoldenResult {
    double x = 0;
    double value = 0;
    int iterations = 0;
    double width = 0; // final bracket width in the search coordinate
};

// Maximize a unimodal f on [lo, hi]; x_tol is absolute in the search
// coordinate (pass a log-space objective for a relative tolerance). Returns
// the best point ever evaluated, so the result dominates the bracket probes.
template <class F>
GoldenResult golden_section_maximize(F&& f, double lo, double hi, double x_tol = 1e-9, int max_iter = 200)
{
    if (!(hi >= lo))
        throw validation_error("golden_section_maximize: empty bracket");
    constexpr double invphi = 0.6180339887498948482;
    double a = lo, b = hi;
    double best_x = a;
    double best_f = f(a);
    const auto probe = [&](double x) {
        const double fx = f(x);
        if (fx > best_f) {
            best_f = fx;
            best_x = x;
        }
        return fx;
    };
    probe(b);
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = probe(c), fd = probe(d);
    int it = 0;
    while (b - a > x_tol && it < max_iter) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = probe(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = probe(d);
        }
        ++it;
    }
    probe(0.5 * (a + b));
    GoldenResult r;
    r.x = best_x;
    r.value = best_f;
    r.iterations = it;
    r.width = b - a;
    return r;
}

struct SimplexResult {
    std::array<double, 2> x{};
    double value = 0;
    int iterations = 0;
    bool converged = false;
    double spread = 0; // best-to-worst objective gap at exit
};

// Nelder-Mead maximization in the plane: reflection, expansion, contraction,
// shrink with the standard coefficients and a deterministic right-angle
// starting simplex. Stops when the objective spread across the simplex drops
// below f_tol relative to the best value.
template <class F>
SimplexResult nelder_mead_maximize(F&& f, std::array<double, 2> start, double step,
                                   double f_tol = 1e-12, int max_iter = 600)
{
    using pt = std::array<double, 2>;
    struct vertex {
        pt x;
        double fx;
    };
    std::array<vertex, 3> s{};
    s[0] = {start, f(start)};
    s[1] = {{start[0] + step, start[1]}, 0.0};
    s[1].fx = f(s[1].x);
    s[2] = {{start[0], start[1] + step}, 0.0};
    s[2].fx = f(s[2].x);
    const auto order = [&] {
        std::sort(s.begin(), s.end(), [](const vertex& l, const vertex& r) { return l.fx > r.fx; });
    };
    order();
    int it = 0;
    bool converged = false;
    for (; it < max_iter; ++it) {
        if (s[0].fx - s[2].fx <= f_tol * (std::fabs(s[0].fx) + f_tol)) {
            converged = true;
            break;
        }
        const pt mid{(s[0].x[0] + s[1].x[0]) / 2.0, (s[0].x[1] + s[1].x[1]) / 2.0};
        const auto blend = [&](double t) {
            return pt{mid[0] + t * (mid[0] - s[2].x[0]), mid[1] + t * (mid[1] - s[2].x[1])};
        };
        const pt xr = blend(1.0);
        const double fr = f(xr);
        if (fr > s[0].fx) {
            const pt xe = blend(2.0);
            const double fe = f(xe);
            if (fe > fr)
                s[2] = {xe, fe};
            else
                s[2] = {xr, fr};
        } else if (fr > s[1].fx) {
            s[2] = {xr, fr};
        } else {
            const pt xc = blend(fr > s[2].fx ? 0.5 : -0.5);
            const double fc = f(xc);
            if (fc > std::max(fr, s[2].fx)) {
                s[2] = {xc, fc};
            } else {
                for (int i = 1; i < 3; ++i) {
                    s[i].x = {(s[i].x[0] + s[0].x[0]) / 2.0, (s[i].x[1] + s[0].x[1]) / 2.0};
                    s[i].fx = f(s[i].x);
                }
            }
        }
        order();
    }
    SimplexResult r;
    r.x = s[0].x;
    r.value = s[0].fx;
    r.iterations = it;
    r.converged = converged;
    r.spread = s[0].fx - s[2].fx;
    return r;
}

} // namespace eomt::analysis
