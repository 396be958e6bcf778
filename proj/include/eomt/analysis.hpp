#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "eomt/errors.hpp"
#include "eomt/gaussian.hpp"
#include "eomt/optimize.hpp"
#include "eomt/params.hpp"
#include "eomt/scattering.hpp"

namespace eomt::analysis {

struct NsSweepRow {
    double ns = 0;
    double ln_tmsv = 0;
    double ln_ctmg = 0;
    double ratio = 0;
};

struct NsSweepResult {
    double omega = 0;
    std::vector<NsSweepRow> rows;
};

struct LossSweepRow {
    double gamma_o = 0;
    double gamma_e = 0;
    double value = 0;
};

enum class LossObjective { efficiency, log_negativity };

struct LossSweepResult {
    LossObjective objective = LossObjective::efficiency;
    double n_s = 0;
    double omega = 0;
    std::vector<LossSweepRow> rows; // gamma_o outer, gamma_e inner
};

struct OptimumReport {
    std::vector<double> argmax;
    double objective = 0;
    double auxiliary = 0;  // conversion efficiency at the argmax where meaningful
    int iterations = 0;
    double tolerance = 0;  // achieved width/spread in the log-rate search space
    bool converged = true; // false on bracket-boundary maxima or iteration cap
};

inline NsSweepResult sweep_ln_vs_ns(const params::DerivedParams& d,
                                    const std::vector<double>& ns_values, double omega)
{
    NsSweepResult out;
    out.omega = omega;
    out.rows.reserve(ns_values.size());
    for (double ns : ns_values) {
        NsSweepRow row;
        row.ns = ns;
        row.ln_tmsv = gaussian::ln_tmsv_closed_form(ns);
        row.ln_ctmg = gaussian::log_negativity(gaussian::ctmg_covariance(d, ns, omega)).ln_value;
        row.ratio = row.ln_tmsv > 0.0 ? row.ln_ctmg / row.ln_tmsv : 0.0;
        out.rows.push_back(row);
    }
    return out;
}

// Surviving ratio LN_ctmg/LN_tmsv at omega = 0, maximized over n_s by golden
// section in log space after a coarse bracketing scan. A maximum on the
// bracket edge is reported with converged = false instead of being refined.
inline OptimumReport maximize_surviving_ratio(const params::DerivedParams& d, double lo, double hi)
{
    if (!(lo > 0.0) || !(hi > lo))
        throw validation_error("maximize_surviving_ratio: need 0 < min < max");
    const auto ratio_at_log = [&](double lx) {
        const double ns = std::exp(lx);
        return gaussian::log_negativity(gaussian::ctmg_covariance(d, ns, 0.0)).ln_value
             / gaussian::ln_tmsv_closed_form(ns);
    };
    constexpr int coarse = 61;
    const auto grid = log_grid(lo, hi, coarse);
    int best = 0;
    double fbest = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < coarse; ++i) {
        const double fi = ratio_at_log(std::log(grid[static_cast<std::size_t>(i)]));
        if (fi > fbest) {
            fbest = fi;
            best = i;
        }
    }
    OptimumReport r;
    if (best == 0 || best == coarse - 1) {
        const double ns = grid[static_cast<std::size_t>(best)];
        r.argmax = {ns};
        r.objective = fbest;
        r.auxiliary = gaussian::log_negativity(gaussian::ctmg_covariance(d, ns, 0.0)).ln_value;
        r.iterations = coarse;
        r.tolerance = 0.0;
        r.converged = false;
        return r;
    }
    const auto g = golden_section_maximize(ratio_at_log,
                                           std::log(grid[static_cast<std::size_t>(best - 1)]),
                                           std::log(grid[static_cast<std::size_t>(best + 1)]),
                                           1e-9, 200);
    const double ns = std::exp(g.x);
    r.argmax = {ns};
    r.objective = g.value;
    r.auxiliary = gaussian::log_negativity(gaussian::ctmg_covariance(d, ns, 0.0)).ln_value;
    r.iterations = g.iterations;
    r.tolerance = g.width;
    r.converged = true;
    return r;
}

inline LossSweepResult sweep_loss_rates(const params::SystemParams& base,
                                        const std::vector<double>& gamma_o_values,
                                        const std::vector<double>& gamma_e_values,
                                        LossObjective objective, double n_s, double omega)
{
    params::validate(base);
    LossSweepResult out;
    out.objective = objective;
    out.n_s = n_s;
    out.omega = omega;
    out.rows.reserve(gamma_o_values.size() * gamma_e_values.size());
    for (double go : gamma_o_values)
        for (double ge : gamma_e_values) {
            params::SystemParams p = base;
            p.gamma_o = go;
            p.gamma_e = ge;
            const auto dp = params::derive(p);
            const double value = objective == LossObjective::efficiency
                ? scattering::efficiency_closed_form(dp)
                : gaussian::log_negativity(gaussian::ctmg_covariance(dp, n_s, omega)).ln_value;
            out.rows.push_back({go, ge, value});
        }
    return out;
}

namespace detail {

// Coarse log-grid scan, then simplex refinement from the best grid point.
// The objective is taken over (log gamma_o, log gamma_e).
template <class F>
OptimumReport maximize_over_loss_rates(F&& objective, double lo, double hi)
{
    if (!(lo > 0.0) || !(hi > lo))
        throw validation_error("loss-rate bounds must satisfy 0 < min < max");
    constexpr int coarse = 25;
    const auto grid = log_grid(lo, hi, coarse);
    double best_go = grid.front(), best_ge = grid.front();
    double fbest = -std::numeric_limits<double>::infinity();
    for (double go : grid)
        for (double ge : grid) {
            const double fi = objective(go, ge);
            if (fi > fbest) {
                fbest = fi;
                best_go = go;
                best_ge = ge;
            }
        }
    const auto wrapped = [&](std::array<double, 2> lx) {
        return objective(std::exp(lx[0]), std::exp(lx[1]));
    };
    const double step = (std::log(hi) - std::log(lo)) / (coarse - 1);
    const auto nm = nelder_mead_maximize(wrapped, {std::log(best_go), std::log(best_ge)}, step, 1e-13, 600);
    OptimumReport r;
    r.argmax = {std::exp(nm.x[0]), std::exp(nm.x[1])};
    r.objective = nm.value;
    r.iterations = nm.iterations;
    r.tolerance = nm.spread;
    r.converged = nm.converged;
    return r;
}

} // namespace detail

// Argmax of LN(ctmg) over the input loss rates at omega = 0; the auxiliary
// field carries the conversion efficiency at the optimum.
inline OptimumReport maximize_ln_over_loss_rates(const params::SystemParams& base, double n_s,
                                                 double lo = 1e4, double hi = 1e9)
{
    params::validate(base);
    const auto objective = [&](double go, double ge) {
        params::SystemParams p = base;
        p.gamma_o = go;
        p.gamma_e = ge;
        const auto dp = params::derive(p);
        return gaussian::log_negativity(gaussian::ctmg_covariance(dp, n_s, 0.0)).ln_value;
    };
    OptimumReport r = detail::maximize_over_loss_rates(objective, lo, hi);
    params::SystemParams at = base;
    at.gamma_o = r.argmax[0];
    at.gamma_e = r.argmax[1];
    r.auxiliary = scattering::efficiency_closed_form(params::derive(at));
    return r;
}

// Argmax of R(0) over the input loss rates; cross-checks the closed form.
inline OptimumReport maximize_efficiency_numeric(const params::SystemParams& base,
                                                 double lo = 1e4, double hi = 1e9)
{
    params::validate(base);
    const auto objective = [&](double go, double ge) {
        params::SystemParams p = base;
        p.gamma_o = go;
        p.gamma_e = ge;
        return scattering::efficiency_closed_form(params::derive(p));
    };
    OptimumReport r = detail::maximize_over_loss_rates(objective, lo, hi);
    r.auxiliary = r.objective;
    return r;
}

} // namespace eomt::analysis
