#pragma once

#include <complex>
#include <random>

#include "eomt/params.hpp"

// Random but physically ordered parameter draws shared by the property tests.
// Ranges keep omega_o >> omega_e >> omega_m and bound the mechanical
// occupancy near 350 so second-difference extractions stay well conditioned.
namespace testsupport {

inline double log_uniform(std::mt19937& rng, double lo, double hi)
{
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

inline eomt::params::SystemParams draw_params(std::mt19937& rng, bool random_flags = true)
{
    eomt::params::SystemParams p;
    p.g_o = log_uniform(rng, 1.0, 100.0);
    p.g_e = log_uniform(rng, 1.0, 100.0);
    p.n_pump_o = log_uniform(rng, 1e6, 1e9);
    p.n_pump_e = log_uniform(rng, 1e6, 1e9);
    p.gamma_o = log_uniform(rng, 1e5, 1e7);
    p.gamma_e = log_uniform(rng, 1e5, 1e7);
    p.gamma_o_int = log_uniform(rng, 1e4, 1e6);
    p.gamma_e_int = log_uniform(rng, 1e4, 1e6);
    p.gamma_m = log_uniform(rng, 1.0, 1e3);
    p.omega_m = log_uniform(rng, 3e6, 8e6);
    p.omega_e = log_uniform(rng, 2e9, 2e10);
    p.omega_o = log_uniform(rng, 1e14, 5e14);
    p.temperature = log_uniform(rng, 0.02, 0.05);
    if (random_flags) {
        std::bernoulli_distribution half(0.5);
        p.conventions.occupancy_extra_two_pi = half(rng);
        p.conventions.gamma_m_extra_division = half(rng);
    }
    return p;
}

inline double rel_diff(double value, double reference)
{
    const double scale = std::max(std::abs(reference), 1e-300);
    return std::abs(value - reference) / scale;
}

inline double rel_diff(std::complex<double> value, std::complex<double> reference)
{
    const double scale = std::max(std::abs(reference), 1e-300);
    return std::abs(value - reference) / scale;
}

} // namespace testsupport
