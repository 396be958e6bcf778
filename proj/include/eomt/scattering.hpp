#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include "eomt/errors.hpp"
#include "eomt/linalg.hpp"
#include "eomt/params.hpp"

namespace eomt::scattering {

// Output-mode decomposition at sideband frequency omega. c1..c5 multiply the
// optical input, microwave input, optical loss, microwave loss and mechanical
// loss modes; |c1|^2 + ... + |c5|^2 = 1 for any valid parameter set.
struct ScatteringSolution {
    double omega = 0; // Hz
    std::complex<double> c1, c2, c3, c4, c5;
    double efficiency = 0; // |c1|^2
};

// Closed forms. D(0) M(0) collapses to Z exactly, so the zero-frequency
// coefficients are real up to the c5 quadrature.
inline ScatteringSolution coefficients(const params::DerivedParams& d, double omega)
{
    const std::complex<double> iw(0.0, omega);
    const std::complex<double> m = d.G_o * d.G_o + (iw + d.gamma_m) * (iw + d.Gamma_o);
    const std::complex<double> den = iw + d.Gamma_e + d.G_e * d.G_e * (iw + d.Gamma_o) / m;
    const std::complex<double> dm = den * m;
    ScatteringSolution s;
    s.omega = omega;
    s.c1 = -2.0 * d.G_o * d.G_e * std::sqrt(d.gamma_o * d.gamma_e) / dm;
    s.c2 = 2.0 * d.gamma_e / den - 1.0;
    s.c3 = -2.0 * d.G_o * d.G_e * std::sqrt(d.gamma_o_int * d.gamma_e) / dm;
    s.c4 = 2.0 * std::sqrt(d.gamma_e * d.gamma_e_int) / den;
    s.c5 = std::complex<double>(0.0, -2.0) * d.G_e * std::sqrt(d.gamma_e * d.gamma_m) * (iw + d.Gamma_o) / dm;
    s.efficiency = std::norm(s.c1);
    return s;
}

// Ground truth for the closed forms: per input mode, solve the frequency
// domain three-mode system with a unit field on that mode and read off
// beta_out = sqrt(2 gamma_e) beta - beta_in. No coefficient expressions.
inline ScatteringSolution solve_qle_oracle(const params::DerivedParams& d, double omega)
{
    using detail::cld;
    const cld iw(0.0L, static_cast<long double>(omega));
    const cld i(0.0L, 1.0L);
    const auto L = [](double v) { return static_cast<long double>(v); };
    const detail::mat3 a{{{iw + L(d.Gamma_o), cld(0), i * L(d.G_o)},
                          {cld(0), iw + L(d.Gamma_e), i * L(d.G_e)},
                          {i * L(d.G_o), i * L(d.G_e), iw + L(d.gamma_m)}}};
    const int drive_row[5] = {0, 1, 0, 1, 2};
    const long double drive_amp[5] = {
        std::sqrt(2.0L * L(d.gamma_o)), std::sqrt(2.0L * L(d.gamma_e)),
        std::sqrt(2.0L * L(d.gamma_o_int)), std::sqrt(2.0L * L(d.gamma_e_int)),
        std::sqrt(2.0L * L(d.gamma_m))};
    const long double out_amp = std::sqrt(2.0L * L(d.gamma_e));
    std::complex<double> c[5];
    for (int k = 0; k < 5; ++k) {
        detail::vec3 b{};
        b[drive_row[k]] = drive_amp[k];
        const auto x = detail::solve3(a, b);
        cld ck = out_amp * x[1];
        if (k == 1)
            ck -= 1.0L;
        c[k] = {static_cast<double>(ck.real()), static_cast<double>(ck.imag())};
    }
    ScatteringSolution s;
    s.omega = omega;
    s.c1 = c[0];
    s.c2 = c[1];
    s.c3 = c[2];
    s.c4 = c[3];
    s.c5 = c[4];
    s.efficiency = std::norm(s.c1);
    return s;
}

// R(0) = 4 G_o^2 G_e^2 gamma_o gamma_e / Z^2
inline double efficiency_closed_form(const params::DerivedParams& d)
{
    const double t = 2.0 * d.G_o * d.G_e / d.Z;
    return t * t * d.gamma_o * d.gamma_e;
}

// Input loss rates maximizing R(0) with couplings, intrinsic losses and
// gamma_m held fixed; the profile's gamma_o, gamma_e are ignored. Honors the
// gamma_m convention flag.
inline std::pair<double, double> optimal_input_loss_rates(const params::SystemParams& p)
{
    params::validate(p);
    const double gm = p.conventions.gamma_m_extra_division ? p.gamma_m / params::two_pi : p.gamma_m;
    const double go2 = p.g_o * p.g_o * p.n_pump_o;
    const double ge2 = p.g_e * p.g_e * p.n_pump_e;
    const double a = go2 + p.gamma_o_int * gm;
    const double b = ge2 + p.gamma_e_int * gm;
    const double num = ge2 * p.gamma_o_int + a * p.gamma_e_int;
    return {std::sqrt(a * num / (b * gm)), std::sqrt(b * num / (a * gm))};
}

// Mean photon number of the converted output for a signal of mean photon
// number n_s plus thermal noise entering every port.
inline double output_occupancy(const params::DerivedParams& d, double n_s, double omega)
{
    if (n_s < 0.0)
        throw validation_error("output_occupancy: n_s must be >= 0");
    const ScatteringSolution s = coefficients(d, omega);
    return std::norm(s.c1) * (n_s + d.n_th_o) + std::norm(s.c2) * d.n_th_e
         + std::norm(s.c3) * d.n_th_o + std::norm(s.c4) * d.n_th_e
         + std::norm(s.c5) * d.n_th_m;
}

// Converted-to-input photon number ratio; collapses to |c1|^2 at T = 0.
inline double amplitude_ratio(const params::DerivedParams& d, double n_s, double omega)
{
    if (!(n_s > 0.0))
        throw validation_error("amplitude_ratio: n_s must be > 0");
    return output_occupancy(d, n_s, omega) / n_s;
}

} // namespace eomt::scattering
