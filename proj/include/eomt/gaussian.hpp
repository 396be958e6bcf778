#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <utility>

#include "eomt/errors.hpp"
#include "eomt/linalg.hpp"
#include "eomt/params.hpp"
#include "eomt/scattering.hpp"

namespace eomt::gaussian {

// Quadrature covariance over (x_S, p_S, x_I, p_I); vacuum variance 1/2.
struct CovarianceMatrix {
    std::array<std::array<double, 4>, 4> v{};

    double& operator()(int r, int c) { return v[r][c]; }
    double operator()(int r, int c) const { return v[r][c]; }
};

struct EntanglementReport {
    double xi_minus = 0;
    double xi_plus = 0;
    double ln_value = 0;
};

inline CovarianceMatrix tmsv_covariance(double n_s)
{
    if (n_s < 0.0)
        throw validation_error("tmsv_covariance: n_s must be >= 0");
    const double a = n_s + 0.5;
    const double m = std::sqrt(n_s * (n_s + 1.0));
    CovarianceMatrix cm;
    cm(0, 0) = cm(1, 1) = cm(2, 2) = cm(3, 3) = a;
    cm(0, 2) = cm(2, 0) = m;
    cm(1, 3) = cm(3, 1) = -m;
    return cm;
}

// State after sending the signal half of a TMSV through the converter. The
// idler keeps its variance; the signal block picks up the output occupancy
// and the cross block is rotated by the phase of c1.
inline CovarianceMatrix ctmg_covariance(const params::DerivedParams& d, double n_s, double omega)
{
    if (n_s < 0.0)
        throw validation_error("ctmg_covariance: n_s must be >= 0");
    const auto s = scattering::coefficients(d, omega);
    const double a = scattering::output_occupancy(d, n_s, omega) + 0.5;
    const double b = n_s + 0.5;
    const std::complex<double> m = s.c1 * std::sqrt(n_s * (n_s + 1.0));
    CovarianceMatrix cm;
    cm(0, 0) = cm(1, 1) = a;
    cm(2, 2) = cm(3, 3) = b;
    cm(0, 2) = cm(2, 0) = m.real();
    cm(0, 3) = cm(3, 0) = m.imag();
    cm(1, 2) = cm(2, 1) = m.imag();
    cm(1, 3) = cm(3, 1) = -m.real();
    return cm;
}

namespace detail {

inline long double block_det(const CovarianceMatrix& cm, int r, int c)
{
    const long double a = cm(r, c), b = cm(r, c + 1);
    const long double d = cm(r + 1, c), e = cm(r + 1, c + 1);
    return a * e - b * d;
}

// Biquadratic xi^4 - delta xi^2 + DetV = 0 via the stable quadratic branch:
// the larger root from b + sqrt(disc), the smaller from the product. The
// partial transpose only flips the sign on Det C.
inline std::pair<double, double> symplectic_pair(const CovarianceMatrix& cm, long double det_c_sign)
{
    const long double det_a = block_det(cm, 0, 0);
    const long double det_b = block_det(cm, 2, 2);
    const long double det_c = block_det(cm, 0, 2);
    std::array<std::array<long double, 4>, 4> m{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            m[r][c] = cm(r, c);
    const long double det_v = eomt::detail::det4(m);
    const long double delta = det_a + det_b + det_c_sign * 2.0L * det_c;
    long double disc = delta * delta - 4.0L * det_v;
    if (disc < 0.0L) {
        if (disc < -1e-12L * std::max(1.0L, delta * delta))
            throw numerical_error("symplectic eigenvalues: negative discriminant, covariance matrix is not physical");
        disc = 0.0L;
    }
    long double hi2 = (delta + std::sqrt(disc)) / 2.0L;
    if (hi2 < 0.0L)
        hi2 = 0.0L;
    long double lo2 = hi2 > 0.0L ? det_v / hi2 : 0.0L;
    if (lo2 < 0.0L)
        lo2 = 0.0L;
    return {static_cast<double>(std::sqrt(lo2)), static_cast<double>(std::sqrt(hi2))};
}

} // namespace detail

// Eigenvalues of the state itself; both 1/2 for a pure state.
inline std::pair<double, double> symplectic_eigenvalues(const CovarianceMatrix& cm)
{
    return detail::symplectic_pair(cm, +1.0L);
}

// Eigenvalues after partial transposition of the idler; xi_minus < 1/2
// signals entanglement.
inline std::pair<double, double> pt_symplectic_eigenvalues(const CovarianceMatrix& cm)
{
    return detail::symplectic_pair(cm, -1.0L);
}

inline EntanglementReport log_negativity(const CovarianceMatrix& cm)
{
    const auto [lo, hi] = pt_symplectic_eigenvalues(cm);
    EntanglementReport r;
    r.xi_minus = lo;
    r.xi_plus = hi;
    r.ln_value = std::max(0.0, -std::log(2.0 * lo));
    return r;
}

// -ln(2n+1-2*sqrt(n(n+1))), kept in the subtractive form so it tracks the CM
// pipeline's rounding of m = sqrt(n(n+1)); the conjugate form takes over only
// once the subtraction underflows to zero.
inline double ln_tmsv_closed_form(double n_s)
{
    if (n_s < 0.0)
        throw validation_error("ln_tmsv_closed_form: n_s must be >= 0");
    const double root = 2.0 * std::sqrt(n_s * (n_s + 1.0));
    const double t = 2.0 * n_s + 1.0 - root;
    if (t <= 0.0)
        return std::log(2.0 * n_s + 1.0 + root);
    return -std::log(t);
}

// (d1, d2, d3) of the zero-frequency eigenvalue expression; d1 - 1 is twice
// the output occupancy, d3 couples through sqrt(R(0)).
inline std::array<double, 3> analytic_eigen_coefficients(const params::DerivedParams& d, double n_s)
{
    if (n_s < 0.0)
        throw validation_error("analytic_eigen_coefficients: n_s must be >= 0");
    const double r0 = scattering::efficiency_closed_form(d);
    const double bracket = d.G_o * d.G_o * d.n_th_o
                         - (d.G_o * d.G_o + d.Gamma_o * d.gamma_m) * d.n_th_e
                         + d.Gamma_o * d.gamma_m * d.n_th_m;
    const double noise = 8.0 * d.G_e * d.G_e * d.Gamma_o * d.gamma_e / (d.Z * d.Z) * bracket;
    return {2.0 * r0 * n_s + 1.0 + 2.0 * d.n_th_e + noise,
            2.0 * n_s + 1.0,
            2.0 * std::sqrt(r0 * n_s * (n_s + 1.0))};
}

// Valid at omega = 0 only.
inline double xi_minus_analytic(const params::DerivedParams& d, double n_s)
{
    const auto [d1, d2, d3] = analytic_eigen_coefficients(d, n_s);
    const double gap = d1 - d2;
    return (d1 + d2 - std::sqrt(gap * gap + 4.0 * d3 * d3)) / 4.0;
}

} // namespace eomt::gaussian
