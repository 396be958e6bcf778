#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "eomt/errors.hpp"
#include "eomt/gaussian.hpp"
#include "eomt/params.hpp"
#include "eomt/scattering.hpp"

namespace eomt::capacity {

struct CapacityCoefficients {
    double k1 = 0, k2 = 0, k3 = 0, k4 = 0, k5 = 0;
    double p = 0;           // large-n_s bound on the converted-state log negativity
    double p_noiseless = 0; // the same bound at T = 0
};

struct AppendixDiagnostic {
    double printed_k1 = 0, printed_k2 = 0, printed_k3 = 0, printed_k4 = 0, printed_k5 = 0;
    double rel_dev_k1 = 0, rel_dev_k2 = 0, rel_dev_k3 = 0, rel_dev_k4 = 0, rel_dev_k5 = 0;
};

// T -> 0 limit in closed form; diverges at perfect conversion.
inline double capacity_noiseless(const params::DerivedParams& d)
{
    const double r0 = scattering::efficiency_closed_form(d);
    const double arg = 1.0 - 2.0 * r0 / (1.0 + r0);
    if (arg <= 0.0)
        return std::numeric_limits<double>::infinity();
    return std::max(0.0, -std::log(arg));
}

// A(N) = (d1+d2)/2 is affine in N and B(N) = ((d1-d2)^2+4 d3^2)/4 quadratic,
// so sampling at N = 0, 1, 2 recovers the expansion coefficients exactly.
inline CapacityCoefficients extract_k_coefficients(const params::DerivedParams& d)
{
    const auto affine = [&](double n) {
        const auto c = gaussian::analytic_eigen_coefficients(d, n);
        return (c[0] + c[1]) / 2.0;
    };
    const auto quadratic = [&](double n) {
        const auto c = gaussian::analytic_eigen_coefficients(d, n);
        const double gap = c[0] - c[1];
        return (gap * gap + 4.0 * c[2] * c[2]) / 4.0;
    };
    CapacityCoefficients k;
    k.k1 = affine(0.0);
    k.k2 = affine(1.0) - k.k1;
    k.k3 = quadratic(0.0);
    const double b1 = quadratic(1.0);
    const double b2 = quadratic(2.0);
    k.k5 = (b2 - 2.0 * b1 + k.k3) / 2.0;
    k.k4 = b1 - k.k3 - k.k5;
    const double arg = k.k1 - k.k4 / (2.0 * k.k2);
    if (arg <= 0.0)
        throw numerical_error("capacity: expansion argument <= 0, the large-n_s bound is undefined here");
    k.p = std::max(0.0, -std::log(arg));
    k.p_noiseless = capacity_noiseless(d);
    return k;
}

inline double capacity(const params::DerivedParams& d)
{
    return extract_k_coefficients(d).p;
}

// The published closed forms kept as a numeric diagnostic. printed_k1 and
// printed_k3 take the squared-coupling reading of their shared noise term;
// printed_k4 is evaluated as written and is expected to disagree with the
// extraction, so only its deviation is reported.
inline AppendixDiagnostic check_printed_appendix(const params::DerivedParams& d)
{
    const CapacityCoefficients k = extract_k_coefficients(d);
    const double Ne = d.n_th_e, No = d.n_th_o, Nm = d.n_th_m;
    const double Ge = d.G_e, Go = d.G_o;
    const double go = d.gamma_o, ge = d.gamma_e;
    const double gop = d.gamma_o_int, gep = d.gamma_e_int;
    const double gm = d.gamma_m;
    const double Ko = d.Gamma_o, Ke = d.Gamma_e;
    const double z2 = d.Z * d.Z;
    const double z4 = z2 * z2;

    const double Ge2 = Ge * Ge, Ge4 = Ge2 * Ge2, Ge6 = Ge4 * Ge2, Ge8 = Ge4 * Ge4;
    const double Go2 = Go * Go, Go4 = Go2 * Go2, Go6 = Go4 * Go2, Go8 = Go4 * Go4;
    const double Ko2 = Ko * Ko, Ko3 = Ko2 * Ko, Ko4 = Ko2 * Ko2;
    const double Ke2 = Ke * Ke, Ke4 = Ke2 * Ke2;
    const double gm2 = gm * gm, gm3 = gm2 * gm, gm4 = gm2 * gm2;

    AppendixDiagnostic a;
    const double r = 4.0 * Go2 * Ge2 * go * ge / z2;
    const double noise = 4.0 * Ge2 * Ko * ge / z2
        * (Go2 * No - (Go2 + Ko * gm) * Ne + Ko * gm * Nm);
    a.printed_k1 = 1.0 + Ne + noise;
    a.printed_k2 = 1.0 + r;
    a.printed_k3 = (Ne + noise) * (Ne + noise);
    a.printed_k5 = 1.0 + 2.0 * r + r * r;

    const double shared = (-No * Ko + Ne * go + 2.0 * go) * ge - Ne * Ko * gep;
    const double l1 = -Ne * Ge8 * Ko4
        - 4.0 * Ge6 * (Ne * gep + Nm * ge) * Ko4 * gm
        + 2.0 * Ge4 * (Ne * (ge - gep) - 4.0 * Nm * ge) * Ko4 * Ke
        - 4.0 * Ge2 * (Ne * gep + Nm * ge) * Ko4 * Ke2 * gm3
        - Ne * Ko4 * Ke4 * gm4;
    const double l2 = 4.0 * Ge6 * shared * Ko2
        - 8.0 * Ge2 * (Ne * gep + Nm * ge) * Ko3 * Ke2 * gm2
        + 4.0 * Ge * shared * Ko2 * Ke2 * gm2
        - 4.0 * Ne * Ko3 * Ke4 * gm3
        + 4.0 * Ge4 * (((2.0 * No - Ne - 2.0 * Nm + 1.0) * ge * ge
                        - (No + Nm - 2.0) * ge * gep - 3.0 * Ne * gep * gep) * go
                       + ((-2.0 * No + Ne - 2.0 * Nm) * ge - 3.0 * Ne * gep) * gop * Ke);
    const double l3 = -4.0 * Ge2 * (Ne * gep + Nm * ge) * Ko2 * Ke2 * gm
        + 8.0 * Ge2 * shared * Ko * Ke2 * gm
        + 2.0 * Ge4 * (((4.0 * No - 3.0 * Ne + 8.0) * ge * ge
                        + 2.0 * (4.0 - 2.0 * No + Ne) * ge * gep - 3.0 * Ne * gep * gep) * go
                       + ((-No + 4.0 * Ne) * ge - 3.0 * Ne * gep) * gop * Ke);
    const double l4 = 4.0 * Ge2 * (((2.0 + Ne) * go - No * Ko) * ge - Ne * Ko * gep) * Ke2
        - 4.0 * Ne * Ko * Ke4 * gm;
    const double l5 = -Ne * Ke4;
    a.printed_k4 = 2.0 / z4 * (l1 * Go8 + l2 * Go6 + l3 * Go4 + l4 * Go2 + l5);

    const auto rel = [](double printed, double exact) {
        const double scale = std::max(std::abs(exact), 1e-300);
        return std::abs(printed - exact) / scale;
    };
    a.rel_dev_k1 = rel(a.printed_k1, k.k1);
    a.rel_dev_k2 = rel(a.printed_k2, k.k2);
    a.rel_dev_k3 = rel(a.printed_k3, k.k3);
    a.rel_dev_k4 = rel(a.printed_k4, k.k4);
    a.rel_dev_k5 = rel(a.printed_k5, k.k5);
    return a;
}

} // namespace eomt::capacity
