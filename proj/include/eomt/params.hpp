#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "eomt/errors.hpp"

namespace eomt::params {

// CODATA 2018 exact values
inline constexpr double hbar = 1.054571817e-34;     // J s
inline constexpr double k_boltzmann = 1.380649e-23; // J / K
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr double planck_h = two_pi * hbar;   // J s

// Interpretation toggles for reproducing published figures. Both false is the
// physically standard reading. occupancy_extra_two_pi multiplies the thermal
// exponent by an extra 2*pi; gamma_m_extra_division divides gamma_m by 2*pi
// once, before any downstream use.
struct ConventionFlags {
    bool occupancy_extra_two_pi = false;
    bool gamma_m_extra_division = false;

    friend bool operator==(const ConventionFlags&, const ConventionFlags&) = default;
};

// Raw device inputs. Every rate and frequency is an ordinary frequency in Hz,
// so tabulated omega/2pi values go in verbatim. The member initializers form
// the built-in device profile.
struct SystemParams {
    double g_o = 6.6;           // vacuum optomechanical coupling, Hz
    double g_e = 3.8;           // vacuum electromechanical coupling, Hz
    double gamma_o = 1.1e6;     // optical input (external) loss rate, Hz
    double gamma_e = 2.3e6;     // microwave input (external) loss rate, Hz
    double gamma_o_int = 1.0e6; // optical intrinsic loss rate, Hz
    double gamma_e_int = 0.2e6; // microwave intrinsic loss rate, Hz
    double gamma_m = 11.0;      // mechanical damping rate, Hz
    double omega_o = 282e12;    // optical resonance, Hz
    double omega_e = 6e9;       // microwave resonance, Hz
    double omega_m = 1.4732e6;  // mechanical resonance, Hz
    double temperature = 0.035; // bath temperature, K
    double n_pump_o = 1.7e8;    // intracavity pump photon number, optical
    double n_pump_e = 1.7e8;    // intracavity pump photon number, microwave
    ConventionFlags conventions{};

    friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

inline void validate(const SystemParams& p)
{
    const auto positive = [](double v, const char* name) {
        if (!(v > 0.0))
            throw validation_error(std::string(name) + " must be > 0");
    };
    positive(p.g_o, "g_o");
    positive(p.g_e, "g_e");
    positive(p.gamma_o, "gamma_o");
    positive(p.gamma_e, "gamma_e");
    positive(p.gamma_o_int, "gamma_o_int");
    positive(p.gamma_e_int, "gamma_e_int");
    positive(p.gamma_m, "gamma_m");
    positive(p.omega_o, "omega_o");
    positive(p.omega_e, "omega_e");
    positive(p.omega_m, "omega_m");
    positive(p.n_pump_o, "n_pump_o");
    positive(p.n_pump_e, "n_pump_e");
    if (!(p.temperature >= 0.0))
        throw validation_error("temperature must be >= 0");
}

// Non-fatal plausibility notes; the linearized model assumes a strong pump.
inline std::vector<std::string> warnings(const SystemParams& p)
{
    std::vector<std::string> notes;
    if (p.n_pump_o < 1e3)
        notes.push_back("n_pump_o = " + std::to_string(p.n_pump_o) +
                        " is below 1e3; the linearized treatment assumes a strong pump");
    if (p.n_pump_e < 1e3)
        notes.push_back("n_pump_e = " + std::to_string(p.n_pump_e) +
                        " is below 1e3; the linearized treatment assumes a strong pump");
    return notes;
}

// Bose-Einstein occupancy with the frequency given as an ordinary frequency.
// T = 0 is an exact zero, not a limit of the exponential.
inline double thermal_occupancy(double f_hz, double temperature_k, bool extra_two_pi = false)
{
    if (!(f_hz > 0.0))
        throw validation_error("thermal_occupancy: frequency must be > 0");
    if (temperature_k < 0.0)
        throw validation_error("thermal_occupancy: temperature must be >= 0");
    if (temperature_k == 0.0)
        return 0.0;
    double x = hbar * two_pi * f_hz / (k_boltzmann * temperature_k);
    if (extra_two_pi)
        x *= two_pi;
    return 1.0 / std::expm1(x);
}

// Everything the downstream formulas consume. The loss rates are carried
// along so one value feeds the whole pipeline; gamma_m already has the
// convention flag applied.
struct DerivedParams {
    double G_o = 0;     // pump-enhanced optomechanical coupling, Hz
    double G_e = 0;     // pump-enhanced electromechanical coupling, Hz
    double Gamma_o = 0; // total optical decay rate, Hz
    double Gamma_e = 0; // total microwave decay rate, Hz
    double gamma_o = 0;
    double gamma_e = 0;
    double gamma_o_int = 0;
    double gamma_e_int = 0;
    double gamma_m = 0;
    double n_th_o = 0; // thermal occupancy at omega_o
    double n_th_e = 0; // thermal occupancy at omega_e
    double n_th_m = 0; // thermal occupancy at omega_m
    double Z = 0;      // G_o^2 Gamma_e + G_e^2 Gamma_o + Gamma_o Gamma_e gamma_m, Hz^3

    friend bool operator==(const DerivedParams&, const DerivedParams&) = default;
};

inline DerivedParams derive(const SystemParams& p)
{
    validate(p);
    DerivedParams d;
    d.G_o = p.g_o * std::sqrt(p.n_pump_o);
    d.G_e = p.g_e * std::sqrt(p.n_pump_e);
    d.Gamma_o = p.gamma_o + p.gamma_o_int;
    d.Gamma_e = p.gamma_e + p.gamma_e_int;
    d.gamma_o = p.gamma_o;
    d.gamma_e = p.gamma_e;
    d.gamma_o_int = p.gamma_o_int;
    d.gamma_e_int = p.gamma_e_int;
    d.gamma_m = p.conventions.gamma_m_extra_division ? p.gamma_m / two_pi : p.gamma_m;
    const bool extra = p.conventions.occupancy_extra_two_pi;
    d.n_th_o = thermal_occupancy(p.omega_o, p.temperature, extra);
    d.n_th_e = thermal_occupancy(p.omega_e, p.temperature, extra);
    d.n_th_m = thermal_occupancy(p.omega_m, p.temperature, extra);
    d.Z = d.G_o * d.G_o * d.Gamma_e + d.G_e * d.G_e * d.Gamma_o + d.Gamma_o * d.Gamma_e * d.gamma_m;
    return d;
}

// Mean intracavity photon number induced by a drive of field strength E at
// detuning Delta from a cavity of total linewidth Gamma.
inline double pump_photon_number(double field_strength_hz, double gamma_hz, double delta_hz)
{
    if (!(gamma_hz > 0.0))
        throw validation_error("pump_photon_number: Gamma must be > 0");
    return field_strength_hz * field_strength_hz / (gamma_hz * gamma_hz + delta_hz * delta_hz);
}

// Cavity detuning shifted by the static radiation-pressure displacement the
// two pumps impose on the mechanical resonator.
inline double effective_detuning(double delta_drive_hz, double g_j_hz, const SystemParams& p)
{
    validate(p);
    return delta_drive_hz - g_j_hz * (p.g_o * p.n_pump_o + p.g_e * p.n_pump_e) / p.omega_m;
}

// Drive detunings that land each effective detuning on the red sideband,
// i.e. solve Delta_j = omega_m. Returned as (optical, microwave).
inline std::pair<double, double> required_pump_detunings(const SystemParams& p)
{
    validate(p);
    const double shift = (p.g_o * p.n_pump_o + p.g_e * p.n_pump_e) / p.omega_m;
    return {p.omega_m + p.g_o * shift, p.omega_m + p.g_e * shift};
}

} // namespace eomt::params
