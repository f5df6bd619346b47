#pragma once

#include "fibercav/errors.hpp"

namespace fibercav {

// Two identical lossless FBG mirrors a distance L apart, |T|^2 = 1 - |R|^2.
struct CavitySpec {
    double reflectivity = 0.0;        // |R|
    double reflection_phase = 0.0;    // phase of R (rad)
    double length = 0.0;              // L (m)
    int resonance_order = 0;          // m; parity fixes the node/antinode layout
    double resonance_frequency = 0.0; // omega_c (rad/s)

    static CavitySpec make(double reflectivity_sq, double length,
                           double resonance_frequency, int resonance_order = 0);
};

struct DriveSpec {
    double probe_frequency = 0.0;  // omega_p (rad/s)
    double input_power = 0.0;      // P_in (W)
};

struct CavityParams {
    double kappa = 0.0;            // field damping rate (rad/s)
    double eta = 0.0;              // pumping rate (rad/s)
    double finesse = 0.0;
    double detuning_cavity = 0.0;  // Delta_c = omega_p - omega_c (rad/s)
};

struct TransmissionResult {
    double ratio = 0.0;  // P_out / P_in
    // true when |Theta - m pi| >= 0.3 rad, outside the first-order expansion regime
    bool expansion_domain_exceeded = false;
};

// Empty-cavity Fabry-Perot transmission, first order in omega_p - omega_c.
TransmissionResult transmission(const CavitySpec& spec, double group_velocity,
                                double probe_frequency);

// kappa = (1 - |R|^2) v_g / (|R| L)
double damping_rate(const CavitySpec& spec, double group_velocity);

// eta = sqrt(kappa/2 * P_in / (hbar omega_p))
double pumping_rate(const CavitySpec& spec, const DriveSpec& drive, double group_velocity);

double finesse(const CavitySpec& spec);

CavityParams cavity_params(const CavitySpec& spec, const DriveSpec& drive,
                           double group_velocity);

// nbar = eta^2 / (kappa^2/4 + Delta_c^2)
double empty_cavity_photon_number(const CavityParams& params);

// P_out = (1/2) hbar omega_p kappa N_cav
double transmitted_power(double kappa, double probe_frequency, double n_cav);

}  // namespace fibercav
