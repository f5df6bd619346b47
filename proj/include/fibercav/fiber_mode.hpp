#pragma once

#include "fibercav/errors.hpp"

namespace fibercav {

// Step-index fiber geometry: silica core, vacuum clad.
struct FiberSpec {
    double core_radius = 0.0;  // a (m)
    double core_index = 0.0;   // n1
    double clad_index = 1.0;   // n2, n1 > n2 >= 1

    double v_parameter(double omega) const;
};

// Magnitudes of the cylindrical mode-profile components at one radius,
// for the reference mode (forward propagation, counterclockwise polarization).
struct ProfileMagnitudes {
    double e_r = 0.0;
    double e_phi = 0.0;
    double e_z = 0.0;
    double e_minus1 = 0.0;  // (|e_r| + |e_phi|)/sqrt(2)
};

// Solved fundamental HE11 mode at a single frequency.
//
// The profile is normalized so that
//     int_0^{2pi} dphi int_0^inf n^2(r) |e(r)|^2 r dr = 1,
// which gives the profile components units of 1/m.
class GuidedModeSolution {
public:
    double angular_frequency() const { return omega_; }
    double propagation_constant() const { return beta_; }

    // d(beta)/d(omega), from a centered finite difference with relative
    // frequency step 1e-6.
    double beta_derivative() const { return beta_prime_; }
    double group_velocity() const { return 1.0 / beta_prime_; }

    // Transverse decay constant of the evanescent tail, q = sqrt(beta^2 - n2^2 k^2).
    double clad_decay_constant() const { return q_; }

    const FiberSpec& fiber() const { return spec_; }

    ProfileMagnitudes profile(double r) const;

private:
    friend GuidedModeSolution solve_dispersion(const FiberSpec&, double);

    FiberSpec spec_;
    double omega_ = 0.0;
    double beta_ = 0.0;
    double beta_prime_ = 0.0;
    double h_ = 0.0;          // transverse wavenumber in the core
    double q_ = 0.0;          // decay constant in the clad
    double s_ = 0.0;          // hybrid-mode mixing parameter
    double clad_match_ = 0.0; // J1(ha)/K1(qa)
    double norm_ = 0.0;       // global normalization constant (1/m)
};

// HE11 eigenvalue equation in its normalized product form; zero at a guided mode.
double dispersion_residual(const FiberSpec& spec, double omega, double beta);

// Solves the HE11 dispersion relation at angular frequency omega.
// Throws MultiMode if V >= 2.405 and NoGuidedMode if no root exists in
// (n2 k, n1 k).
GuidedModeSolution solve_dispersion(const FiberSpec& spec, double omega);

inline ProfileMagnitudes mode_profile(const GuidedModeSolution& sol, double r) {
    return sol.profile(r);
}

// Spontaneous-emission rate into the guided modes (both directions, both
// polarizations) for a circularly polarized dipole of magnitude d at radius r.
// The mode must have been solved at the atomic transition frequency.
double guided_decay_rate(const GuidedModeSolution& sol, double dipole_moment, double r);

}  // namespace fibercav
