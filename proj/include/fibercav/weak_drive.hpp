#pragma once

#include <utility>

#include "fibercav/liouvillian.hpp"

namespace fibercav {

// Closed-form steady-state moments of the linearized (at most one excitation)
// system. Fully independent of the exact solver.
struct WeakDriveSolution {
    Complex mean_field{0.0, 0.0};  // <a>
    Complex coherence{0.0, 0.0};   // <sigma>
    double n_cav = 0.0;            // <a^dag a> = |<a>|^2
    double p_e = 0.0;              // <sigma^dag sigma> = |<sigma>|^2
    double cross_sym = 0.0;        // <a^dag sigma + a sigma^dag>, real
    Complex cross_asym{0.0, 0.0};  // <a^dag sigma - a sigma^dag>, imaginary
    Complex denominator{0.0, 0.0}; // D = G^2 + kappa gamma/4 - Dc Da - i(Dc gamma + Da kappa)/2
};

WeakDriveSolution weak_drive_solution(const SystemParams& params);

// Vacuum-Rabi peak positions Delta_vdw/2 -+ sqrt(G^2 + kappa gamma/4 + Delta_vdw^2/4),
// returned ordered (negative-side peak first).
std::pair<double, double> rabi_peak_positions(double G, double kappa, double gamma,
                                              double delta_vdw);

// Residuals of the one-excitation closure on an exact steady state:
// |<a sigma_z> + <a>| and |<a^dag a sigma_z> + <a^dag a>|.
struct LinearizationResiduals {
    double field = 0.0;
    double number = 0.0;
};

LinearizationResiduals linearization_check(const DensityMatrix& rho_ss);

}  // namespace fibercav
