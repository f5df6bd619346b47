#pragma once

#include "fibercav/cavity.hpp"
#include "fibercav/errors.hpp"
#include "fibercav/fiber_mode.hpp"

namespace fibercav {

// Two-level atom on a sigma+ cycling transition near the fiber surface.
struct AtomSpec {
    double bare_frequency = 0.0;     // omega_0 (rad/s)
    double natural_linewidth = 0.0;  // gamma_0 (rad/s, angular)
    int dipole_component = +1;       // spherical index q of the only nonzero d_q
    double dipole_magnitude = 0.0;   // d (C m), from the free-space decay relation
    double c3_ground = 0.0;          // C_3g (rad/s m^3)
    double c3_excited = 0.0;         // C_3e (rad/s m^3)

    // linewidth_mhz and the C3 coefficients are ordinary frequencies
    // (gamma_0/2pi in MHz, C3/2pi in kHz um^3) as usually quoted.
    static AtomSpec make(double wavelength, double linewidth_mhz,
                         double c3g_khz_um3, double c3e_khz_um3);

    // Cesium D2 cycling transition: 852 nm, 5.25 MHz linewidth,
    // C3g = 1.56 kHz um^3, C3e = 3.09 kHz um^3.
    static AtomSpec cesium_d2();
};

struct AtomPosition {
    double r = 0.0;    // radial (m), r > core radius
    double phi = 0.0;  // azimuthal (rad); magnitudes do not depend on it
    double z = 0.0;    // axial (m)
};

// Van der Waals sweeps start no closer to the surface than this.
inline constexpr double kSurfaceCutoff = 5e-9;  // m

// Position-dependent atom-cavity coupling
//     G = sqrt(omega_c d^2 / (eps0 hbar L)) |e_-1(r)| cos(beta_c z + m pi/2),
// signed by the standing-wave cosine.
double coupling_strength(const GuidedModeSolution& mode, const CavitySpec& cavity,
                         const AtomSpec& atom, const AtomPosition& pos);

// Surface shift of the transition frequency, -(C3e - C3g)/(r-a)^3 < 0.
// Throws SurfaceCutoff for r - a < kSurfaceCutoff.
double vdw_shift(const AtomSpec& atom, const FiberSpec& fiber, const AtomPosition& pos);

// Delta_a = omega_p - omega_a(r) = (omega_p - omega_0) - vdw_shift
double detuning_atom(const DriveSpec& drive, const AtomSpec& atom,
                     const FiberSpec& fiber, const AtomPosition& pos);

// gamma = gamma_gyd(r) + gamma_rad with the radiation rate approximated by
// the free-space value gamma_0.
double total_decay_rate(const GuidedModeSolution& mode, const AtomSpec& atom, double r);

inline double guided_decay_rate(const GuidedModeSolution& mode, const AtomSpec& atom,
                                double r) {
    return guided_decay_rate(mode, atom.dipole_magnitude, r);
}

}  // namespace fibercav
