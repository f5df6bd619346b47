#include "fibercav/atom_field.hpp"

#include <cmath>

#include "fibercav/constants.hpp"

namespace fibercav {

AtomSpec AtomSpec::make(double wavelength, double linewidth_mhz,
                        double c3g_khz_um3, double c3e_khz_um3) {
    AtomSpec atom;
    atom.bare_frequency = 2.0 * kPi * kSpeedOfLight / wavelength;
    atom.natural_linewidth = 2.0 * kPi * linewidth_mhz * 1e6;
    const double w0 = atom.bare_frequency;
    atom.dipole_magnitude =
        std::sqrt(3.0 * kPi * kVacuumPermittivity * kHbar *
                  kSpeedOfLight * kSpeedOfLight * kSpeedOfLight *
                  atom.natural_linewidth / (w0 * w0 * w0));
    atom.c3_ground = 2.0 * kPi * c3g_khz_um3 * 1e3 * 1e-18;
    atom.c3_excited = 2.0 * kPi * c3e_khz_um3 * 1e3 * 1e-18;
    return atom;
}

AtomSpec AtomSpec::cesium_d2() {
    return make(852e-9, 5.25, 1.56, 3.09);
}

double coupling_strength(const GuidedModeSolution& mode, const CavitySpec& cavity,
                         const AtomSpec& atom, const AtomPosition& pos) {
    const double e_minus1 = mode.profile(pos.r).e_minus1;
    const double d2 = atom.dipole_magnitude * atom.dipole_magnitude;
    const double amp = std::sqrt(cavity.resonance_frequency * d2 /
                                 (kVacuumPermittivity * kHbar * cavity.length));
    const double phase = mode.propagation_constant() * pos.z +
                         0.5 * kPi * cavity.resonance_order;
    return amp * e_minus1 * std::cos(phase);
}

double vdw_shift(const AtomSpec& atom, const FiberSpec& fiber, const AtomPosition& pos) {
    const double gap = pos.r - fiber.core_radius;
    if (gap < kSurfaceCutoff)
        throw SurfaceCutoff("atom closer than 5 nm to the fiber surface");
    return -(atom.c3_excited - atom.c3_ground) / (gap * gap * gap);
}

double detuning_atom(const DriveSpec& drive, const AtomSpec& atom,
                     const FiberSpec& fiber, const AtomPosition& pos) {
    return (drive.probe_frequency - atom.bare_frequency) - vdw_shift(atom, fiber, pos);
}

double total_decay_rate(const GuidedModeSolution& mode, const AtomSpec& atom, double r) {
    return guided_decay_rate(mode, atom, r) + atom.natural_linewidth;
}

}  // namespace fibercav
