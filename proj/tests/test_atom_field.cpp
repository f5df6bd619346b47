#include <doctest.h>

#include <cmath>

#include "fibercav/atom_field.hpp"
#include "fibercav/constants.hpp"
#include "support/helpers.hpp"

using namespace fibercav;
using fibercav::testing::rel_diff;

namespace {

const FiberSpec kFiber{200e-9, 1.45, 1.0};

const GuidedModeSolution& reference_mode() {
    static const GuidedModeSolution sol =
        solve_dispersion(kFiber, AtomSpec::cesium_d2().bare_frequency);
    return sol;
}

}  // namespace

TEST_CASE("cesium preset closes the free-space dipole relation") {
    const AtomSpec atom = AtomSpec::cesium_d2();
    CHECK(rel_diff(atom.bare_frequency, 2.0 * kPi * kSpeedOfLight / 852e-9) < 1e-15);
    CHECK(rel_diff(atom.natural_linewidth, 2.0 * kPi * 5.25e6) < 1e-15);
    CHECK(atom.dipole_component == 1);
    CHECK(atom.c3_excited > atom.c3_ground);
    CHECK(atom.c3_ground > 0.0);

    const double w0 = atom.bare_frequency;
    const double d2 = atom.dipole_magnitude * atom.dipole_magnitude;
    const double gamma_back = w0 * w0 * w0 * d2 /
                              (3.0 * kPi * kVacuumPermittivity * kHbar *
                               kSpeedOfLight * kSpeedOfLight * kSpeedOfLight);
    CHECK(rel_diff(gamma_back, atom.natural_linewidth) < 1e-14);
}

TEST_CASE("van der Waals shift values and scaling") {
    const AtomSpec atom = AtomSpec::cesium_d2();
    const double a = kFiber.core_radius;

    // -(3.09 - 1.56) kHz um^3 / (0.1 um)^3 = -1.53 MHz
    const double at_100nm = vdw_shift(atom, kFiber, {a + 100e-9, 0.0, 0.0});
    CHECK(rel_diff(at_100nm, -2.0 * kPi * 1.53e6) < 1e-12);
    const double at_200nm = vdw_shift(atom, kFiber, {a + 200e-9, 0.0, 0.0});
    CHECK(rel_diff(at_200nm, -2.0 * kPi * 191.25e3) < 1e-12);

    // (r-a)^3 scaling holds exactly and the magnitude decreases
    double prev = std::abs(at_100nm);
    for (int i = 1; i <= 40; ++i) {
        const double gap = 100e-9 + i * 25e-9;
        const double shift = vdw_shift(atom, kFiber, {a + gap, 0.0, 0.0});
        CHECK(shift < 0.0);
        CHECK(rel_diff(shift * gap * gap * gap, -(atom.c3_excited - atom.c3_ground)) <
              1e-12);
        CHECK(std::abs(shift) < prev);
        prev = std::abs(shift);
    }

    CHECK_THROWS_AS(vdw_shift(atom, kFiber, {a + 4e-9, 0.0, 0.0}), SurfaceCutoff);
}

TEST_CASE("atomic detuning against the surface-shifted transition") {
    const AtomSpec atom = AtomSpec::cesium_d2();
    const double a = kFiber.core_radius;
    const DriveSpec resonant{atom.bare_frequency, 1e-12};

    // far from the surface the shift is negligible
    const double far = detuning_atom(resonant, atom, kFiber, {a + 10e-6, 0.0, 0.0});
    CHECK(std::abs(far) < 1e-6 * atom.natural_linewidth);

    const double near = detuning_atom(resonant, atom, kFiber, {a + 100e-9, 0.0, 0.0});
    CHECK(rel_diff(near, 2.0 * kPi * 1.53e6) < 1e-12);

    // Delta = omega_c - omega_a = Delta_a - Delta_c does not depend on the probe
    const AtomPosition pos{a + 150e-9, 0.0, 0.0};
    for (const double delta_c : {-3e7, 0.0, 5e7}) {
        const DriveSpec probe{atom.bare_frequency + delta_c, 1e-12};
        const double delta = detuning_atom(probe, atom, kFiber, pos) - delta_c;
        CHECK(rel_diff(delta, detuning_atom(resonant, atom, kFiber, pos)) < 1e-12);
    }
}

TEST_CASE("coupling standing-wave structure") {
    const auto& mode = reference_mode();
    const AtomSpec atom = AtomSpec::cesium_d2();
    const CavitySpec cav = CavitySpec::make(0.9, 0.1, atom.bare_frequency, 0);
    const double a = kFiber.core_radius;
    const double beta = mode.propagation_constant();
    const double g_antinode = coupling_strength(mode, cav, atom, {a, 0.0, 0.0});

    CHECK(g_antinode > 0.0);
    // node of the standing wave
    const double g_node =
        coupling_strength(mode, cav, atom, {a, 0.0, 0.5 * kPi / beta});
    CHECK(std::abs(g_node) < 1e-10 * g_antinode);
    // full period
    for (const double z : {130e-9, 77e-9, 411e-9}) {
        const double g_z = coupling_strength(mode, cav, atom, {a, 0.0, z});
        const double g_shift =
            coupling_strength(mode, cav, atom, {a, 0.0, z + 2.0 * kPi / beta});
        CHECK(std::abs(g_z - g_shift) < 1e-12 * g_antinode);
    }
}

TEST_CASE("coupling scales as one over root length") {
    const auto& mode = reference_mode();
    const AtomSpec atom = AtomSpec::cesium_d2();
    const AtomPosition pos{kFiber.core_radius + 50e-9, 0.0, 0.0};
    double reference = 0.0;
    for (const double length : {1e-3, 1e-2, 1e-1}) {
        const CavitySpec cav = CavitySpec::make(0.9, length, atom.bare_frequency, 0);
        const double scaled =
            coupling_strength(mode, cav, atom, pos) * std::sqrt(length);
        if (reference == 0.0)
            reference = scaled;
        else
            CHECK(rel_diff(scaled, reference) < 1e-12);
    }
}

TEST_CASE("resonance-order parity shifts nodes to antinodes") {
    const auto& mode = reference_mode();
    const AtomSpec atom = AtomSpec::cesium_d2();
    const double beta = mode.propagation_constant();
    const double a = kFiber.core_radius;
    const CavitySpec even = CavitySpec::make(0.9, 0.1, atom.bare_frequency, 0);
    const CavitySpec odd = CavitySpec::make(0.9, 0.1, atom.bare_frequency, 1);
    const double scale = coupling_strength(mode, even, atom, {a, 0.0, 0.0});

    for (const double z : {0.0, 95e-9, 310e-9}) {
        const double g_even = coupling_strength(mode, even, atom, {a, 0.0, z});
        const double g_odd =
            coupling_strength(mode, odd, atom, {a, 0.0, z + 0.5 * kPi / beta});
        CHECK(std::abs(g_even + g_odd) < 1e-12 * std::abs(scale));
    }
}

TEST_CASE("total decay rate approaches the free-space value far away") {
    const auto& mode = reference_mode();
    const AtomSpec atom = AtomSpec::cesium_d2();
    const double a = kFiber.core_radius;

    CHECK(rel_diff(total_decay_rate(mode, atom, a + 5e-6), atom.natural_linewidth) <
          1e-9);

    double prev = total_decay_rate(mode, atom, a);
    for (int i = 1; i <= 200; ++i) {
        const double value = total_decay_rate(mode, atom, a + i * 5e-9);
        CHECK(value < prev);
        CHECK(value > atom.natural_linewidth);
        prev = value;
    }
}
