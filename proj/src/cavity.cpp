#include "fibercav/cavity.hpp"

#include <cmath>

#include "fibercav/constants.hpp"

namespace fibercav {

namespace {
constexpr double kExpansionLimit = 0.3;  // rad
}

CavitySpec CavitySpec::make(double reflectivity_sq, double length,
                            double resonance_frequency, int resonance_order) {
    if (!(reflectivity_sq > 0.0 && reflectivity_sq < 1.0))
        throw SimulationError("|R|^2 must lie in (0, 1)");
    if (!(length > 0.0))
        throw SimulationError("cavity length must be positive");
    CavitySpec spec;
    spec.reflectivity = std::sqrt(reflectivity_sq);
    spec.length = length;
    spec.resonance_frequency = resonance_frequency;
    spec.resonance_order = resonance_order;
    return spec;
}

TransmissionResult transmission(const CavitySpec& spec, double group_velocity,
                                double probe_frequency) {
    const double r2 = spec.reflectivity * spec.reflectivity;
    const double t2 = 1.0 - r2;
    const double phase = spec.length / group_velocity *
                         (probe_frequency - spec.resonance_frequency);
    TransmissionResult out;
    out.ratio = t2 * t2 / (t2 * t2 + 4.0 * r2 * phase * phase);
    out.expansion_domain_exceeded = std::abs(phase) >= kExpansionLimit;
    return out;
}

double damping_rate(const CavitySpec& spec, double group_velocity) {
    const double r2 = spec.reflectivity * spec.reflectivity;
    return (1.0 - r2) * group_velocity / (spec.reflectivity * spec.length);
}

double pumping_rate(const CavitySpec& spec, const DriveSpec& drive,
                    double group_velocity) {
    if (drive.input_power < 0.0)
        throw SimulationError("input power must be nonnegative");
    const double kappa = damping_rate(spec, group_velocity);
    return std::sqrt(0.5 * kappa * drive.input_power / (kHbar * drive.probe_frequency));
}

double finesse(const CavitySpec& spec) {
    const double r2 = spec.reflectivity * spec.reflectivity;
    return kPi * spec.reflectivity / (1.0 - r2);
}

CavityParams cavity_params(const CavitySpec& spec, const DriveSpec& drive,
                           double group_velocity) {
    CavityParams p;
    p.kappa = damping_rate(spec, group_velocity);
    p.eta = pumping_rate(spec, drive, group_velocity);
    p.finesse = finesse(spec);
    p.detuning_cavity = drive.probe_frequency - spec.resonance_frequency;
    return p;
}

double empty_cavity_photon_number(const CavityParams& params) {
    return params.eta * params.eta /
           (0.25 * params.kappa * params.kappa +
            params.detuning_cavity * params.detuning_cavity);
}

double transmitted_power(double kappa, double probe_frequency, double n_cav) {
    return 0.5 * kHbar * probe_frequency * kappa * n_cav;
}

}  // namespace fibercav
