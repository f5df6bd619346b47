#include "fibercav/weak_drive.hpp"

#include <cmath>

namespace fibercav {

WeakDriveSolution weak_drive_solution(const SystemParams& p) {
    const Complex i_unit(0.0, 1.0);
    const Complex denom = p.G * p.G + 0.25 * p.kappa * p.gamma -
                          p.delta_c * p.delta_a -
                          0.5 * i_unit * (p.delta_c * p.gamma + p.delta_a * p.kappa);
    if (std::abs(denom) < 1e-30)
        throw DegenerateDenominator("weak-drive denominator vanishes");

    const double abs2 = std::norm(denom);
    WeakDriveSolution sol;
    sol.denominator = denom;
    sol.mean_field = -(p.eta / denom) * (i_unit * p.delta_a - 0.5 * p.gamma);
    sol.coherence = -(p.eta / denom) * p.G;
    sol.n_cav = p.eta * p.eta * (p.delta_a * p.delta_a + 0.25 * p.gamma * p.gamma) / abs2;
    sol.p_e = p.eta * p.eta * p.G * p.G / abs2;
    sol.cross_sym = -p.eta * p.eta / abs2 * p.G * p.gamma;
    sol.cross_asym = -2.0 * i_unit * p.eta * p.eta / abs2 * p.G * p.delta_a;
    return sol;
}

std::pair<double, double> rabi_peak_positions(double G, double kappa, double gamma,
                                              double delta_vdw) {
    const double root = std::sqrt(G * G + 0.25 * kappa * gamma +
                                  0.25 * delta_vdw * delta_vdw);
    return {0.5 * delta_vdw - root, 0.5 * delta_vdw + root};
}

LinearizationResiduals linearization_check(const DensityMatrix& rho_ss) {
    const Liouvillian ops(SystemParams{}, rho_ss.n_max);
    const Matrix& a = ops.annihilation();
    const Matrix& sz = ops.inversion();
    const Matrix number = ops.creation() * a;

    LinearizationResiduals res;
    res.field = std::abs(((a * sz + a) * rho_ss.mat).trace());
    res.number = std::abs(((number * sz + number) * rho_ss.mat).trace());
    return res;
}

}  // namespace fibercav
