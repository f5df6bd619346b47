#pragma once

#include <optional>

#include "fibercav/liouvillian.hpp"

namespace fibercav {

// Below this mean photon number g2 is a ratio of numerical noise and is
// reported as undefined.
inline constexpr double kG2Floor = 1e-12;

struct Observables {
    double n_cav = 0.0;            // <a^dag a>
    std::optional<double> g2;      // <a^dag a^dag a a> / <a^dag a>^2
    double p_e = 0.0;              // <sigma^dag sigma>
    double p_out = 0.0;            // W; zero unless kappa and omega_p supplied
    Complex mean_field{0.0, 0.0};  // <a>
    Complex coherence{0.0, 0.0};   // <sigma>
};

struct SteadyStateResult {
    DensityMatrix rho;
    Observables obs;
    int n_max_used = 0;
    double residual = 0.0;  // ||M vec(rho)||_inf / ||M||_inf
};

Observables observables_from(const DensityMatrix& rho, double kappa = 0.0,
                             double probe_frequency = 0.0);

// Starting photon cutoff, ceil(10 nbar_empty) + 4.
int initial_truncation(const SystemParams& params);

// Direct solve of M vec(rho) = 0 with the trace constraint; verifies that the
// observables move by less than 1e-6 relative under n_max -> n_max + 2 and
// throws TruncationNotConverged otherwise. Throws SingularSystem when the
// constrained solve fails (kappa = 0 or pathological parameters).
SteadyStateResult solve_steady(const SystemParams& params, int n_max,
                               double probe_frequency = 0.0);

// Grows n_max from initial_truncation() until the +2 test passes.
SteadyStateResult solve_steady_auto(const SystemParams& params,
                                    double probe_frequency = 0.0);

// 0.01 / max(kappa, gamma, |Delta_a|, |Delta_c|, |G|, eta)
double default_time_step(const SystemParams& params);

// Classic fourth-order explicit integration of the master equation;
// throws StepTooLarge if dt times the spectral-radius estimate exceeds 1.
DensityMatrix propagate(const SystemParams& params, const DensityMatrix& rho0,
                        double t_final, double dt);

}  // namespace fibercav
