#include "fibercav/selftest.hpp"

#include <cmath>
#include <ostream>
#include <random>

#include "fibercav/constants.hpp"
#include "fibercav/run_config.hpp"
#include "fibercav/steady_state.hpp"
#include "fibercav/weak_drive.hpp"

namespace fibercav {

namespace {

Matrix random_hermitian(int dim, std::mt19937_64& gen) {
    std::normal_distribution<double> normal;
    Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            m(i, j) = Complex(normal(gen), normal(gen));
    return 0.5 * (m + m.adjoint()).eval();
}

SystemParams random_params(std::mt19937_64& gen, double gamma0) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    SystemParams p;
    p.kappa = (2.0 + 4.0 * u(gen)) * gamma0;
    p.gamma = (0.8 + 1.2 * u(gen)) * gamma0;
    p.G = 3.0 * u(gen) * gamma0;
    p.eta = 0.5 * u(gen) * gamma0;
    p.delta_a = (2.0 * u(gen) - 1.0) * 2.0 * gamma0;
    p.delta_c = (2.0 * u(gen) - 1.0) * 2.0 * gamma0;
    return p;
}

}  // namespace

int run_selftest(std::ostream& log) {
    const double gamma0 = 2.0 * kPi * 5.25e6;
    std::mt19937_64 gen(20250809);
    int failures = 0;
    const auto report = [&](const char* name, bool ok) {
        log << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    // Dispersion residual over the working wavelength band.
    {
        const FiberSpec fiber{200e-9, 1.45, 1.0};
        bool ok = true;
        for (int i = 0; i < 5; ++i) {
            const double lambda = 800e-9 + i * 25e-9;
            const double omega = 2.0 * kPi * kSpeedOfLight / lambda;
            const auto sol = solve_dispersion(fiber, omega);
            ok = ok && std::abs(dispersion_residual(fiber, omega,
                                                    sol.propagation_constant())) < 1e-12;
        }
        report("fiber dispersion residual < 1e-12", ok);
    }

    // Superoperator matrix agrees with the operator-form right-hand side.
    {
        bool ok = true;
        for (int trial = 0; trial < 5; ++trial) {
            const SystemParams p = random_params(gen, gamma0);
            const Liouvillian liouville(p, 4);
            const Matrix rho = random_hermitian(liouville.dim(), gen);
            const Matrix direct = liouville.apply(rho);
            const Eigen::VectorXcd vec = liouville.matrix() *
                Eigen::Map<const Eigen::VectorXcd>(rho.data(), rho.size());
            const Matrix from_matrix =
                Eigen::Map<const Matrix>(vec.data(), rho.rows(), rho.cols());
            ok = ok && (direct - from_matrix).cwiseAbs().maxCoeff() <
                           1e-12 * direct.cwiseAbs().maxCoeff();
            ok = ok && std::abs(direct.trace()) < 1e-12 * direct.cwiseAbs().maxCoeff();
            ok = ok && (direct - direct.adjoint()).cwiseAbs().maxCoeff() <
                           1e-12 * direct.cwiseAbs().maxCoeff();
        }
        report("liouvillian matrix/apply agreement, trace and hermiticity", ok);
    }

    // Node equals the empty-cavity Lorentzian.
    {
        bool ok = true;
        for (int i = 0; i < 5; ++i) {
            SystemParams p;
            p.G = 0.0;
            p.gamma = gamma0;
            p.kappa = 7.0 * gamma0;
            p.eta = 0.6 * gamma0;
            p.delta_c = (i - 2) * 2.0 * gamma0;
            p.delta_a = p.delta_c;
            const auto ss = solve_steady(p, 6);
            const double expected = p.eta * p.eta /
                (0.25 * p.kappa * p.kappa + p.delta_c * p.delta_c);
            ok = ok && std::abs(ss.obs.n_cav - expected) < 1e-10 * expected;
        }
        report("node point reproduces the empty-cavity photon number", ok);
    }

    // Propagation oracle lands on the direct solve.
    {
        bool ok = true;
        for (int trial = 0; trial < 3; ++trial) {
            SystemParams p = random_params(gen, gamma0);
            p.eta = 0.003 * std::min(p.kappa, p.gamma);
            const auto ss = solve_steady(p, 4);
            const auto rho = propagate(p, DensityMatrix::vacuum(4),
                                       20.0 / std::min(p.kappa, p.gamma),
                                       default_time_step(p));
            ok = ok && (rho.mat - ss.rho.mat).cwiseAbs().maxCoeff() < 1e-6;
        }
        report("time propagation agrees with the steady-state solve", ok);
    }

    // Weak-drive closed form is internally consistent.
    {
        bool ok = true;
        for (int trial = 0; trial < 5; ++trial) {
            const SystemParams p = random_params(gen, gamma0);
            const WeakDriveSolution wd = weak_drive_solution(p);
            ok = ok && std::abs(wd.n_cav - std::norm(wd.mean_field)) <
                           1e-14 * wd.n_cav + 1e-30;
            ok = ok && std::abs(wd.p_e - std::norm(wd.coherence)) <
                           1e-14 * wd.p_e + 1e-30;
        }
        report("weak-drive moments factorize", ok);
    }

    // Pump/damping/transmitted-power loop closes on the input power.
    {
        const double omega = 2.0 * kPi * kSpeedOfLight / 852e-9;
        const CavitySpec cav = CavitySpec::make(0.9, 0.1, omega);
        const DriveSpec drive{omega, 1e-12};
        const double vg = 2.2e8;
        const CavityParams params = cavity_params(cav, drive, vg);
        const double back = transmitted_power(params.kappa, omega,
                                              empty_cavity_photon_number(params));
        report("resonant empty cavity transmits the input power",
               std::abs(back - drive.input_power) < 1e-12 * drive.input_power);
    }

    return failures;
}

}  // namespace fibercav
