#include "fibercav/steady_state.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/SparseLU>

#include "fibercav/cavity.hpp"

namespace fibercav {

namespace {

constexpr double kTruncationTol = 1e-6;
constexpr int kMaxTruncation = 32;

double real_trace(const Matrix& op, const Matrix& rho) {
    return (op * rho).trace().real();
}

bool close_rel(double x, double y, double tol) {
    return std::abs(x - y) <= tol * std::max(std::abs(x), std::abs(y));
}

bool observables_converged(const Observables& a, const Observables& b) {
    if (!close_rel(a.n_cav, b.n_cav, kTruncationTol)) return false;
    if (!close_rel(a.p_e, b.p_e, kTruncationTol)) return false;
    if (a.g2 && b.g2 && !close_rel(*a.g2, *b.g2, kTruncationTol)) return false;
    return true;
}

double inf_norm(const SparseMatrix& m) {
    Eigen::VectorXd row_sums = Eigen::VectorXd::Zero(m.rows());
    for (int k = 0; k < m.outerSize(); ++k)
        for (SparseMatrix::InnerIterator it(m, k); it; ++it)
            row_sums(it.row()) += std::abs(it.value());
    return row_sums.maxCoeff();
}

SteadyStateResult solve_fixed(const SystemParams& params, int n_max,
                              double probe_frequency) {
    if (!(params.kappa > 0.0))
        throw SingularSystem("cavity damping must be positive for a unique steady state");

    const Liouvillian liouville(params, n_max);
    const int dim = liouville.dim();
    const SparseMatrix m = liouville.matrix();

    // Replace the first row with the trace constraint Tr(rho) = 1.
    std::vector<Eigen::Triplet<Complex>> trip;
    trip.reserve(m.nonZeros() + dim);
    for (int k = 0; k < m.outerSize(); ++k)
        for (SparseMatrix::InnerIterator it(m, k); it; ++it)
            if (it.row() != 0)
                trip.emplace_back(it.row(), it.col(), it.value());
    for (int i = 0; i < dim; ++i)
        trip.emplace_back(0, i * (dim + 1), Complex(1.0));
    SparseMatrix constrained(dim * dim, dim * dim);
    constrained.setFromTriplets(trip.begin(), trip.end());

    Eigen::SparseLU<SparseMatrix> lu;
    lu.compute(constrained);
    if (lu.info() != Eigen::Success)
        throw SingularSystem("constrained steady-state solve failed");

    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(dim * dim);
    rhs(0) = 1.0;
    const Eigen::VectorXcd vec = lu.solve(rhs);
    if (lu.info() != Eigen::Success)
        throw SingularSystem("constrained steady-state solve failed");

    SteadyStateResult out;
    out.rho.n_max = n_max;
    out.rho.mat = Eigen::Map<const Matrix>(vec.data(), dim, dim);
    out.rho.mat = 0.5 * (out.rho.mat + out.rho.mat.adjoint()).eval();
    out.rho.mat /= out.rho.mat.trace().real();

    const Eigen::VectorXcd residual_vec =
        m * Eigen::Map<const Eigen::VectorXcd>(out.rho.mat.data(), dim * dim);
    out.residual = residual_vec.cwiseAbs().maxCoeff() / inf_norm(m);
    out.n_max_used = n_max;
    out.obs = observables_from(out.rho, params.kappa, probe_frequency);
    return out;
}

}  // namespace

Observables observables_from(const DensityMatrix& rho, double kappa,
                             double probe_frequency) {
    const Liouvillian ops(SystemParams{}, rho.n_max);
    const Matrix& a = ops.annihilation();
    const Matrix& a_dag = ops.creation();

    Observables obs;
    obs.n_cav = real_trace(a_dag * a, rho.mat);
    obs.p_e = real_trace(ops.raising() * ops.lowering(), rho.mat);
    obs.mean_field = (a * rho.mat).trace();
    obs.coherence = (ops.lowering() * rho.mat).trace();
    if (obs.n_cav > kG2Floor) {
        const double pairs = real_trace(a_dag * a_dag * a * a, rho.mat);
        obs.g2 = pairs / (obs.n_cav * obs.n_cav);
    }
    if (kappa > 0.0 && probe_frequency > 0.0)
        obs.p_out = transmitted_power(kappa, probe_frequency, obs.n_cav);
    return obs;
}

int initial_truncation(const SystemParams& params) {
    const double n_empty = params.eta * params.eta /
                           (0.25 * params.kappa * params.kappa +
                            params.delta_c * params.delta_c);
    return static_cast<int>(std::ceil(10.0 * n_empty)) + 4;
}

SteadyStateResult solve_steady(const SystemParams& params, int n_max,
                               double probe_frequency) {
    SteadyStateResult base = solve_fixed(params, n_max, probe_frequency);
    const SteadyStateResult check = solve_fixed(params, n_max + 2, probe_frequency);
    if (!observables_converged(base.obs, check.obs))
        throw TruncationNotConverged("observables still moving under n_max + 2");
    return base;
}

SteadyStateResult solve_steady_auto(const SystemParams& params,
                                    double probe_frequency) {
    int n_max = initial_truncation(params);
    SteadyStateResult current = solve_fixed(params, n_max, probe_frequency);
    while (n_max <= kMaxTruncation) {
        const SteadyStateResult check = solve_fixed(params, n_max + 2, probe_frequency);
        if (observables_converged(current.obs, check.obs))
            return current;
        current = check;
        n_max += 2;
    }
    throw TruncationNotConverged("no truncation convergence below the cutoff cap");
}

double default_time_step(const SystemParams& params) {
    const double scale = std::max({params.kappa, params.gamma, std::abs(params.delta_a),
                                   std::abs(params.delta_c), std::abs(params.G),
                                   params.eta});
    return 0.01 / scale;
}

DensityMatrix propagate(const SystemParams& params, const DensityMatrix& rho0,
                        double t_final, double dt) {
    const Liouvillian liouville(params, rho0.n_max);
    const int dim = liouville.dim();

    // Spectral-radius estimate by power iteration on the superoperator.
    std::mt19937_64 gen(0x5eed);
    std::normal_distribution<double> normal;
    Matrix probe(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            probe(i, j) = Complex(normal(gen), normal(gen));
    double radius = 0.0;
    for (int it = 0; it < 40; ++it) {
        probe = liouville.apply(probe);
        radius = probe.norm();
        if (radius == 0.0) break;
        probe /= radius;
    }
    if (dt * radius > 1.0)
        throw StepTooLarge("time step too large for the explicit scheme");

    DensityMatrix rho = rho0;
    double t = 0.0;
    while (t < t_final) {
        const double step = std::min(dt, t_final - t);
        const Matrix k1 = liouville.apply(rho.mat);
        const Matrix k2 = liouville.apply(rho.mat + 0.5 * step * k1);
        const Matrix k3 = liouville.apply(rho.mat + 0.5 * step * k2);
        const Matrix k4 = liouville.apply(rho.mat + step * k3);
        rho.mat += step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t += step;
    }
    return rho;
}

}  // namespace fibercav
