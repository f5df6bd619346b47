#pragma once

#include <complex>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "fibercav/errors.hpp"

namespace fibercav {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using SparseMatrix = Eigen::SparseMatrix<Complex>;

// The five rates and two detunings entering the master equation, all angular (rad/s).
struct SystemParams {
    double G = 0.0;        // atom-cavity coupling (real, signed by the standing wave)
    double gamma = 0.0;    // atomic decay rate
    double kappa = 0.0;    // cavity damping rate
    double eta = 0.0;      // pumping rate
    double delta_a = 0.0;  // omega_p - omega_a
    double delta_c = 0.0;  // omega_p - omega_c
};

// Density matrix on the truncated basis |alpha, n>, alpha in {g, e},
// n in 0..n_max; flat index alpha*(n_max+1) + n with g = 0, e = 1.
struct DensityMatrix {
    int n_max = 0;
    Matrix mat;

    int dim() const { return 2 * (n_max + 1); }
    static DensityMatrix vacuum(int n_max);
    // |alpha, n><alpha, n|
    static DensityMatrix fock(int n_max, int alpha, int n);
};

// Right-hand side of the master equation as operator algebra on the truncated
// basis: commutator with the effective Hamiltonian plus the two decay terms.
// Operators are truncated one-sided (a^dag |n_max> = 0).
class Liouvillian {
public:
    Liouvillian(const SystemParams& params, int n_max);

    int n_max() const { return n_max_; }
    int dim() const { return dim_; }
    const SystemParams& params() const { return params_; }

    Matrix apply(const Matrix& rho) const;

    // D^2 x D^2 map M with vec(drho/dt) = M vec(rho), column-stacked.
    SparseMatrix matrix() const;

    const Matrix& annihilation() const { return a_; }
    const Matrix& creation() const { return a_dag_; }
    const Matrix& lowering() const { return sigma_; }
    const Matrix& raising() const { return sigma_dag_; }
    const Matrix& inversion() const { return sigma_z_; }
    const Matrix& hamiltonian() const { return h_eff_; }  // H_eff / hbar

private:
    SystemParams params_;
    int n_max_;
    int dim_;
    Matrix a_, a_dag_, number_, sigma_, sigma_dag_, sigma_z_, excited_, h_eff_;
};

inline DensityMatrix apply_rhs(const SystemParams& params, const DensityMatrix& rho) {
    return {rho.n_max, Liouvillian(params, rho.n_max).apply(rho.mat)};
}

inline SparseMatrix build_matrix(const SystemParams& params, int n_max) {
    return Liouvillian(params, n_max).matrix();
}

}  // namespace fibercav
