#include "fibercav/liouvillian.hpp"

#include <cmath>
#include <vector>

namespace fibercav {

namespace {

Matrix kron(const Matrix& lhs, const Matrix& rhs) {
    Matrix out(lhs.rows() * rhs.rows(), lhs.cols() * rhs.cols());
    for (Eigen::Index i = 0; i < lhs.rows(); ++i)
        for (Eigen::Index j = 0; j < lhs.cols(); ++j)
            out.block(i * rhs.rows(), j * rhs.cols(), rhs.rows(), rhs.cols()) =
                lhs(i, j) * rhs;
    return out;
}

void append_kron_triplets(std::vector<Eigen::Triplet<Complex>>& out,
                          const Matrix& lhs, const Matrix& rhs, Complex scale) {
    const auto rows = rhs.rows();
    const auto cols = rhs.cols();
    for (Eigen::Index i = 0; i < lhs.rows(); ++i)
        for (Eigen::Index j = 0; j < lhs.cols(); ++j) {
            const Complex lv = scale * lhs(i, j);
            if (lv == Complex(0.0)) continue;
            for (Eigen::Index k = 0; k < rows; ++k)
                for (Eigen::Index l = 0; l < cols; ++l) {
                    const Complex v = lv * rhs(k, l);
                    if (v != Complex(0.0))
                        out.emplace_back(i * rows + k, j * cols + l, v);
                }
        }
}

}  // namespace

DensityMatrix DensityMatrix::vacuum(int n_max) {
    return fock(n_max, 0, 0);
}

DensityMatrix DensityMatrix::fock(int n_max, int alpha, int n) {
    DensityMatrix rho;
    rho.n_max = n_max;
    rho.mat = Matrix::Zero(2 * (n_max + 1), 2 * (n_max + 1));
    const int i = alpha * (n_max + 1) + n;
    rho.mat(i, i) = 1.0;
    return rho;
}

Liouvillian::Liouvillian(const SystemParams& params, int n_max)
    : params_(params), n_max_(n_max), dim_(2 * (n_max + 1)) {
    if (n_max < 1)
        throw TruncationTooSmall("photon-number cutoff must be at least 1");

    const int nf = n_max + 1;
    Matrix a_field = Matrix::Zero(nf, nf);
    for (int n = 1; n < nf; ++n)
        a_field(n - 1, n) = std::sqrt(static_cast<double>(n));

    Matrix id2 = Matrix::Identity(2, 2);
    Matrix idf = Matrix::Identity(nf, nf);
    Matrix lower2 = Matrix::Zero(2, 2);
    lower2(0, 1) = 1.0;  // |g><e|
    Matrix sz2 = Matrix::Zero(2, 2);
    sz2(0, 0) = -1.0;
    sz2(1, 1) = 1.0;

    a_ = kron(id2, a_field);
    a_dag_ = a_.adjoint();
    number_ = a_dag_ * a_;
    sigma_ = kron(lower2, idf);
    sigma_dag_ = sigma_.adjoint();
    sigma_z_ = kron(sz2, idf);
    excited_ = sigma_dag_ * sigma_;

    const Complex i_unit(0.0, 1.0);
    h_eff_ = -0.5 * params.delta_a * sigma_z_ - params.delta_c * number_ -
             i_unit * params.G * (a_ * sigma_dag_ - a_dag_ * sigma_) -
             i_unit * params.eta * (a_ - a_dag_);
}

Matrix Liouvillian::apply(const Matrix& rho) const {
    const Complex i_unit(0.0, 1.0);
    Matrix out = i_unit * (rho * h_eff_ - h_eff_ * rho);
    out -= 0.5 * params_.gamma *
           (excited_ * rho - 2.0 * sigma_ * rho * sigma_dag_ + rho * excited_);
    out -= 0.5 * params_.kappa *
           (number_ * rho - 2.0 * a_ * rho * a_dag_ + rho * number_);
    return out;
}

SparseMatrix Liouvillian::matrix() const {
    const Complex i_unit(0.0, 1.0);
    const Matrix id = Matrix::Identity(dim_, dim_);
    std::vector<Eigen::Triplet<Complex>> trip;
    trip.reserve(static_cast<size_t>(dim_) * dim_ * 12);

    // vec(A rho B) = (B^T kron A) vec(rho)
    append_kron_triplets(trip, h_eff_.transpose(), id, i_unit);
    append_kron_triplets(trip, id, h_eff_, -i_unit);

    const struct {
        const Matrix& op;
        double rate;
    } channels[] = {{sigma_, params_.gamma}, {a_, params_.kappa}};
    for (const auto& ch : channels) {
        const Matrix op_dag_op = ch.op.adjoint() * ch.op;
        append_kron_triplets(trip, ch.op.conjugate(), ch.op, ch.rate);
        append_kron_triplets(trip, id, op_dag_op, -0.5 * ch.rate);
        append_kron_triplets(trip, op_dag_op.transpose(), id, -0.5 * ch.rate);
    }

    SparseMatrix m(dim_ * dim_, dim_ * dim_);
    m.setFromTriplets(trip.begin(), trip.end());
    return m;
}

}  // namespace fibercav
