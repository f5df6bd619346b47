#pragma once

// Independent element-wise form of the density-matrix equations of motion,
// transcribed index by index. Used only as a cross-check of the operator-form
// right-hand side; the upper-right block follows from hermiticity.

#include <cmath>

#include "fibercav/liouvillian.hpp"

namespace fibercav::testing {

inline Matrix element_equations_rhs(const SystemParams& p, const Matrix& rho,
                                    int n_max) {
    const int nf = n_max + 1;
    const Complex i_unit(0.0, 1.0);
    const auto sq = [](int n) { return std::sqrt(static_cast<double>(n)); };
    // alpha: 0 = g, 1 = e; flat index alpha*nf + n
    const auto at = [&](int alpha, int n, int alpha2, int n2) -> Complex {
        if (n < 0 || n2 < 0 || n >= nf || n2 >= nf) return {0.0, 0.0};
        return rho(alpha * nf + n, alpha2 * nf + n2);
    };

    Matrix out = Matrix::Zero(2 * nf, 2 * nf);
    for (int n = 0; n < nf; ++n) {
        for (int m = 0; m < nf; ++m) {
            // excited-excited
            out(nf + n, nf + m) =
                -i_unit * p.delta_c * static_cast<double>(m - n) * at(1, n, 1, m) -
                p.G * (sq(m + 1) * at(1, n, 0, m + 1) + sq(n + 1) * at(0, n + 1, 1, m)) +
                p.eta * (sq(m) * at(1, n, 1, m - 1) + sq(n) * at(1, n - 1, 1, m) -
                         sq(m + 1) * at(1, n, 1, m + 1) - sq(n + 1) * at(1, n + 1, 1, m)) -
                p.gamma * at(1, n, 1, m) -
                0.5 * p.kappa * (static_cast<double>(m + n) * at(1, n, 1, m) -
                                 2.0 * sq((m + 1) * (n + 1)) * at(1, n + 1, 1, m + 1));
            // ground-ground
            out(n, m) =
                -i_unit * p.delta_c * static_cast<double>(m - n) * at(0, n, 0, m) +
                p.G * (sq(m) * at(0, n, 1, m - 1) + sq(n) * at(1, n - 1, 0, m)) +
                p.eta * (sq(m) * at(0, n, 0, m - 1) + sq(n) * at(0, n - 1, 0, m) -
                         sq(m + 1) * at(0, n, 0, m + 1) - sq(n + 1) * at(0, n + 1, 0, m)) +
                p.gamma * at(1, n, 1, m) -
                0.5 * p.kappa * (static_cast<double>(m + n) * at(0, n, 0, m) -
                                 2.0 * sq((m + 1) * (n + 1)) * at(0, n + 1, 0, m + 1));
            // ground-excited
            out(n, nf + m) =
                -i_unit * p.delta_a * at(0, n, 1, m) -
                i_unit * p.delta_c * static_cast<double>(m - n) * at(0, n, 1, m) -
                p.G * (sq(m + 1) * at(0, n, 0, m + 1) - sq(n) * at(1, n - 1, 1, m)) +
                p.eta * (sq(m) * at(0, n, 1, m - 1) + sq(n) * at(0, n - 1, 1, m) -
                         sq(m + 1) * at(0, n, 1, m + 1) - sq(n + 1) * at(0, n + 1, 1, m)) -
                0.5 * p.gamma * at(0, n, 1, m) -
                0.5 * p.kappa * (static_cast<double>(m + n) * at(0, n, 1, m) -
                                 2.0 * sq((m + 1) * (n + 1)) * at(0, n + 1, 1, m + 1));
        }
    }
    for (int n = 0; n < nf; ++n)
        for (int m = 0; m < nf; ++m)
            out(nf + n, m) = std::conj(out(m, nf + n));
    return out;
}

}  // namespace fibercav::testing
