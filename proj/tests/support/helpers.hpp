#pragma once

#include <cmath>
#include <random>

#include "fibercav/liouvillian.hpp"

namespace fibercav::testing {

inline Matrix random_complex(int rows, int cols, std::mt19937_64& gen) {
    std::normal_distribution<double> normal;
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = Complex(normal(gen), normal(gen));
    return m;
}

inline Matrix random_hermitian(int dim, std::mt19937_64& gen) {
    const Matrix m = random_complex(dim, dim, gen);
    return 0.5 * (m + m.adjoint()).eval();
}

// Random physical density matrix (Hermitian, positive, unit trace).
inline Matrix random_density(int dim, std::mt19937_64& gen) {
    const Matrix m = random_complex(dim, dim, gen);
    Matrix rho = m * m.adjoint();
    rho /= rho.trace().real();
    return rho;
}

inline double rel_diff(double x, double y) {
    return std::abs(x - y) / std::max({std::abs(x), std::abs(y), 1e-300});
}

// Fixed-step composite Simpson rule on [a, b] with n panels (n even).
template <class F>
double composite_simpson(const F& f, double a, double b, int n) {
    const double h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i)
        sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

}  // namespace fibercav::testing
