#pragma once

#include <cmath>

namespace fibercav {

// Cylinder functions J_n and K_n. The libstdc++ implementations are good to
// better than 1e-13 relative on the argument range used here (0.01 - 25);
// the unit tests pin them against high-precision reference values.
inline double bessel_j(int order, double x) {
    return std::cyl_bessel_j(static_cast<double>(order), x);
}

inline double bessel_k(int order, double x) {
    return std::cyl_bessel_k(static_cast<double>(order), x);
}

}  // namespace fibercav
