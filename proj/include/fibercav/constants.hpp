#pragma once

namespace fibercav {

// CODATA 2018
inline constexpr double kSpeedOfLight = 299792458.0;          // m/s
inline constexpr double kHbar = 1.054571817e-34;              // J s
inline constexpr double kVacuumPermittivity = 8.8541878128e-12;  // F/m
inline constexpr double kPi = 3.141592653589793238462643383279502884;

}  // namespace fibercav
