#pragma once

#include <numbers>

namespace vortexq::constants {

// CODATA 2018, pinned so that reproduced numbers are stable across builds.
inline constexpr double pi = std::numbers::pi;
inline constexpr double speed_of_light = 299'792'458.0;        // m/s
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m
inline constexpr double hbar = 1.054571817e-34;                // J s
inline constexpr double elementary_charge = 1.602176634e-19;   // C
inline constexpr double bohr_radius = 5.291772109e-11;         // m

/// One e*a0^2 in SI (C m^2).
inline constexpr double quadrupole_unit = elementary_charge * bohr_radius * bohr_radius;

}  // namespace vortexq::constants
