#pragma once

namespace casinet::constants {

// CODATA values, SI units.
inline constexpr double hbar = 1.054571817e-34;  // J s
inline constexpr double c_light = 299792458.0;   // m / s

}  // namespace casinet::constants
