// units.hpp — unit conventions and conversion helpers
//
// Internal units throughout the library: angular frequency in rad/ns,
// time in ns, magnetic flux in units of the flux quantum Phi0.

#pragma once

#include <numbers>

namespace tdswt::units {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// "f/2pi in GHz" -> rad/ns (1 GHz = 1/ns)
inline constexpr double ghz(double f) { return two_pi * f; }
inline constexpr double mhz(double f) { return two_pi * f * 1e-3; }

inline constexpr double to_ghz(double w) { return w / two_pi; }
inline constexpr double to_mhz(double w) { return w / two_pi * 1e3; }

// milli flux quanta -> Phi0
inline constexpr double mphi0(double x) { return x * 1e-3; }

}  // namespace tdswt::units
