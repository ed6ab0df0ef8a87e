#pragma once

#include <numbers>

namespace kdsim {

/// SI constants, nine significant digits.
struct PhysicalConstants {
    double planck_h = 6.62607015e-34;          // J s
    double hbar = 6.62607015e-34 / (2.0 * std::numbers::pi);
    double electron_mass = 9.10938370e-31;     // kg
    double elementary_charge = 1.60217663e-19; // C
    double vacuum_permittivity = 8.85418781e-12; // F/m
    double speed_of_light = 299792458.0;       // m/s
    double atomic_mass_unit = 1.66053907e-27;  // kg
    // Earth rotation rate as quoted for rotation-sensor comparisons. The
    // sidereal value is 7.29e-5 rad/s; the two-digit figure is kept.
    double earth_rotation = 7.0e-5;            // rad/s
};

inline constexpr PhysicalConstants constants{};

namespace units {
inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline constexpr double nm = 1e-9;
inline constexpr double um = 1e-6;
inline constexpr double cm = 1e-2;
inline constexpr double electron_volt = constants.elementary_charge;
inline constexpr double amu = constants.atomic_mass_unit;
inline constexpr double GW_per_m2 = 1e9;
}  // namespace units

}  // namespace kdsim
