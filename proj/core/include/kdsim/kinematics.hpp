#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace kdsim {

/// How a frequency value is expressed. Internal math is always angular.
enum class FrequencyConvention { angular, cyclic };

std::string_view to_string(FrequencyConvention convention);

inline constexpr double cyclic_to_angular(double hz) { return hz * 6.283185307179586; }
inline constexpr double angular_to_cyclic(double rad_s) { return rad_s / 6.283185307179586; }

/// Converts `value` given in `from` into rad/s.
double to_angular(double value, FrequencyConvention from);
/// Converts a rad/s value into `to`.
double from_angular(double rad_s, FrequencyConvention to);

/// A resonance of a bound charge. `weight` scales the line's contribution
/// (an oscillator strength; always positive, detuning carries the sign).
struct ResonanceLine {
    double omega0 = 0.0;  // rad/s
    double weight = 1.0;
};

ResonanceLine line_from_wavelength(double wavelength_m, double weight = 1.0);
double line_wavelength(const ResonanceLine& line);

/// Who is being diffracted. A free electron has no lines.
struct Particle {
    std::string name;
    double mass = 0.0;    // kg
    double charge = 0.0;  // C
    std::vector<ResonanceLine> lines;

    /// Throws ValidationError on non-positive mass or bad lines.
    void validate() const;
};

Particle electron();

// Non-relativistic kinematics.
double velocity_from_kinetic_energy(double energy_J, double mass_kg);
double de_broglie_wavelength(double mass_kg, double velocity_m_s);
/// Recoil frequency hbar k^2 / 2m in rad/s for light of wavelength `wavelength_m`.
double recoil_frequency(double mass_kg, double wavelength_m);
/// Transit time through a region of width `width_m`.
double interaction_time(double width_m, double velocity_m_s);

}  // namespace kdsim
