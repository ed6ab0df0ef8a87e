#include "kdsim/kinematics.hpp"

#include <cmath>

#include "kdsim/constants.hpp"
#include "kdsim/error.hpp"

namespace kdsim {

std::string_view to_string(FrequencyConvention convention)
{
    return convention == FrequencyConvention::angular ? "angular" : "cyclic";
}

double to_angular(double value, FrequencyConvention from)
{
    return from == FrequencyConvention::angular ? value : cyclic_to_angular(value);
}

double from_angular(double rad_s, FrequencyConvention to)
{
    return to == FrequencyConvention::angular ? rad_s : angular_to_cyclic(rad_s);
}

ResonanceLine line_from_wavelength(double wavelength_m, double weight)
{
    detail::require(wavelength_m > 0.0, "resonance wavelength must be positive");
    detail::require(weight > 0.0, "resonance weight must be positive");
    return {units::two_pi * constants.speed_of_light / wavelength_m, weight};
}

double line_wavelength(const ResonanceLine& line)
{
    return units::two_pi * constants.speed_of_light / line.omega0;
}

void Particle::validate() const
{
    detail::require(std::isfinite(mass) && mass > 0.0, "particle '" + name + "': mass must be positive");
    detail::require(std::isfinite(charge), "particle '" + name + "': charge must be finite");
    for (const auto& line : lines) {
        detail::require(line.omega0 > 0.0, "particle '" + name + "': line frequency must be positive");
        detail::require(line.weight > 0.0, "particle '" + name + "': line weight must be positive");
    }
}

Particle electron()
{
    return {"electron", constants.electron_mass, -constants.elementary_charge, {}};
}

double velocity_from_kinetic_energy(double energy_J, double mass_kg)
{
    detail::require(energy_J >= 0.0, "kinetic energy must be non-negative");
    detail::require(mass_kg > 0.0, "mass must be positive");
    return std::sqrt(2.0 * energy_J / mass_kg);
}

double de_broglie_wavelength(double mass_kg, double velocity_m_s)
{
    detail::require(mass_kg > 0.0, "mass must be positive");
    detail::require(velocity_m_s > 0.0, "de Broglie wavelength undefined for non-positive velocity");
    return constants.planck_h / (mass_kg * velocity_m_s);
}

double recoil_frequency(double mass_kg, double wavelength_m)
{
    detail::require(mass_kg > 0.0, "mass must be positive");
    detail::require(wavelength_m > 0.0, "wavelength must be positive");
    const double k = units::two_pi / wavelength_m;
    return constants.hbar * k * k / (2.0 * mass_kg);
}

double interaction_time(double width_m, double velocity_m_s)
{
    detail::require(width_m >= 0.0, "width must be non-negative");
    detail::require(velocity_m_s > 0.0, "velocity must be positive");
    return width_m / velocity_m_s;
}

}  // namespace kdsim
