#include "kdsim/fields.hpp"

#include <cmath>
#include <string>

#include "kdsim/constants.hpp"
#include "kdsim/csv.hpp"
#include "kdsim/error.hpp"

namespace kdsim {

StandingWave StandingWave::from_wavelength(double wavelength_m, double A0)
{
    detail::require(wavelength_m > 0.0, "wavelength must be positive");
    detail::require(A0 >= 0.0, "vector-potential amplitude must be non-negative");
    const double k = units::two_pi / wavelength_m;
    return {A0, k, constants.speed_of_light * k};
}

void LaserBeam::validate() const
{
    detail::require(wavelength > 0.0, "beam wavelength must be positive");
    detail::require(intensity >= 0.0, "beam intensity must be non-negative");
    detail::require(waist > 0.0, "beam waist must be positive");
    detail::require(height > 0.0, "beam height must be positive");
}

double LaserBeam::k() const { return units::two_pi / wavelength; }

double LaserBeam::omega() const { return constants.speed_of_light * k(); }

StandingWave LaserBeam::standing_wave() const
{
    return StandingWave::from_wavelength(wavelength, amplitude_from_intensity(intensity, omega()));
}

FieldSample fields_at(const StandingWave& sw, double x, double t)
{
    return {sw.A0 * sw.omega * std::cos(sw.k * x) * std::cos(sw.omega * t),
            sw.A0 * sw.k * std::sin(sw.k * x) * std::sin(sw.omega * t)};
}

double amplitude_from_intensity(double intensity, double omega)
{
    detail::require(intensity >= 0.0, "intensity must be non-negative");
    detail::require(omega > 0.0, "angular frequency must be positive");
    return std::sqrt(2.0 * intensity
                     / (constants.vacuum_permittivity * constants.speed_of_light * omega * omega));
}

void ResonanceGuard::check(double omega, double omega0) const
{
    if (omega0 == 0.0) return;
    const double gap = std::abs(omega * omega - omega0 * omega0) / (omega0 * omega0);
    if (gap < relative_gap)
        throw ResonanceError("on-resonance singular: relative gap " + format_number(gap)
                             + " is inside the resonance guard");
}

double free_charge_velocity(const StandingWave& sw, double q, double m, double x, double t)
{
    return q * sw.A0 / m * std::cos(sw.k * x) * std::sin(sw.omega * t);
}

double free_electron_velocity(const StandingWave& sw, double x, double t)
{
    return free_charge_velocity(sw, constants.elementary_charge, constants.electron_mass, x, t);
}

double bound_charge_velocity(const StandingWave& sw, double omega0, double q, double m, double x,
                             double t, ResonanceGuard guard)
{
    guard.check(sw.omega, omega0);
    const double w = sw.omega;
    const double drive = q * sw.A0 * w / m;
    return drive * (w * std::sin(w * t) - omega0 * std::sin(omega0 * t)) / (w * w - omega0 * omega0)
           * std::cos(sw.k * x);
}

double bound_charge_driven_velocity(const StandingWave& sw, double omega0, double q, double m,
                                    double x, double t, ResonanceGuard guard)
{
    guard.check(sw.omega, omega0);
    const double w = sw.omega;
    return q * sw.A0 * w / m * w * std::sin(w * t) / (w * w - omega0 * omega0) * std::cos(sw.k * x);
}

}  // namespace kdsim
