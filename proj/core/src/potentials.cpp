#include "kdsim/potentials.hpp"

#include <algorithm>
#include <cmath>

#include "kdsim/constants.hpp"
#include "kdsim/error.hpp"

namespace kdsim {

std::string_view to_string(PotentialKind kind)
{
    return kind == PotentialKind::ponderomotive ? "ponderomotive" : "lightshift";
}

std::string_view to_string(FieldConvention convention)
{
    return convention == FieldConvention::standing_wave ? "standing_wave" : "travelling_wave";
}

std::string_view to_string(EnvelopeShape shape)
{
    return shape == EnvelopeShape::rectangular ? "rectangular" : "gaussian";
}

Envelope Envelope::rectangular(double duration)
{
    detail::require(duration >= 0.0, "envelope duration must be non-negative");
    return {EnvelopeShape::rectangular, duration, 0.5 * duration};
}

Envelope Envelope::gaussian(double duration, double span)
{
    detail::require(duration > 0.0, "gaussian envelope duration must be positive");
    detail::require(span > 0.0, "gaussian envelope span must be positive");
    return {EnvelopeShape::gaussian, duration, span * duration};
}

double Envelope::value(double t) const
{
    if (shape == EnvelopeShape::rectangular) return (t >= 0.0 && t < duration) ? 1.0 : 0.0;
    const double s = (t - center) / duration;
    return std::exp(-2.0 * s * s);
}

double Envelope::area(double t0, double t1) const
{
    if (shape == EnvelopeShape::rectangular) {
        const double a = std::clamp(t0, 0.0, duration);
        const double b = std::clamp(t1, 0.0, duration);
        return b - a;
    }
    // integral of exp(-2 s^2) dt with s = (t - c) / d
    const double scale = duration * std::sqrt(units::pi / 8.0);
    const double r2 = std::sqrt(2.0);
    return scale * (std::erf(r2 * (t1 - center) / duration) - std::erf(r2 * (t0 - center) / duration));
}

double Envelope::total_area() const { return area(0.0, end_time()); }

double Envelope::end_time() const
{
    return shape == EnvelopeShape::rectangular ? duration : 2.0 * center;
}

void PotentialSpec::validate() const
{
    detail::require(std::isfinite(depth) && depth >= 0.0, "potential depth must be non-negative");
    detail::require(k > 0.0, "potential wavenumber must be positive");
    detail::require(sign == 1 || sign == -1, "potential sign must be +1 or -1");
    detail::require(envelope.duration >= 0.0, "envelope duration must be non-negative");
}

double PotentialSpec::period() const { return units::pi / k; }

double PotentialSpec::value(double x, double t) const
{
    const double c = std::cos(k * x);
    return sign * depth * envelope.value(t) * c * c;
}

double PotentialSpec::force(double x, double t) const
{
    return sign * depth * envelope.value(t) * k * std::sin(2.0 * k * x);
}

double ponderomotive_depth(const LaserBeam& beam, double q, double m)
{
    beam.validate();
    detail::require(m > 0.0, "mass must be positive");
    const double w = beam.omega();
    return q * q * beam.intensity
           / (2.0 * constants.vacuum_permittivity * constants.speed_of_light * m * w * w);
}

double polarisability(double omega, double omega0, double q, double m, ResonanceGuard guard)
{
    detail::require(m > 0.0, "mass must be positive");
    guard.check(omega, omega0);
    return q * q / m / (omega0 * omega0 - omega * omega);
}

double lightshift_field_squared(const LaserBeam& beam, FieldConvention convention)
{
    // (A0 w)^2 = 2 I / (eps0 c)
    const double e0_squared =
        2.0 * beam.intensity / (constants.vacuum_permittivity * constants.speed_of_light);
    return convention == FieldConvention::standing_wave ? e0_squared : 0.25 * e0_squared;
}

double lightshift_depth(const LaserBeam& beam, const ResonanceLine& line, double q, double m,
                        ResonanceGuard guard, FieldConvention convention)
{
    beam.validate();
    detail::require(m > 0.0, "mass must be positive");
    detail::require(line.omega0 >= 0.0, "line frequency must be non-negative");
    detail::require(line.weight > 0.0, "line weight must be positive");
    const double w = beam.omega();
    guard.check(w, line.omega0);
    return 0.25 * (q * q / m) / (w * w - line.omega0 * line.omega0)
           * lightshift_field_squared(beam, convention) * line.weight;
}

double multiline_lightshift(const LaserBeam& beam, const Particle& particle, ResonanceGuard guard,
                            FieldConvention convention)
{
    if (particle.lines.empty())
        throw ValidationError("particle '" + particle.name
                              + "' has no resonance lines; use the ponderomotive depth instead");
    double sum = 0.0;
    for (const auto& line : particle.lines)
        sum += lightshift_depth(beam, line, constants.elementary_charge, constants.electron_mass,
                                guard, convention);
    return sum;
}

}  // namespace kdsim
