#pragma once

#include <string_view>

#include "kdsim/fields.hpp"
#include "kdsim/kinematics.hpp"

namespace kdsim {

enum class PotentialKind { ponderomotive, lightshift };

/// Which field amplitude enters the lightshift. `standing_wave` uses the
/// antinode amplitude E0 = A0 w of the standing wave; `travelling_wave`
/// uses the single-beam amplitude E0 / 2.
enum class FieldConvention { standing_wave, travelling_wave };

enum class EnvelopeShape { rectangular, gaussian };

std::string_view to_string(PotentialKind kind);
std::string_view to_string(FieldConvention convention);
std::string_view to_string(EnvelopeShape shape);

/// Temporal profile f(t) multiplying the potential depth.
///
/// rectangular: f = 1 on [0, duration), 0 elsewhere.
/// gaussian:    f = exp(-2 (t - center)^2 / duration^2), the profile seen by a
///              particle crossing a Gaussian waist w at speed v with
///              duration = w / v. The pulse is considered over [0, 2 center].
struct Envelope {
    EnvelopeShape shape = EnvelopeShape::rectangular;
    double duration = 0.0;  // s
    double center = 0.0;    // s, gaussian only

    static Envelope rectangular(double duration);
    /// Gaussian centred at `span` durations; the window ends at 2 span durations.
    static Envelope gaussian(double duration, double span = 3.0);

    double value(double t) const;
    /// Integral of f over [t0, t1], closed form.
    double area(double t0, double t1) const;
    /// Integral of f over the whole window.
    double total_area() const;
    /// End of the interval in which f is considered non-zero.
    double end_time() const;
};

/// V(x, t) = sign * depth * f(t) * cos^2(k x).
struct PotentialSpec {
    double depth = 0.0;  // J, >= 0
    double k = 0.0;      // rad / m of the light; the potential period is pi / k
    PotentialKind kind = PotentialKind::ponderomotive;
    Envelope envelope;
    int sign = +1;

    void validate() const;
    double period() const;
    double value(double x, double t) const;
    /// -dV/dx = sign * depth * f(t) * k * sin(2 k x).
    double force(double x, double t) const;
    double signed_depth() const { return sign * depth; }
};

/// Ponderomotive depth q^2 I / (2 eps0 c m w^2), the coefficient of cos^2 kx.
double ponderomotive_depth(const LaserBeam& beam, double q, double m);

/// Classical polarisability (q^2/m) / (w0^2 - w^2).
double polarisability(double omega, double omega0, double q, double m, ResonanceGuard guard = {});

/// Signed lightshift coefficient of cos^2 kx for one line,
///   V_L = (1/4) (q^2/m) / (w^2 - w0^2) E0^2 weight = -(1/4) alpha E0^2 weight.
/// Negative below resonance.
double lightshift_depth(const LaserBeam& beam, const ResonanceLine& line, double q, double m,
                        ResonanceGuard guard = {},
                        FieldConvention convention = FieldConvention::standing_wave);

/// Signed sum of lightshift_depth over the particle's lines, using the
/// bound-electron charge and mass. Throws ValidationError on an empty list.
double multiline_lightshift(const LaserBeam& beam, const Particle& particle, ResonanceGuard guard = {},
                            FieldConvention convention = FieldConvention::standing_wave);

/// Squared field amplitude entering the lightshift for `convention`.
double lightshift_field_squared(const LaserBeam& beam, FieldConvention convention);

}  // namespace kdsim
