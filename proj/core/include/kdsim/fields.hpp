#pragma once

// Standing-wave fields and the classical response of free and bound charges.
//
// Sign conventions follow the vector potential A_z = A0 cos kx sin wt with
// E_z = +dA_z/dt and B_y = -dA_z/dx. The x component of the magnetic force
// is then q v_z B_y (see lorentz_force_x); the two sign choices compensate
// so the cycle-averaged force equals -dV/dx of the corresponding potential.

namespace kdsim {

struct StandingWave {
    double A0 = 0.0;     // V s / m
    double k = 0.0;      // rad / m
    double omega = 0.0;  // rad / s

    /// Builds a vacuum standing wave; omega = c k.
    static StandingWave from_wavelength(double wavelength_m, double A0);
};

struct LaserBeam {
    double wavelength = 0.0;  // m
    double intensity = 0.0;   // W / m^2
    double waist = 0.0;       // m, width along the particle path
    double height = 1e-3;     // m

    void validate() const;
    double k() const;
    double omega() const;
    StandingWave standing_wave() const;
};

struct FieldSample {
    double E_z = 0.0;  // V / m
    double B_y = 0.0;  // T
};

FieldSample fields_at(const StandingWave& sw, double x, double t);

/// A0 = sqrt(2 I / (eps0 c w^2)).
double amplitude_from_intensity(double intensity, double omega);

/// Relative gap |w^2 - w0^2| / w0^2 below which the undamped oscillator is
/// considered singular.
struct ResonanceGuard {
    double relative_gap = 1e-6;

    /// Throws ResonanceError when omega is inside the guard band of omega0.
    void check(double omega, double omega0) const;
};

/// Driven velocity of a free charge, (q A0 / m) cos kx sin wt.
double free_electron_velocity(const StandingWave& sw, double x, double t);
double free_charge_velocity(const StandingWave& sw, double q, double m, double x, double t);

/// Velocity of a charge on a spring released at rest at t = 0:
///   v_z = (q E0 / m) (w sin wt - w0 sin w0 t) / (w^2 - w0^2) cos kx,  E0 = A0 w.
double bound_charge_velocity(const StandingWave& sw, double omega0, double q, double m, double x,
                             double t, ResonanceGuard guard = {});

/// Steady-state (driven) part of bound_charge_velocity, without the transient at w0.
double bound_charge_driven_velocity(const StandingWave& sw, double omega0, double q, double m,
                                    double x, double t, ResonanceGuard guard = {});

inline double lorentz_force_x(double q, double v_z, double B_y) { return q * v_z * B_y; }

}  // namespace kdsim
