#pragma once

namespace kdsim {

/// Three-grating Mach-Zehnder used as a rotation sensor.
struct SagnacConfig {
    double k_g = 0.0;        // rad/m, reciprocal grating vector length
    double L = 0.0;          // m, grating separation
    double v = 0.0;          // m/s
    double contrast = 1.0;   // fringe contrast in (0, 1]
    double count_rate = 0.0; // detected particles per second

    void validate() const;
};

/// Phase per unit rotation rate, k_g L^2 / v (s).
double sagnac_resolution(const SagnacConfig& cfg);

struct SagnacSensitivity {
    double rad_per_s_sqrt_hz = 0.0;  // (R C sqrt(n))^-1
    double earth_rate_units = 0.0;   // the same in units of the earth rotation rate, s^{1/2}
};

SagnacSensitivity sagnac_sensitivity(const SagnacConfig& cfg);

/// Largest transit time between gratings for a particle of density rho and
/// linear size s to keep two rulings inside its diffraction cone:
/// tau = m s^2 / h with m = rho s^3.
double molecule_transit_bound(double density, double size);

/// Inverse of molecule_transit_bound: s = (tau h / rho)^{1/5}.
double size_for_transit(double density, double transit_time);

}  // namespace kdsim
