#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "kdsim/quantum.hpp"

namespace kdsim {

enum class Figure7Regime { diffractive, bragg };

std::string_view to_string(Figure7Regime regime);

/// 10 eV electrons crossing a 1064 nm standing wave with a Gaussian waist.
struct Figure7Preset {
    Figure7Regime regime = Figure7Regime::diffractive;
    double energy = 0.0;      // J
    double wavelength = 0.0;  // m
    double waist = 0.0;       // m
    double intensity = 0.0;   // W/m^2
    double velocity = 0.0;    // m/s
    int initial_order = 0;    // incident mode n (0 diffractive, +1 Bragg)

    double interaction_time() const { return waist / velocity; }
};

Figure7Preset figure7_preset(Figure7Regime regime);

/// One point of a Pendellösung scan: populations after the full pulse.
struct IntensityScanPoint {
    double intensity = 0.0;   // W/m^2
    double pulse_area = 0.0;  // V0 * integral f dt / hbar
    double p_initial = 0.0;   // |c_{+1}|^2
    double p_partner = 0.0;   // |c_{-1}|^2
    double p_other = 0.0;     // everything else
    double norm_drift = 0.0;
};

struct Figure7Options {
    int samples = 200;
    /// Bragg only: number of intensities in the scan covering the first
    /// full Pendellösung oscillation (0 disables the scan).
    int scan_points = 41;
};

struct Figure7Result {
    Figure7Preset preset;
    PotentialSpec potential;
    double epsilon = 0.0;
    EvolutionConfig config;
    EvolutionResult evolution;
    std::vector<SpectrumRow> spectrum;
    std::vector<IntensityScanPoint> scan;
};

Figure7Result figure7_run(Figure7Regime regime, const Figure7Options& options = {});

/// Ponderomotive potential of the preset at the given intensity.
PotentialSpec figure7_potential(const Figure7Preset& preset, double intensity);

struct BesselFit {
    double argument = 0.0;       // best-fit phi in P_{2m} = J_m(phi)^2
    double max_deviation = 0.0;  // over |m| <= max_order
};

/// Least-squares fit of the populations of orders |n/2| <= max_order to the
/// family J_{n/2}(phi)^2.
BesselFit fit_bessel_family(const ModeAmplitudes& state, int max_order = 3);

struct SinSquaredFit {
    double rate = 0.0;   // kappa in sin^2(kappa x + phase)
    double phase = 0.0;
    double r_squared = 0.0;
};

/// Least-squares fit y = sin^2(kappa x + phase).
SinSquaredFit fit_sin_squared(std::span<const double> x, std::span<const double> y);

}  // namespace kdsim
