#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "kdsim/potentials.hpp"

namespace kdsim {

/// One particle crossing the standing wave. The transverse coordinate x is
/// along the light's k vector; `velocity` is the longitudinal speed used to
/// convert the exit transverse velocity into a far-field angle.
struct TrajectoryConfig {
    PotentialSpec potential;
    double mass = 0.0;      // kg
    double velocity = 0.0;  // m/s
    double x0 = 0.0;        // m, taken modulo the potential period
    double vx0 = 0.0;       // m/s
    bool record_path = false;
    /// Leapfrog step as a fraction of 1/omega_osc.
    double step_fraction = 1e-4;
    /// Gaussian envelopes: RK4 endpoint tolerance relative to the velocity scale.
    double adaptive_tolerance = 1e-10;

    void validate() const;
};

struct PathPoint {
    double t = 0.0;
    double x = 0.0;
    double vx = 0.0;
};

struct TrajectoryResult {
    double final_x = 0.0;
    double final_vx = 0.0;
    double angle = 0.0;  // atan(vx / v)
    double initial_energy = 0.0;  // 1/2 m vx^2 + V at t = 0+
    double final_energy = 0.0;
    /// max |E(t) - E(0)| / depth over the run; rectangular envelope only.
    double max_energy_error = 0.0;
    /// True while the particle never crossed a potential maximum.
    bool stayed_in_well = true;
    std::vector<PathPoint> path;
};

/// Small-oscillation angular frequency k sqrt(2 V0 / m) about a well bottom.
double oscillation_frequency(const PotentialSpec& potential, double mass);

TrajectoryResult integrate_trajectory(const TrajectoryConfig& cfg);

enum class PositionSampling {
    uniform_random,  // seeded uniform draws over one period
    uniform_grid,    // midpoints of N equal cells over one period
    explicit_list,
};

std::string_view to_string(PositionSampling sampling);

struct EnsembleConfig {
    std::size_t trajectories = 10000;
    PositionSampling sampling = PositionSampling::uniform_random;
    std::vector<double> x0_list;  // explicit_list only
    std::uint64_t seed = 1;
    int bins = 201;
    /// Half-width of the histogram; 0 selects 3 theta_r (or 1e-6 rad when theta_r = 0).
    double angle_range = 0.0;

    void validate() const;
};

struct DeflectionHistogram {
    std::vector<double> edges;          // bins + 1, strictly increasing
    std::vector<std::uint64_t> counts;  // per bin
    std::uint64_t total = 0;            // sum of counts
    std::uint64_t out_of_range = 0;     // angles beyond the outer edges
    double max_energy_error = 0.0;

    std::size_t bins() const { return counts.size(); }
    double bin_center(std::size_t i) const { return 0.5 * (edges[i] + edges[i + 1]); }
    double bin_width() const { return edges[1] - edges[0]; }
};

/// Initial positions of the ensemble, in [0, period) for the sampled modes.
std::vector<double> ensemble_positions(const EnsembleConfig& cfg, double period);

DeflectionHistogram ensemble_histogram(const EnsembleConfig& cfg, const TrajectoryConfig& traj);

struct RainbowPeaks {
    double negative = 0.0;  // bin centre of the outermost peak below zero
    double positive = 0.0;
};

/// Outermost local maxima on each side of zero (largest count among bins
/// beyond half of the populated range).
RainbowPeaks rainbow_peaks(const DeflectionHistogram& histogram);

struct RainbowEstimate {
    double angle = 0.0;             // V0 k T_eff / (m v)
    double omega_osc_dt = 0.0;      // omega_osc * T_eff
    bool impulse_regime = true;     // omega_osc * T_eff < 1
};

/// Impulse approximation: the largest transverse kick V0 k T_eff is
/// delivered at the inflection points of cos^2 kx. T_eff is the envelope area.
RainbowEstimate rainbow_angle(const TrajectoryConfig& traj);

struct ChannellingReport {
    double channelled_fraction = 0.0;
    double periods_completed = 0.0;  // omega_osc * T_eff / 2 pi
    double initial_spread = 0.0;     // rms distance from the nearest well bottom
    double final_spread = 0.0;
};

/// Runs a uniform-grid ensemble of `trajectories` starting positions.
ChannellingReport channelling_check(const TrajectoryConfig& traj, std::size_t trajectories = 1000);

}  // namespace kdsim
