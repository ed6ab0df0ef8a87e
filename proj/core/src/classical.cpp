#include "kdsim/classical.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "kdsim/constants.hpp"
#include "kdsim/detail/rk4.hpp"
#include "kdsim/error.hpp"

namespace kdsim {

void TrajectoryConfig::validate() const
{
    potential.validate();
    detail::require(mass > 0.0, "trajectory mass must be positive");
    detail::require(velocity > 0.0, "longitudinal velocity must be positive");
    detail::require(std::isfinite(x0) && std::isfinite(vx0), "initial conditions must be finite");
    detail::require(step_fraction > 0.0 && step_fraction <= 0.1, "step fraction must be in (0, 0.1]");
    detail::require(adaptive_tolerance > 0.0, "adaptive tolerance must be positive");
}

double oscillation_frequency(const PotentialSpec& potential, double mass)
{
    return potential.k * std::sqrt(2.0 * potential.depth / mass);
}

std::string_view to_string(PositionSampling sampling)
{
    switch (sampling) {
    case PositionSampling::uniform_random: return "uniform_random";
    case PositionSampling::uniform_grid: return "uniform_grid";
    case PositionSampling::explicit_list: return "explicit_list";
    }
    return "unknown";
}

namespace {

double wrap(double x, double period)
{
    double r = std::fmod(x, period);
    if (r < 0.0) r += period;
    return r;
}

// Potential maxima sit at k x = barrier_phase + m pi.
double barrier_phase(const PotentialSpec& pot) { return pot.sign > 0 ? 0.0 : 0.5 * units::pi; }

long well_index(const PotentialSpec& pot, double x)
{
    return static_cast<long>(std::floor((pot.k * x - barrier_phase(pot)) / units::pi));
}

// Signed distance to the nearest well bottom.
double distance_to_bottom(const PotentialSpec& pot, double x)
{
    const double bottom_phase = barrier_phase(pot) + 0.5 * units::pi;
    const double u = pot.k * x - bottom_phase;
    return (u - units::pi * std::round(u / units::pi)) / pot.k;
}

struct PathRecorder {
    bool enabled;
    std::size_t stride;
    std::vector<PathPoint>& path;

    void operator()(std::size_t step, double t, double x, double vx) const
    {
        if (enabled && step % stride == 0) path.push_back({t, x, vx});
    }
};

constexpr std::size_t max_path_points = 2000;

void leapfrog(const TrajectoryConfig& cfg, TrajectoryResult& out, double x, double vx)
{
    const auto& pot = cfg.potential;
    const double T = pot.envelope.duration;
    const double w = oscillation_frequency(pot, cfg.mass);
    const auto steps = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(T * w / cfg.step_fraction)));
    const double dt = T / static_cast<double>(steps);
    const double m = cfg.mass;
    // Constant potential inside the rectangular window.
    auto accel = [&](double xx) { return pot.sign * pot.depth * pot.k * std::sin(2.0 * pot.k * xx) / m; };
    auto energy = [&](double xx, double vv) {
        const double c = std::cos(pot.k * xx);
        return 0.5 * m * vv * vv + pot.sign * pot.depth * c * c;
    };

    const long well = well_index(pot, x);
    PathRecorder rec{cfg.record_path, std::max<std::size_t>(1, steps / max_path_points), out.path};
    const double e0 = energy(x, vx);
    out.initial_energy = e0;
    double a = accel(x);
    rec(0, 0.0, x, vx);
    for (std::size_t i = 1; i <= steps; ++i) {
        vx += 0.5 * dt * a;
        x += dt * vx;
        a = accel(x);
        vx += 0.5 * dt * a;
        const double e = energy(x, vx);
        out.max_energy_error = std::max(out.max_energy_error, std::abs(e - e0) / pot.depth);
        if (well_index(pot, x) != well) out.stayed_in_well = false;
        rec(i, dt * static_cast<double>(i), x, vx);
    }
    if (cfg.record_path && (out.path.empty() || out.path.back().t != T)) out.path.push_back({T, x, vx});
    out.final_energy = energy(x, vx);
    out.final_x = x;
    out.final_vx = vx;
}

void adaptive_rk4(const TrajectoryConfig& cfg, TrajectoryResult& out, double x, double vx)
{
    const auto& pot = cfg.potential;
    const double T = pot.envelope.end_time();
    const double m = cfg.mass;
    auto rhs = [&](double t, const std::vector<double>& y, std::vector<double>& dy) {
        dy[0] = y[1];
        dy[1] = pot.force(y[0], t) / m;
    };
    const double v_scale = std::abs(vx) + pot.depth * pot.k * pot.envelope.total_area() / m + 1e-300;
    const double w = oscillation_frequency(pot, m);
    auto steps = std::max<std::size_t>(16, static_cast<std::size_t>(std::ceil(T * w / 0.05)));

    auto run = [&](std::size_t n, bool record) {
        std::vector<double> y{x, vx};
        detail::Rk4Stepper<double> stepper(2);
        const double dt = T / static_cast<double>(n);
        const long well = well_index(pot, x);
        bool stayed = true;
        std::vector<PathPoint> path;
        PathRecorder rec{record, std::max<std::size_t>(1, n / max_path_points), path};
        rec(0, 0.0, y[0], y[1]);
        for (std::size_t i = 0; i < n; ++i) {
            stepper.step(rhs, dt * static_cast<double>(i), dt, y);
            if (well_index(pot, y[0]) != well) stayed = false;
            rec(i + 1, dt * static_cast<double>(i + 1), y[0], y[1]);
        }
        return std::tuple{y, stayed, path};
    };

    auto [coarse, stayed_coarse, path_coarse] = run(steps, false);
    for (int halvings = 0;; ++halvings) {
        auto [fine, stayed_fine, path_fine] = run(2 * steps, cfg.record_path);
        if (std::abs(fine[1] - coarse[1]) <= cfg.adaptive_tolerance * v_scale) {
            out.final_x = fine[0];
            out.final_vx = fine[1];
            out.stayed_in_well = stayed_fine;
            out.path = std::move(path_fine);
            break;
        }
        if (halvings == 30) throw NumericalError("step underflow in trajectory integration");
        coarse = std::move(fine);
        steps *= 2;
    }
    auto energy = [&](double xx, double vv, double t) { return 0.5 * m * vv * vv + pot.value(xx, t); };
    out.initial_energy = energy(x, vx, 0.0);
    out.final_energy = energy(out.final_x, out.final_vx, T);
}

}  // namespace

TrajectoryResult integrate_trajectory(const TrajectoryConfig& cfg)
{
    cfg.validate();
    const auto& pot = cfg.potential;
    TrajectoryResult out;
    const double x = wrap(cfg.x0, pot.period());
    const double T = pot.envelope.end_time();

    if (pot.depth == 0.0 || T == 0.0) {
        out.final_x = x + cfg.vx0 * T;
        out.final_vx = cfg.vx0;
        out.initial_energy = out.final_energy = 0.5 * cfg.mass * cfg.vx0 * cfg.vx0;
        out.stayed_in_well = false;
        if (cfg.record_path) out.path = {{0.0, x, cfg.vx0}, {T, out.final_x, cfg.vx0}};
    } else if (pot.envelope.shape == EnvelopeShape::rectangular) {
        leapfrog(cfg, out, x, cfg.vx0);
    } else {
        adaptive_rk4(cfg, out, x, cfg.vx0);
    }
    out.angle = std::atan(out.final_vx / cfg.velocity);
    return out;
}

void EnsembleConfig::validate() const
{
    detail::require(bins >= 2, "histogram needs at least two bins");
    detail::require(angle_range >= 0.0, "angle range must be non-negative");
    if (sampling == PositionSampling::explicit_list)
        detail::require(!x0_list.empty(), "explicit sampling needs a non-empty position list");
    else
        detail::require(trajectories >= 1, "ensemble needs at least one trajectory");
}

std::vector<double> ensemble_positions(const EnsembleConfig& cfg, double period)
{
    std::vector<double> xs;
    switch (cfg.sampling) {
    case PositionSampling::uniform_random: {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_real_distribution<double> dist(0.0, period);
        xs.reserve(cfg.trajectories);
        for (std::size_t i = 0; i < cfg.trajectories; ++i) xs.push_back(dist(rng));
        break;
    }
    case PositionSampling::uniform_grid:
        xs.reserve(cfg.trajectories);
        for (std::size_t i = 0; i < cfg.trajectories; ++i)
            xs.push_back(period * (static_cast<double>(i) + 0.5) / static_cast<double>(cfg.trajectories));
        break;
    case PositionSampling::explicit_list:
        xs = cfg.x0_list;
        break;
    }
    return xs;
}

DeflectionHistogram ensemble_histogram(const EnsembleConfig& cfg, const TrajectoryConfig& traj)
{
    cfg.validate();
    traj.validate();
    double range = cfg.angle_range;
    if (range == 0.0) {
        const double theta_r = rainbow_angle(traj).angle;
        range = theta_r > 0.0 ? 3.0 * theta_r : 1e-6;
    }

    DeflectionHistogram h;
    const auto bins = static_cast<std::size_t>(cfg.bins);
    h.edges.resize(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i)
        h.edges[i] = -range + 2.0 * range * static_cast<double>(i) / static_cast<double>(bins);
    h.counts.assign(bins, 0);

    TrajectoryConfig one = traj;
    one.record_path = false;
    for (double x0 : ensemble_positions(cfg, traj.potential.period())) {
        one.x0 = x0;
        const auto r = integrate_trajectory(one);
        h.max_energy_error = std::max(h.max_energy_error, r.max_energy_error);
        if (r.angle < -range || r.angle > range) {
            ++h.out_of_range;
            continue;
        }
        auto idx = static_cast<std::size_t>(std::floor((r.angle + range) / (2.0 * range) * static_cast<double>(bins)));
        idx = std::min(idx, bins - 1);
        ++h.counts[idx];
        ++h.total;
    }
    return h;
}

RainbowPeaks rainbow_peaks(const DeflectionHistogram& histogram)
{
    RainbowPeaks peaks;
    std::uint64_t best_neg = 0;
    std::uint64_t best_pos = 0;
    for (std::size_t i = 0; i < histogram.bins(); ++i) {
        const double c = histogram.bin_center(i);
        const auto n = histogram.counts[i];
        // Ties go to the outermost bin.
        if (c < 0.0 && n > best_neg) {
            best_neg = n;
            peaks.negative = c;
        }
        if (c > 0.0 && n >= best_pos && n > 0) {
            best_pos = n;
            peaks.positive = c;
        }
    }
    return peaks;
}

RainbowEstimate rainbow_angle(const TrajectoryConfig& traj)
{
    traj.validate();
    const auto& pot = traj.potential;
    const double t_eff = pot.envelope.total_area();
    RainbowEstimate est;
    est.angle = pot.depth * pot.k * t_eff / (traj.mass * traj.velocity);
    est.omega_osc_dt = oscillation_frequency(pot, traj.mass) * t_eff;
    est.impulse_regime = est.omega_osc_dt < 1.0;
    return est;
}

ChannellingReport channelling_check(const TrajectoryConfig& traj, std::size_t trajectories)
{
    traj.validate();
    detail::require(trajectories >= 1, "channelling check needs at least one trajectory");
    const auto& pot = traj.potential;
    ChannellingReport rep;
    rep.periods_completed = oscillation_frequency(pot, traj.mass) * pot.envelope.total_area() / units::two_pi;

    EnsembleConfig ens;
    ens.sampling = PositionSampling::uniform_grid;
    ens.trajectories = trajectories;
    std::size_t channelled = 0;
    double s0 = 0.0;
    double s1 = 0.0;
    TrajectoryConfig one = traj;
    one.record_path = false;
    for (double x0 : ensemble_positions(ens, pot.period())) {
        one.x0 = x0;
        const auto r = integrate_trajectory(one);
        if (pot.depth > 0.0 && r.stayed_in_well) ++channelled;
        const double d0 = distance_to_bottom(pot, x0);
        const double d1 = distance_to_bottom(pot, r.final_x);
        s0 += d0 * d0;
        s1 += d1 * d1;
    }
    const auto n = static_cast<double>(trajectories);
    rep.channelled_fraction = static_cast<double>(channelled) / n;
    rep.initial_spread = std::sqrt(s0 / n);
    rep.final_spread = std::sqrt(s1 / n);
    return rep;
}

}  // namespace kdsim
