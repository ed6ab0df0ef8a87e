#include "kdsim/figure7.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kdsim/constants.hpp"
#include "kdsim/error.hpp"
#include "kdsim/kinematics.hpp"

namespace kdsim {

std::string_view to_string(Figure7Regime regime)
{
    return regime == Figure7Regime::diffractive ? "diffractive" : "bragg";
}

Figure7Preset figure7_preset(Figure7Regime regime)
{
    Figure7Preset p;
    p.regime = regime;
    p.energy = 10.0 * units::electron_volt;
    p.wavelength = 1064.0 * units::nm;
    p.velocity = velocity_from_kinetic_energy(p.energy, constants.electron_mass);
    if (regime == Figure7Regime::diffractive) {
        p.waist = 0.005 * units::cm;
        p.intensity = 1e4 * units::GW_per_m2;
        p.initial_order = 0;
    } else {
        p.waist = 0.5 * units::cm;
        p.intensity = 1e2 * units::GW_per_m2;
        p.initial_order = 1;
    }
    return p;
}

PotentialSpec figure7_potential(const Figure7Preset& preset, double intensity)
{
    LaserBeam beam{preset.wavelength, intensity, preset.waist, 1e-3};
    PotentialSpec pot;
    pot.depth = ponderomotive_depth(beam, constants.elementary_charge, constants.electron_mass);
    pot.k = beam.k();
    pot.kind = PotentialKind::ponderomotive;
    pot.envelope = Envelope::gaussian(preset.interaction_time());
    return pot;
}

namespace {

EvolutionConfig make_config(const PotentialSpec& pot, int samples)
{
    EvolutionConfig cfg;
    cfg.potential = pot;
    cfg.total_time = pot.envelope.end_time();
    cfg.samples = samples;
    return cfg;
}

}  // namespace

Figure7Result figure7_run(Figure7Regime regime, const Figure7Options& options)
{
    Figure7Result out;
    out.preset = figure7_preset(regime);
    out.potential = figure7_potential(out.preset, out.preset.intensity);
    out.epsilon = recoil_frequency(constants.electron_mass, out.preset.wavelength);
    out.config = make_config(out.potential, options.samples);

    const auto lattice = default_lattice(out.potential, out.epsilon);
    out.evolution = evolve(lattice, ModeAmplitudes::single(out.preset.initial_order), out.config);
    out.spectrum = diffraction_spectrum(out.evolution.final_state());

    if (regime == Figure7Regime::bragg && options.scan_points > 1) {
        // |c_{+1}|^2 = cos^2(A / 4) in the two-mode limit; the first full
        // oscillation ends at pulse area A = 4 pi.
        const double area_per_intensity =
            out.potential.depth * out.potential.envelope.total_area() / constants.hbar
            / out.preset.intensity;
        const double i_max = 4.0 * units::pi / area_per_intensity;
        for (int j = 0; j < options.scan_points; ++j) {
            const double intensity = i_max * j / (options.scan_points - 1);
            IntensityScanPoint pt;
            pt.intensity = intensity;
            pt.pulse_area = area_per_intensity * intensity;
            if (intensity == 0.0) {
                pt.p_initial = 1.0;
            } else {
                const auto pot = figure7_potential(out.preset, intensity);
                auto cfg = make_config(pot, 1);
                const auto run = evolve(default_lattice(pot, out.epsilon),
                                        ModeAmplitudes::single(out.preset.initial_order), cfg);
                const auto& fin = run.final_state();
                pt.p_initial = fin.probability(1);
                pt.p_partner = fin.probability(-1);
                pt.p_other = std::max(0.0, fin.norm() - pt.p_initial - pt.p_partner);
                pt.norm_drift = run.norm_drift;
            }
            out.scan.push_back(pt);
        }
    }
    return out;
}

namespace {

template <typename F>
double golden_minimize(F&& f, double a, double b, int iterations = 100)
{
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - r * (b - a);
    double d = a + r * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < iterations; ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

BesselFit fit_bessel_family(const ModeAmplitudes& state, int max_order)
{
    detail::require(max_order >= 0, "max order must be non-negative");
    auto cost = [&](double phi) {
        double s = 0.0;
        for (int m = -max_order; m <= max_order; ++m) {
            const double j = bessel_j(m, phi);
            const double d = state.probability(2 * m) - j * j;
            s += d * d;
        }
        return s;
    };
    // Coarse scan then golden refinement; cost is smooth but multimodal.
    const double phi_max = 4.0 * max_order + 20.0;
    const double step = 0.01;
    double best = 0.0;
    double best_cost = std::numeric_limits<double>::infinity();
    for (double phi = 0.0; phi <= phi_max; phi += step) {
        const double c = cost(phi);
        if (c < best_cost) {
            best_cost = c;
            best = phi;
        }
    }
    const double phi = golden_minimize(cost, std::max(0.0, best - step), best + step);
    BesselFit fit{phi, 0.0};
    for (int m = -max_order; m <= max_order; ++m) {
        const double j = bessel_j(m, phi);
        fit.max_deviation = std::max(fit.max_deviation, std::abs(state.probability(2 * m) - j * j));
    }
    return fit;
}

SinSquaredFit fit_sin_squared(std::span<const double> x, std::span<const double> y)
{
    detail::require(x.size() == y.size() && x.size() >= 3, "sin^2 fit needs at least three points");
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    const double span = *hi - *lo;
    detail::require(span > 0.0, "sin^2 fit needs a non-degenerate abscissa");

    auto sse = [&](double rate, double phase) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double m = std::sin(rate * x[i] + phase);
            const double d = y[i] - m * m;
            s += d * d;
        }
        return s;
    };

    // Grid over up to four oscillations across the data, phase in [0, pi).
    const int rate_steps = 400;
    const int phase_steps = 180;
    const double rate_max = 4.0 * units::pi / span;
    double best_rate = 0.0;
    double best_phase = 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= rate_steps; ++i) {
        const double rate = rate_max * i / rate_steps;
        for (int j = 0; j < phase_steps; ++j) {
            const double phase = units::pi * j / phase_steps;
            const double s = sse(rate, phase);
            if (s < best) {
                best = s;
                best_rate = rate;
                best_phase = phase;
            }
        }
    }
    // Alternate 1-D refinements.
    double dr = rate_max / rate_steps;
    double dp = units::pi / phase_steps;
    for (int pass = 0; pass < 8; ++pass) {
        best_rate = golden_minimize([&](double r) { return sse(r, best_phase); }, best_rate - dr, best_rate + dr);
        best_phase = golden_minimize([&](double p) { return sse(best_rate, p); }, best_phase - dp, best_phase + dp);
        dr *= 0.5;
        dp *= 0.5;
    }

    double mean = 0.0;
    for (double v : y) mean += v;
    mean /= static_cast<double>(y.size());
    double ss_tot = 0.0;
    for (double v : y) ss_tot += (v - mean) * (v - mean);
    const double ss_res = sse(best_rate, best_phase);
    return {best_rate, best_phase, ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0};
}

}  // namespace kdsim
