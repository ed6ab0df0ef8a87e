// Acceptance checks: one PASS/FAIL line per criterion.
//
//   acceptance            run all criteria
//   acceptance --only N   run criterion N

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "kdsim/catalogue.hpp"
#include "kdsim/classical.hpp"
#include "kdsim/constants.hpp"
#include "kdsim/figure7.hpp"
#include "kdsim/interferometry.hpp"
#include "kdsim/kinematics.hpp"
#include "kdsim/quantum.hpp"
#include "kdsim/regime.hpp"
#include "kdsim/tables.hpp"
#include "oracles.hpp"

using namespace kdsim;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...)
{
    char buf[1024];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// Rectangular pulse of depth hbar * U (U in rad/s) lasting t.
EvolutionConfig rect(double U, double t, int samples)
{
    EvolutionConfig cfg;
    cfg.potential.depth = constants.hbar * U;
    cfg.potential.k = 1.0;
    cfg.potential.kind = PotentialKind::lightshift;
    cfg.potential.envelope = Envelope::rectangular(t);
    cfg.total_time = t;
    cfg.samples = samples;
    return cfg;
}

Outcome unitarity_and_parity()
{
    double drift = 0.0, wrong_parity = 0.0;
    for (auto regime : {Figure7Regime::diffractive, Figure7Regime::bragg}) {
        const auto run = figure7_run(regime);
        const int parity = std::abs(run.preset.initial_order) % 2;
        for (const auto& s : run.evolution.samples) {
            drift = std::max(drift, std::abs(s.norm() - 1.0));
            for (int n = s.n_min; n <= s.n_max(); ++n)
                if (std::abs(n) % 2 != parity) wrong_parity = std::max(wrong_parity, std::abs(s.at(n)));
        }
        for (const auto& p : run.scan) drift = std::max(drift, p.norm_drift);
    }
    return {drift <= 1e-8 && wrong_parity == 0.0,
            fmt("max norm drift %.3e (<= 1e-8), max opposite-parity amplitude %.3e (== 0)", drift, wrong_parity)};
}

Outcome bessel_oracle()
{
    auto cfg = rect(1.0, 20.0, 400);
    cfg.norm_tolerance = 1e-12;
    cfg.boundary_tolerance = 1e-14;
    const auto r = evolve(ModeLattice::symmetric(16, 0.0), ModeAmplitudes::single(0), cfg);
    double worst = 0.0;
    for (const auto& s : r.samples) {
        const double phi = s.time / 2.0;  // V0 t / 2hbar
        for (int m = -10; m <= 10; ++m) {
            const double j = oracle::bessel_series(m, phi);
            worst = std::max(worst, std::abs(s.probability(2 * m) - j * j));
        }
    }
    return {worst <= 1e-6, fmt("max |P_n - J_{n/2}(V0 t/2hbar)^2| = %.3e over |n/2| <= 10, V0 t/hbar <= 20 (<= 1e-6)", worst)};
}

Outcome pendelloesung_oracle()
{
    const double U = 1.0, eps = 100.0;
    const double t = 4.0 * oracle::pi / U;
    auto cfg = rect(U, t, 400);
    cfg.norm_tolerance = 1e-12;
    const auto r = evolve(ModeLattice::symmetric(9, eps), ModeAmplitudes::single(1), cfg);
    double dev = 0.0, leak = 0.0;
    for (const auto& s : r.samples) {
        const double a = U * s.time / 4.0;
        dev = std::max(dev, std::abs(s.probability(1) - std::cos(a) * std::cos(a)));
        dev = std::max(dev, std::abs(s.probability(-1) - std::sin(a) * std::sin(a)));
        leak = std::max(leak, 1.0 - s.probability(1) - s.probability(-1));
    }
    return {dev <= 1e-3 && leak < 1e-3,
            fmt("max population deviation %.3e (<= 1e-3), max leakage %.3e (< 1e-3) over one oscillation", dev, leak)};
}

Outcome figure7_properties()
{
    const auto diff = figure7_run(Figure7Regime::diffractive);
    const auto fit = fit_bessel_family(diff.evolution.final_state(), 3);

    const auto bragg = figure7_run(Figure7Regime::bragg);
    std::vector<double> x, y;
    double leak = 0.0;
    for (const auto& p : bragg.scan) {
        x.push_back(p.pulse_area);
        y.push_back(p.p_partner);
        leak = std::max(leak, p.p_other);
    }
    const auto& fin = bragg.evolution.final_state();
    leak = std::max(leak, 1.0 - fin.probability(1) - fin.probability(-1));
    const auto sin2 = fit_sin_squared(x, y);
    return {fit.max_deviation <= 0.05 && sin2.r_squared >= 0.98 && leak < 0.05,
            fmt("diffractive Bessel-fit deviation %.4f (<= 0.05); bragg sin^2 R^2 %.7f (>= 0.98), leakage %.3e (< 0.05)",
                fit.max_deviation, sin2.r_squared, leak)};
}

Outcome recoil_column()
{
    struct Entry { const char* species; double wavelength_nm; double published_hz; };
    const Entry entries[] = {{"Na", 589, 24e3}, {"Ar*", 811, 7.5e3}, {"Ne*", 640, 24e3}, {"Li", 671, 37e3},
                             {"Rb", 780, 3.5e3}, {"Cs", 852, 12e3}, {"Cr", 425, 20e3}};
    bool pass = true;
    std::string detail;
    for (const auto& e : entries) {
        const double eps = angular_to_cyclic(
            recoil_frequency(find_builtin_particle(e.species).mass, e.wavelength_nm * units::nm));
        const double ratio = eps / e.published_hz;
        const bool ok = std::abs(ratio - 1.0) <= 0.15;
        pass = pass && ok;
        detail += fmt("%s%s %.3g kHz (x%.2f)%s", detail.empty() ? "" : ", ", e.species, eps / 1e3, ratio,
                      ok ? "" : " out");
    }
    return {pass, detail + " (within 15%)"};
}

Outcome regime_labels()
{
    bool pass = true;
    std::string detail;
    for (const auto& p : survey_points()) {
        const auto got = classify_regime(p.point());
        pass = pass && got == p.expected;
        detail += fmt("%s%s=%s", detail.empty() ? "" : " ", p.id.c_str(), std::string(to_string(got)).c_str());
        if (got != p.expected) detail += fmt("(expected %s)", std::string(to_string(p.expected)).c_str());
    }
    return {pass, detail};
}

Outcome electron_table()
{
    bool pass = true;
    std::string detail;
    for (const auto& r : reproduce_table3()) {
        const bool ok = r.ratio >= 1.0 / 3.0 && r.ratio <= 3.0;
        pass = pass && ok;
        detail += fmt("%s%s %s %.3e (x%.2f)", detail.empty() ? "" : ", ", r.row.c_str(), r.quantity.c_str(),
                      r.computed, r.ratio);
    }
    return {pass, detail + " (within factor 3)"};
}

Outcome rainbow()
{
    TrajectoryConfig tc;
    tc.mass = find_builtin_particle("Na").mass;
    tc.velocity = 1000.0;
    tc.potential.k = 2.0 * oracle::pi / 589e-9;
    tc.potential.kind = PotentialKind::lightshift;
    const double dt = 50e-6 / tc.velocity;
    tc.potential.envelope = Envelope::rectangular(dt);
    const double w = 0.3 / dt;
    tc.potential.depth = 0.5 * tc.mass * (w / tc.potential.k) * (w / tc.potential.k);

    const double theta_r = rainbow_angle(tc).angle;
    EnsembleConfig ens;
    ens.trajectories = 100000;
    ens.sampling = PositionSampling::uniform_grid;
    ens.bins = 201;
    ens.angle_range = 3.0 * theta_r;
    const auto h = ensemble_histogram(ens, tc);
    const auto peaks = rainbow_peaks(h);

    std::uint64_t asym = 0;
    for (std::size_t i = 0; i < h.bins(); ++i) {
        const auto a = h.counts[i], b = h.counts[h.bins() - 1 - i];
        asym += a > b ? a - b : b - a;
    }
    const double asym_frac = static_cast<double>(asym) / (2.0 * static_cast<double>(h.total));
    const double bin = h.bin_width();
    const bool pass = std::abs(peaks.positive - theta_r) <= bin && std::abs(peaks.negative + theta_r) <= bin
                      && asym_frac <= 1e-3 && h.max_energy_error <= 1e-8 && h.out_of_range == 0;
    return {pass, fmt("peaks %+.4e / %+.4e rad vs theta_r %.4e (bin %.2e), asymmetry %.1e (<= 1e-3), "
                      "energy error %.2e (<= 1e-8)",
                      peaks.negative, peaks.positive, theta_r, bin, asym_frac, h.max_energy_error)};
}

Outcome sagnac_scaling()
{
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> l(-1.0, 1.0), c(0.01, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const SagnacConfig cfg{1e7 * std::pow(10.0, l(rng)), std::pow(10.0, l(rng)), 1e3 * std::pow(10.0, l(rng)),
                               c(rng), 1e4 * std::pow(10.0, l(rng))};
        const double R = cfg.k_g * cfg.L * cfg.L / cfg.v;
        const double S = 1.0 / (R * cfg.contrast * std::sqrt(cfg.count_rate));
        const auto s = sagnac_sensitivity(cfg);
        worst = std::max({worst, std::abs(sagnac_resolution(cfg) / R - 1.0), std::abs(s.rad_per_s_sqrt_hz / S - 1.0),
                          std::abs(s.earth_rate_units * 7e-5 / S - 1.0)});
    }
    return {worst <= 1e-14, fmt("max relative deviation from k_g L^2/v and (R C sqrt n)^-1 / 7e-5: %.1e", worst)};
}

// Largest |c_{-1}|^2 reached during a rectangular pulse, incident on n = +1 with offset delta.
double max_partner(double U, double eps, double delta, double t)
{
    auto cfg = rect(U, t, 400);
    cfg.norm_tolerance = 1e-11;
    const auto r = evolve(ModeLattice::symmetric(9, eps, delta), ModeAmplitudes::single(1), cfg);
    double best = 0.0;
    for (const auto& s : r.samples) best = std::max(best, s.probability(-1));
    return best;
}

Outcome off_bragg()
{
    const double eps = 1.0, delta = 0.1, U = 1.0;
    const double t0 = 2.6 / eps;
    std::vector<double> literal, fixed_area;
    for (int i = 0; i <= 10; ++i) {
        const double t = t0 * std::pow(10.0, i / 10.0);
        literal.push_back(max_partner(U, eps, delta, t));
        fixed_area.push_back(max_partner(2.0 * oracle::pi / t, eps, delta, t));
    }
    auto decreasing = [](const std::vector<double>& v) {
        for (std::size_t i = 1; i < v.size(); ++i)
            if (!(v[i] < v[i - 1])) return false;
        return true;
    };
    std::printf("info: off-Bragg at fixed pulse area 2pi: max|c_-1|^2 %.4e -> %.4e over the decade, %s\n",
                fixed_area.front(), fixed_area.back(),
                decreasing(fixed_area) ? "strictly decreasing" : "not monotone");
    return {decreasing(literal),
            fmt("fixed V0 (U = eps), delta = 0.1: max|c_-1|^2 %.4e at eps dt = %.2f -> %.4e at eps dt = %.1f, %s",
                literal.front(), t0 * eps, literal.back(), 10.0 * t0 * eps,
                decreasing(literal) ? "strictly decreasing" : "not decreasing")};
}

Outcome molecule_bound()
{
    const double s = size_for_transit(2000.0, 1e-5);
    const double atoms = std::pow(s / 0.3e-9, 3);
    return {s >= 3e-9 && s <= 8e-9, fmt("size %.4e m in [3, 8] nm, about %.0f atoms at 0.3 nm spacing", s, atoms)};
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> check;
};

}  // namespace

int main(int argc, char** argv)
{
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--only N]\n", argv[0]);
            return 2;
        }
    }

    const std::vector<Criterion> criteria{
        {1, "unitarity and parity", unitarity_and_parity},
        {2, "Bessel oracle", bessel_oracle},
        {3, "Pendelloesung oracle", pendelloesung_oracle},
        {4, "standing-wave electron presets", figure7_properties},
        {5, "survey recoil column", recoil_column},
        {6, "regime map labels", regime_labels},
        {7, "electron proposal table", electron_table},
        {8, "rainbow scattering", rainbow},
        {9, "Sagnac scaling", sagnac_scaling},
        {10, "off-Bragg suppression", off_bragg},
        {11, "molecule size bound", molecule_bound},
    };

    int failed = 0, ran = 0;
    for (const auto& c : criteria) {
        if (only && c.id != only) continue;
        ++ran;
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("criterion %2d %s %s: %s\n", c.id, o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    if (ran == 0) {
        std::fprintf(stderr, "no criterion %d\n", only);
        return 2;
    }
    return failed ? 1 : 0;
}
