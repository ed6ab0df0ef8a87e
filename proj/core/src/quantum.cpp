#include "kdsim/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kdsim/constants.hpp"
#include "kdsim/detail/rk4.hpp"
#include "kdsim/csv.hpp"
#include "kdsim/error.hpp"

namespace kdsim {

ModeLattice ModeLattice::symmetric(int half_width, double epsilon, double offset)
{
    detail::require(half_width > 0, "lattice half-width must be positive");
    return {-half_width, half_width, offset, epsilon};
}

void ModeLattice::validate() const
{
    detail::require(n_min < 0 && n_max > 0, "lattice must satisfy n_min < 0 < n_max");
    detail::require(epsilon >= 0.0 && std::isfinite(epsilon), "recoil frequency must be non-negative");
    detail::require(std::isfinite(offset), "lattice offset must be finite");
}

double ModeLattice::diagonal(int n) const
{
    const double p = n + offset;
    return epsilon * p * p;
}

ModeLattice ModeLattice::widened(int by) const
{
    ModeLattice out = *this;
    out.n_min -= by;
    out.n_max += by;
    return out;
}

ModeLattice default_lattice(const PotentialSpec& potential, double epsilon, double offset)
{
    const double strength = potential.depth * potential.envelope.total_area() / constants.hbar;
    const int half = std::max(8, static_cast<int>(std::ceil(4.0 * strength)));
    return ModeLattice::symmetric(half, epsilon, offset);
}

ModeAmplitudes ModeAmplitudes::single(int n, double time)
{
    return {n, {Complex(1.0, 0.0)}, time};
}

Complex ModeAmplitudes::at(int n) const
{
    if (n < n_min || n > n_max()) return {};
    return c[static_cast<std::size_t>(n - n_min)];
}

double ModeAmplitudes::norm() const
{
    double s = 0.0;
    for (const auto& a : c) s += std::norm(a);
    return s;
}

void EvolutionConfig::validate() const
{
    potential.validate();
    detail::require(total_time > 0.0, "total time must be positive");
    detail::require(max_step >= 0.0, "max step must be non-negative");
    detail::require(norm_tolerance > 0.0, "norm tolerance must be positive");
    detail::require(boundary_tolerance > 0.0, "boundary tolerance must be positive");
    detail::require(samples >= 1, "at least one sample is required");
    detail::require(max_widenings >= 0 && max_halvings >= 0, "retry limits must be non-negative");
    detail::require(max_steps >= 1, "step budget must be positive");
    detail::require(amplitude_tolerance > 0.0, "amplitude tolerance must be positive");
}

namespace {

struct RunOutcome {
    std::vector<ModeAmplitudes> samples;
    double drift = 0.0;
    double boundary = 0.0;
    std::size_t steps = 0;
};

std::vector<double> stop_times(const EvolutionConfig& cfg)
{
    std::vector<double> stops;
    for (int j = 0; j <= cfg.samples; ++j) stops.push_back(cfg.total_time * j / cfg.samples);
    const auto& env = cfg.potential.envelope;
    if (env.shape == EnvelopeShape::rectangular && env.duration > 0.0 && env.duration < cfg.total_time)
        stops.push_back(env.duration);
    std::sort(stops.begin(), stops.end());
    stops.erase(std::unique(stops.begin(), stops.end()), stops.end());
    return stops;
}

bool is_sample_time(const EvolutionConfig& cfg, double t, int& next_sample)
{
    if (next_sample > cfg.samples) return false;
    if (t == cfg.total_time * next_sample / cfg.samples) {
        ++next_sample;
        return true;
    }
    return false;
}

RunOutcome run_fixed_step(const ModeLattice& lattice, const std::vector<Complex>& start,
                          const EvolutionConfig& cfg, double h)
{
    const std::size_t size = lattice.size();
    std::vector<double> diag(size);
    for (std::size_t i = 0; i < size; ++i) diag[i] = lattice.diagonal(lattice.n_min + static_cast<int>(i));

    const auto& pot = cfg.potential;
    const double coupling = pot.sign * pot.depth / (4.0 * constants.hbar);
    const double uniform = pot.sign * pot.depth / (2.0 * constants.hbar);

    // A rectangular envelope is constant on each segment between stops; its
    // value is taken at the segment midpoint so the closing RK4 stage does not
    // see the switch-off.
    const bool piecewise = pot.envelope.shape == EnvelopeShape::rectangular;
    double segment_f = 0.0;
    auto rhs = [&](double t, const std::vector<Complex>& y, std::vector<Complex>& dy) {
        const double g = coupling * (piecewise ? segment_f : pot.envelope.value(t));
        const std::size_t n = y.size();
        for (std::size_t i = 0; i < n; ++i) {
            Complex neighbours{};
            if (i >= 2) neighbours += y[i - 2];
            if (i + 2 < n) neighbours += y[i + 2];
            const Complex h_y = diag[i] * y[i] + g * neighbours;
            dy[i] = Complex(h_y.imag(), -h_y.real());  // -i * h_y
        }
    };

    RunOutcome out;
    std::vector<Complex> y = start;
    const double norm0 = [&] {
        double s = 0.0;
        for (const auto& a : y) s += std::norm(a);
        return s;
    }();

    auto record = [&](double t) {
        ModeAmplitudes state{lattice.n_min, y, t};
        if (cfg.include_diagonal_offset) {
            const Complex phase = std::polar(1.0, -uniform * pot.envelope.area(0.0, t));
            for (auto& a : state.c) a *= phase;
        }
        double n = 0.0;
        for (const auto& a : y) n += std::norm(a);
        out.drift = std::max(out.drift, std::abs(n - norm0));
        const double edge = std::max({std::norm(y[0]), std::norm(y[1]), std::norm(y[size - 2]),
                                      std::norm(y[size - 1])});
        out.boundary = std::max(out.boundary, edge);
        out.samples.push_back(std::move(state));
    };

    detail::Rk4Stepper<Complex> stepper(size);
    const auto stops = stop_times(cfg);
    int next_sample = 0;
    if (is_sample_time(cfg, stops.front(), next_sample)) record(stops.front());
    for (std::size_t s = 1; s < stops.size(); ++s) {
        const double a = stops[s - 1];
        const double b = stops[s];
        const auto substeps = static_cast<std::size_t>(std::ceil((b - a) / h));
        const double dt = (b - a) / static_cast<double>(substeps);
        segment_f = pot.envelope.value(0.5 * (a + b));
        for (std::size_t j = 0; j < substeps; ++j) stepper.step(rhs, a + dt * static_cast<double>(j), dt, y);
        out.steps += substeps;
        if (is_sample_time(cfg, b, next_sample)) record(b);
    }
    return out;
}

double spectral_radius(const ModeLattice& lattice, const PotentialSpec& pot)
{
    const double edge = std::max(lattice.diagonal(lattice.n_min), lattice.diagonal(lattice.n_max));
    return edge + 2.0 * pot.depth / (4.0 * constants.hbar) + 1e-300;
}

}  // namespace

EvolutionResult evolve(const ModeLattice& lattice_in, const ModeAmplitudes& initial,
                       const EvolutionConfig& cfg)
{
    lattice_in.validate();
    cfg.validate();
    detail::require(!initial.c.empty(), "initial state is empty");
    detail::require(std::abs(initial.norm() - 1.0) <= 1e-9, "initial state is not normalized");
    for (int n = initial.n_min; n <= initial.n_max(); ++n)
        detail::require(initial.at(n) == Complex{} || lattice_in.contains(n),
                        "initial amplitude at n = " + std::to_string(n) + " lies outside the lattice");

    ModeLattice lattice = lattice_in;
    EvolutionResult result;
    for (int widenings = 0;; ++widenings) {
        std::vector<Complex> start(lattice.size());
        for (int n = lattice.n_min; n <= lattice.n_max; ++n)
            start[static_cast<std::size_t>(n - lattice.n_min)] = initial.at(n);

        double h = 0.25 / spectral_radius(lattice, cfg.potential);
        if (cfg.max_step > 0.0) h = std::min(h, cfg.max_step);
        h = std::min(h, cfg.total_time / cfg.samples);

        // Each candidate step is compared with a run at half the step; the
        // finer run is accepted once both its norm drift and the difference
        // between the two runs are within tolerance.
        auto attempt = [&](double step) {
            if (cfg.total_time / step > static_cast<double>(cfg.max_steps))
                throw NumericalError("step-size underflow: step " + format_number(step)
                                     + " s would need more than " + std::to_string(cfg.max_steps)
                                     + " steps");
            return run_fixed_step(lattice, start, cfg, step);
        };
        RunOutcome coarse = attempt(h);
        RunOutcome run;
        int halvings = 0;
        for (;;) {
            h *= 0.5;
            ++halvings;
            run = attempt(h);
            double difference = 0.0;
            for (std::size_t i = 0; i < run.samples.size(); ++i)
                for (std::size_t j = 0; j < run.samples[i].c.size(); ++j)
                    difference = std::max(difference, std::abs(run.samples[i].c[j] - coarse.samples[i].c[j]));
            if (run.drift <= cfg.norm_tolerance && difference <= cfg.amplitude_tolerance) break;
            if (halvings > cfg.max_halvings)
                throw NumericalError("step-size underflow: norm drift " + format_number(run.drift)
                                     + " and step-doubling difference " + format_number(difference)
                                     + " still above tolerance after " + std::to_string(cfg.max_halvings)
                                     + " halvings");
            coarse = std::move(run);
        }

        result.lattice = lattice;
        result.samples = std::move(run.samples);
        result.norm_drift = run.drift;
        result.boundary_population = run.boundary;
        result.step = h;
        result.steps = run.steps;
        result.widenings = widenings;
        result.halvings = halvings;

        if (run.boundary <= cfg.boundary_tolerance) return result;
        if (widenings == cfg.max_widenings)
            throw NumericalError("lattice-widening retry limit exceeded: boundary population "
                                 + format_number(run.boundary));
        lattice = lattice.widened(8);
    }
}

std::string_view to_string(BesselConvention convention)
{
    return convention == BesselConvention::coupled_equations ? "coupled_equations" : "printed";
}

double bessel_j(int order, double x)
{
    const bool flip_order = order < 0 && (order % 2 != 0);
    const int m = std::abs(order);
    double value = std::cyl_bessel_j(static_cast<double>(m), std::abs(x));
    if (x < 0.0 && (m % 2 != 0)) value = -value;
    return flip_order ? -value : value;
}

Complex bessel_solution(int n, double V0, double t, BesselConvention convention)
{
    detail::require(n % 2 == 0, "odd orders are unreachable from c_0 = 1");
    const int m = n / 2;
    const bool printed = convention == BesselConvention::printed;
    const double phi = V0 * t / (printed ? constants.hbar : 2.0 * constants.hbar);
    // (+/- i)^m
    static constexpr Complex powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const int quarter = ((printed ? m : -m) % 4 + 4) % 4;
    return powers[quarter] * std::polar(1.0, -phi) * bessel_j(m, phi);
}

std::pair<Complex, Complex> pendelloesung(double V0, double epsilon, double t)
{
    const double theta = V0 * t / (4.0 * constants.hbar);
    const Complex rot = std::polar(1.0, -epsilon * t);
    return {rot * std::cos(theta), Complex(0.0, -1.0) * rot * std::sin(theta)};
}

std::vector<SpectrumRow> diffraction_spectrum(const ModeAmplitudes& state)
{
    std::vector<SpectrumRow> rows;
    rows.reserve(state.c.size());
    for (int n = state.n_min; n <= state.n_max(); ++n)
        rows.push_back({n, 0.5 * n, state.probability(n), static_cast<double>(n)});
    return rows;
}

}  // namespace kdsim
