#pragma once

#include <complex>
#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "kdsim/potentials.hpp"

namespace kdsim {

using Complex = std::complex<double>;

/// Plane waves exp(i (n + offset) k x), n in [n_min, n_max], coupled in steps
/// of two by a cos^2 kx potential. Mode n carries kinetic energy
/// hbar * epsilon * (n + offset)^2.
struct ModeLattice {
    int n_min = -8;
    int n_max = 8;
    double offset = 0.0;   // incident transverse momentum in units of hbar k, fractional part
    double epsilon = 0.0;  // recoil frequency, rad/s

    static ModeLattice symmetric(int half_width, double epsilon, double offset = 0.0);

    void validate() const;
    std::size_t size() const { return static_cast<std::size_t>(n_max - n_min + 1); }
    bool contains(int n) const { return n >= n_min && n <= n_max; }
    double diagonal(int n) const;
    ModeLattice widened(int by) const;
};

/// Initial half-width max(8, ceil(4 V0 T / hbar)) with T the envelope area.
ModeLattice default_lattice(const PotentialSpec& potential, double epsilon, double offset = 0.0);

/// Amplitudes c_n on a contiguous index range; indices outside are zero.
struct ModeAmplitudes {
    int n_min = 0;
    std::vector<Complex> c;
    double time = 0.0;

    static ModeAmplitudes single(int n, double time = 0.0);

    int n_max() const { return n_min + static_cast<int>(c.size()) - 1; }
    Complex at(int n) const;
    double probability(int n) const { return std::norm(at(n)); }
    double norm() const;
};

struct EvolutionConfig {
    PotentialSpec potential;
    double total_time = 0.0;        // s
    double max_step = 0.0;          // s, 0 selects the step from the spectral radius
    double norm_tolerance = 1e-10;  // allowed |sum |c|^2 - 1| over the run
    /// Allowed max |c_n| difference between runs at step h and h/2.
    double amplitude_tolerance = 1e-9;
    double boundary_tolerance = 1e-10;
    bool include_diagonal_offset = true;
    int samples = 200;
    int max_widenings = 8;
    int max_halvings = 40;
    /// Largest number of RK4 steps one attempt may take; a halving that would
    /// exceed it is reported as step-size underflow.
    std::size_t max_steps = 20'000'000;

    void validate() const;
};

struct EvolutionResult {
    ModeLattice lattice;                 // lattice actually used (after widening)
    std::vector<ModeAmplitudes> samples; // samples + 1 states, t = 0 .. total_time
    double norm_drift = 0.0;
    double boundary_population = 0.0;
    double step = 0.0;
    std::size_t steps = 0;
    int widenings = 0;
    int halvings = 0;

    const ModeAmplitudes& final_state() const { return samples.back(); }
};

/// Integrates
///   i dc_n/dt = (eps (n+offset)^2 + s V0 f(t) / 2hbar) c_n + s V0 f(t) / 4hbar (c_{n-2} + c_{n+2})
/// with s the potential sign and f the envelope. The uniform diagonal term
/// commutes with the rest of the generator and is applied as an exact phase.
///
/// The step is halved until the norm drift is below norm_tolerance and the
/// amplitudes agree with the previous step within amplitude_tolerance; the
/// lattice is widened by 8 on each side while any of the two outermost modes
/// of either parity exceeds boundary_tolerance. Throws NumericalError when
/// either retry budget is exhausted, ValidationError for bad inputs.
EvolutionResult evolve(const ModeLattice& lattice, const ModeAmplitudes& initial,
                       const EvolutionConfig& cfg);

enum class BesselConvention {
    coupled_equations,  // (-i)^{n/2} e^{-i phi} J_{n/2}(phi), phi = V0 t / 2hbar
    printed,            // i^{n/2} e^{-i phi} J_{n/2}(phi), phi = V0 t / hbar
};

std::string_view to_string(BesselConvention convention);

/// Integer-order Bessel function of the first kind for any sign of order and argument.
double bessel_j(int order, double x);

/// Raman-Nath amplitude of mode n (even) after time t at depth V0 (J),
/// starting from c_0 = 1 with epsilon = 0.
Complex bessel_solution(int n, double V0, double t,
                        BesselConvention convention = BesselConvention::coupled_equations);

/// Two-mode Bragg amplitudes (c_{+1}, c_{-1}) starting from c_{+1} = 1:
///   c_{+1} = e^{-i eps t} cos(V0 t / 4hbar),  c_{-1} = -i e^{-i eps t} sin(V0 t / 4hbar).
/// The uniform V0/2hbar phase is not included.
std::pair<Complex, Complex> pendelloesung(double V0, double epsilon, double t);

struct SpectrumRow {
    int n = 0;
    double order = 0.0;        // n / 2, in photon-pair recoils
    double probability = 0.0;  // |c_n|^2
    double momentum = 0.0;     // n in units of hbar k; multiply by hbar k for SI
};

std::vector<SpectrumRow> diffraction_spectrum(const ModeAmplitudes& state);

}  // namespace kdsim
