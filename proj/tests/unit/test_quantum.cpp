#include <cmath>
#include <complex>

#include <doctest.h>

#include "kdsim/constants.hpp"
#include "kdsim/error.hpp"
#include "kdsim/quantum.hpp"
#include "oracles.hpp"

using namespace kdsim;
using doctest::Approx;

namespace {

constexpr double hbar = 6.62607015e-34 / (2.0 * 3.14159265358979323846);
constexpr double k_light = 2.0 * 3.14159265358979323846 / 1064e-9;

// Rectangular pulse of depth U hbar lasting T.
EvolutionConfig rect_config(double U, double T, int samples = 50)
{
    EvolutionConfig cfg;
    cfg.potential = {U * hbar, k_light, PotentialKind::ponderomotive, Envelope::rectangular(T), +1};
    cfg.total_time = T;
    cfg.samples = samples;
    return cfg;
}

EvolutionConfig gauss_config(double U, double T, int samples = 50)
{
    EvolutionConfig cfg;
    cfg.potential = {U * hbar, k_light, PotentialKind::ponderomotive, Envelope::gaussian(T), +1};
    cfg.total_time = cfg.potential.envelope.end_time();
    cfg.samples = samples;
    return cfg;
}

}  // namespace

TEST_SUITE("quantum") {

TEST_CASE("lattice basics")
{
    const auto L = ModeLattice::symmetric(4, 2.0, 0.1);
    CHECK(L.n_min == -4);
    CHECK(L.n_max == 4);
    CHECK(L.size() == 9);
    CHECK(L.diagonal(2) == Approx(2.0 * 2.1 * 2.1));
    CHECK(L.widened(8).n_max == 12);
    CHECK_THROWS_AS((ModeLattice{1, 4, 0.0, 1.0}).validate(), ValidationError);

    auto cfg = rect_config(5.0, 2.0);
    CHECK(default_lattice(cfg.potential, 0.0).n_max == 40);
    cfg = rect_config(0.1, 1.0);
    CHECK(default_lattice(cfg.potential, 0.0).n_max == 8);
}

TEST_CASE("free evolution only rotates phases")
{
    const double eps = 3.0, delta = 0.1, T = 1.7;
    auto cfg = rect_config(0.0, T, 10);
    const auto L = ModeLattice::symmetric(8, eps, delta);
    ModeAmplitudes init;
    init.n_min = -2;
    init.c = {Complex(0.6, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.8)};
    const auto r = evolve(L, init, cfg);
    for (const auto& s : r.samples)
        for (int n : {-2, 0}) {
            const Complex expected = init.at(n) * std::exp(Complex(0.0, -eps * (n + delta) * (n + delta) * s.time));
            CHECK(std::abs(s.at(n) - expected) <= 1e-9);
        }
    const auto spec = diffraction_spectrum(r.final_state());
    for (const auto& row : spec) CHECK(row.probability == Approx(init.probability(row.n)).epsilon(1e-12).scale(1.0));
}

TEST_CASE("Raman-Nath limit matches the Bessel solution")
{
    const double U = 4.0, T = 2.5;  // V0 t / hbar = 10
    auto cfg = rect_config(U, T, 40);
    const auto r = evolve(ModeLattice::symmetric(30, 0.0), ModeAmplitudes::single(0), cfg);
    for (const auto& s : r.samples) {
        for (int n = -20; n <= 20; n += 2) {
            const double phi = U * s.time / 2.0;
            CHECK(std::abs(s.probability(n) - std::pow(oracle::bessel_series(n / 2, phi), 2)) <= 1e-6);
            CHECK(std::abs(s.at(n) - bessel_solution(n, U * hbar, s.time)) <= 1e-6);
        }
    }
}

TEST_CASE("two-mode limit matches the Pendelloesung")
{
    const double U = 1.0, eps = 100.0;
    const double T = 4.0 * 3.14159265358979323846 / U * 1.0;  // V0 t / 4 hbar runs to pi
    auto cfg = rect_config(U, T, 100);
    cfg.include_diagonal_offset = false;
    const auto r = evolve(ModeLattice::symmetric(9, eps), ModeAmplitudes::single(1), cfg);
    for (const auto& s : r.samples) {
        const auto [c1, cm1] = pendelloesung(U * hbar, eps, s.time);
        CHECK(std::abs(s.probability(1) - std::norm(c1)) < 1e-3);
        CHECK(std::abs(s.probability(-1) - std::norm(cm1)) < 1e-3);
        CHECK(std::abs(s.norm() - s.probability(1) - s.probability(-1)) < 1e-3);
    }
}

TEST_CASE("agrees with exact propagation of the truncated system")
{
    const double U = 3.0, eps = 0.7, delta = 0.23, T = 2.0;
    auto cfg = rect_config(U, T, 4);
    const auto L = ModeLattice::symmetric(12, eps, delta);
    ModeAmplitudes init;
    init.n_min = -1;
    init.c = {Complex(0.6, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.8)};
    const auto r = evolve(L, init, cfg);
    CHECK(r.widenings == 0);
    std::vector<Complex> c0(L.size());
    c0[static_cast<std::size_t>(-1 - L.n_min)] = init.at(-1);
    c0[static_cast<std::size_t>(1 - L.n_min)] = init.at(1);
    const auto exact = oracle::propagate_exact(L.n_min, L.n_max, eps, delta, U / 2.0, U / 4.0, c0, T);
    for (int n = L.n_min; n <= L.n_max; ++n)
        CHECK(std::abs(r.final_state().at(n) - exact[static_cast<std::size_t>(n - L.n_min)]) <= 1e-8);
}

TEST_CASE("unitarity and parity")
{
    for (bool gaussian : {false, true}) {
        auto cfg = gaussian ? gauss_config(6.0, 1.0) : rect_config(6.0, 2.0);
        const auto r = evolve(ModeLattice::symmetric(8, 0.5), ModeAmplitudes::single(0), cfg);
        CHECK(r.norm_drift < 1e-8);
        for (const auto& s : r.samples) {
            CHECK(std::abs(s.norm() - 1.0) < 1e-8);
            for (int n = r.lattice.n_min; n <= r.lattice.n_max; ++n)
                if (n % 2 != 0) CHECK(s.at(n) == Complex{});
        }
    }
}

TEST_CASE("mirror symmetry")
{
    auto cfg = gauss_config(8.0, 1.0, 30);
    const auto r = evolve(ModeLattice::symmetric(10, 1.3), ModeAmplitudes::single(0), cfg);
    for (const auto& s : r.samples)
        for (int n = 2; n <= r.lattice.n_max; n += 2) CHECK(std::abs(std::abs(s.at(n)) - std::abs(s.at(-n))) <= 1e-10);
}

TEST_CASE("uniform diagonal term only changes a global phase")
{
    for (bool gaussian : {false, true}) {
        auto on = gaussian ? gauss_config(5.0, 1.0, 20) : rect_config(5.0, 2.0, 20);
        auto off = on;
        off.include_diagonal_offset = false;
        const auto L = ModeLattice::symmetric(16, 0.4, 0.1);
        const auto a = evolve(L, ModeAmplitudes::single(0), on);
        const auto b = evolve(L, ModeAmplitudes::single(0), off);
        REQUIRE(a.samples.size() == b.samples.size());
        for (std::size_t i = 0; i < a.samples.size(); ++i)
            for (int n = L.n_min; n <= L.n_max; ++n)
                CHECK(std::abs(a.samples[i].probability(n) - b.samples[i].probability(n)) <= 1e-12);
    }
}

TEST_CASE("lattice widens when populations reach the boundary")
{
    auto cfg = rect_config(10.0, 3.0, 10);  // Bessel argument 15
    const auto r = evolve(ModeLattice::symmetric(4, 0.0), ModeAmplitudes::single(0), cfg);
    CHECK(r.widenings > 0);
    CHECK(r.boundary_population <= cfg.boundary_tolerance);
    for (int n = -30; n <= 30; n += 2)
        CHECK(std::abs(r.final_state().probability(n) - std::pow(oracle::bessel_series(n / 2, 15.0), 2)) <= 1e-6);
}

TEST_CASE("evolve rejects bad inputs and reports numerical failure")
{
    auto cfg = rect_config(1.0, 1.0);
    const auto L = ModeLattice::symmetric(8, 1.0);
    ModeAmplitudes bad;
    bad.n_min = 0;
    bad.c = {Complex(0.5, 0.0)};
    CHECK_THROWS_AS(evolve(L, bad, cfg), ValidationError);
    CHECK_THROWS_AS(evolve(L, ModeAmplitudes::single(20), cfg), ValidationError);
    auto neg = cfg;
    neg.total_time = 0.0;
    CHECK_THROWS_AS(evolve(L, ModeAmplitudes::single(0), neg), ValidationError);

    auto strict = cfg;
    strict.norm_tolerance = 1e-30;
    strict.max_halvings = 2;
    CHECK_THROWS_WITH_AS(evolve(L, ModeAmplitudes::single(0), strict), doctest::Contains("step-size underflow"),
                         NumericalError);

    auto narrow = rect_config(20.0, 3.0);
    narrow.max_widenings = 1;
    CHECK_THROWS_WITH_AS(evolve(ModeLattice::symmetric(2, 0.0), ModeAmplitudes::single(0), narrow),
                         doctest::Contains("lattice-widening"), NumericalError);
}

TEST_CASE("Bessel closed form")
{
    const double V0 = 2.0 * hbar;
    CHECK(bessel_solution(0, V0, 0.0) == Complex(1.0, 0.0));
    for (int n = 2; n <= 10; n += 2) CHECK(bessel_solution(n, V0, 0.0) == Complex{});
    CHECK_THROWS_AS(bessel_solution(1, V0, 1.0), ValidationError);

    for (double t : {0.3, 2.0, 7.5}) {
        double sum = 0.0;
        for (int n = -60; n <= 60; n += 2) {
            sum += std::norm(bessel_solution(n, V0, t));
            CHECK(std::norm(bessel_solution(n, V0, t)) == Approx(std::norm(bessel_solution(-n, V0, t))).epsilon(1e-12).scale(1.0));
            CHECK(std::norm(bessel_solution(n, V0, t))
                  == Approx(std::pow(oracle::bessel_series(n / 2, V0 * t / (2.0 * hbar)), 2)).epsilon(1e-12).scale(1.0));
        }
        CHECK(std::abs(sum - 1.0) <= 1e-10);
        // The printed convention uses twice the argument.
        CHECK(std::norm(bessel_solution(4, V0, t, BesselConvention::printed))
              == Approx(std::pow(oracle::bessel_series(2, V0 * t / hbar), 2)).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("bessel_j matches the power series")
{
    for (int m = -12; m <= 12; ++m)
        for (double x : {-7.3, -0.5, 0.0, 0.1, 1.0, 4.2, 9.9, 15.0})
            CHECK(bessel_j(m, x) == Approx(oracle::bessel_series(m, x)).epsilon(1e-12).scale(1.0));
}

TEST_CASE("Pendelloesung closed form")
{
    const double eps = 5.0;
    const double t = 1.0;
    const double V0 = 2.0 * 3.14159265358979323846 * hbar / t;  // V0 t / 4 hbar = pi / 2
    CHECK(std::norm(pendelloesung(V0, eps, t).second) == Approx(1.0).epsilon(1e-14));
    for (double tt : {0.0, 0.1, 0.77, 3.0}) {
        const auto [a, b] = pendelloesung(V0, eps, tt);
        CHECK(std::norm(a) + std::norm(b) == Approx(1.0).epsilon(1e-14));
    }
    // Period in V0 at fixed t is 4 pi hbar / t.
    const double period = 4.0 * 3.14159265358979323846 * hbar / t;
    const double v = 0.37 * period;
    CHECK(std::norm(pendelloesung(v + period, eps, t).first) == Approx(std::norm(pendelloesung(v, eps, t).first)).epsilon(1e-12));
}

TEST_CASE("diffraction spectrum")
{
    auto cfg = rect_config(6.0, 1.0, 5);
    const auto r = evolve(ModeLattice::symmetric(10, 0.0), ModeAmplitudes::single(0), cfg);
    const auto spec = diffraction_spectrum(r.final_state());
    double total = 0.0;
    for (const auto& row : spec) {
        total += row.probability;
        CHECK(row.order == Approx(row.n / 2.0));
        CHECK(row.momentum == Approx(static_cast<double>(row.n)));
        if (row.n % 2 != 0) CHECK(row.probability == 0.0);
    }
    CHECK(total == Approx(r.final_state().norm()).epsilon(1e-14));
    // Populated orders are two recoils apart and symmetric.
    for (const auto& row : spec)
        if (row.probability > 0.0)
            CHECK(row.probability == Approx(r.final_state().probability(-row.n)).epsilon(1e-10).scale(1.0));
}

}
