#include <cmath>
#include <random>

#include <doctest.h>

#include "kdsim/catalogue.hpp"
#include "kdsim/constants.hpp"
#include "kdsim/error.hpp"
#include "kdsim/kinematics.hpp"
#include "oracles.hpp"

using namespace kdsim;
using doctest::Approx;

TEST_SUITE("kinematics") {

TEST_CASE("constants match CODATA at nine digits")
{
    CHECK(constants.planck_h == 6.62607015e-34);
    CHECK(constants.hbar == Approx(1.054571817e-34).epsilon(1e-9));
    CHECK(constants.electron_mass == Approx(9.1093837e-31).epsilon(1e-8));
    CHECK(constants.elementary_charge == Approx(1.602176634e-19).epsilon(1e-8));
    CHECK(constants.earth_rotation == 7e-5);
}

TEST_CASE("frequency conventions round trip")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> exponent(-6.0, 12.0);
    for (int i = 0; i < 1000; ++i) {
        const double f = std::pow(10.0, exponent(rng));
        CHECK(std::abs(angular_to_cyclic(cyclic_to_angular(f)) - f) <= 1e-15 * f);
        CHECK(std::abs(from_angular(to_angular(f, FrequencyConvention::cyclic), FrequencyConvention::cyclic) - f)
              <= 1e-15 * f);
    }
    CHECK(to_angular(1.0, FrequencyConvention::angular) == 1.0);
    CHECK(cyclic_to_angular(1.0) == Approx(2.0 * oracle::pi));
}

TEST_CASE("velocity of a 10 eV electron")
{
    const double v = velocity_from_kinetic_energy(10.0 * units::electron_volt, constants.electron_mass);
    CHECK(v == Approx(1.8755e6).epsilon(1e-3));
    CHECK(std::abs(v - 2e6) / 2e6 < 0.1);
    CHECK(velocity_from_kinetic_energy(0.0, constants.electron_mass) == 0.0);
    CHECK_THROWS_AS(velocity_from_kinetic_energy(-1.0, constants.electron_mass), ValidationError);
    CHECK_THROWS_AS(velocity_from_kinetic_energy(1.0, 0.0), ValidationError);
}

TEST_CASE("de Broglie wavelength")
{
    CHECK(de_broglie_wavelength(constants.electron_mass, 1.875e6) == Approx(3.88e-10).epsilon(2e-3));
    CHECK_THROWS_AS(de_broglie_wavelength(constants.electron_mass, 0.0), ValidationError);
    const double a = de_broglie_wavelength(1e-26, 300.0);
    CHECK(de_broglie_wavelength(1e-26, 600.0) == Approx(a / 2.0).epsilon(1e-14));

    // A particle moving at 2 hbar k / m has lambda_dB = lambda / 2.
    const double lambda = 589e-9;
    const double m = 23.0 * units::amu;
    const double v = 2.0 * constants.hbar * (2.0 * oracle::pi / lambda) / m;
    CHECK(de_broglie_wavelength(m, v) == Approx(lambda / 2.0).epsilon(1e-12));
}

TEST_CASE("de Broglie wavelength equals h / sqrt(2 m E)")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> lm(-31.0, -24.0), le(-24.0, -15.0);
    for (int i = 0; i < 100; ++i) {
        const double m = std::pow(10.0, lm(rng));
        const double E = std::pow(10.0, le(rng));
        const double v = velocity_from_kinetic_energy(E, m);
        CHECK(de_broglie_wavelength(m, v) == Approx(oracle::h / std::sqrt(2.0 * m * E)).epsilon(1e-12));
    }
}

TEST_CASE("recoil frequencies")
{
    const auto& na = find_builtin_particle("Na");
    const double eps_na = angular_to_cyclic(recoil_frequency(na.mass, 589e-9));
    CHECK(eps_na == Approx(25.0e3).epsilon(2e-3));
    CHECK(std::abs(eps_na - 24e3) / 24e3 < 0.10);

    const auto& ar = find_builtin_particle("Ar*");
    const double eps_ar = angular_to_cyclic(recoil_frequency(ar.mass, 811e-9));
    CHECK(std::abs(eps_ar - 7.5e3) / 7.5e3 < 0.05);

    CHECK(recoil_frequency(constants.electron_mass, 1064e-9) == Approx(2.0185e9).epsilon(1e-3));

    // eps = hbar k^2 / 2m: scaling in mass and wavelength.
    const double base = recoil_frequency(1e-26, 500e-9);
    CHECK(recoil_frequency(2e-26, 500e-9) == Approx(base / 2.0).epsilon(1e-14));
    CHECK(recoil_frequency(1e-26, 1000e-9) == Approx(base / 4.0).epsilon(1e-14));
    CHECK_THROWS_AS(recoil_frequency(0.0, 500e-9), ValidationError);
    CHECK_THROWS_AS(recoil_frequency(1e-26, 0.0), ValidationError);
}

TEST_CASE("interaction time")
{
    CHECK(interaction_time(0.005e-2, 2e6) == Approx(2.5e-11).epsilon(1e-12));
    CHECK(interaction_time(0.5e-2, 2e6) == Approx(2.5e-9).epsilon(1e-12));
    CHECK_THROWS_AS(interaction_time(1e-3, 0.0), ValidationError);
    CHECK_THROWS_AS(interaction_time(-1e-3, 1.0), ValidationError);
}

TEST_CASE("resonance lines and particles")
{
    const auto line = line_from_wavelength(589e-9, 0.64);
    CHECK(line_wavelength(line) == Approx(589e-9).epsilon(1e-14));
    CHECK(line.weight == 0.64);
    CHECK_THROWS_AS(line_from_wavelength(0.0), ValidationError);
    CHECK_THROWS_AS(line_from_wavelength(589e-9, 0.0), ValidationError);

    const auto el = electron();
    CHECK(el.mass == constants.electron_mass);
    CHECK(el.charge == -constants.elementary_charge);
    CHECK(el.lines.empty());
    CHECK_NOTHROW(el.validate());
    Particle bad{"x", -1.0, 0.0, {}};
    CHECK_THROWS_AS(bad.validate(), ValidationError);
}

}
