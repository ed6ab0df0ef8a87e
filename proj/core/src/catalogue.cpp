#include "kdsim/catalogue.hpp"

#include <vector>

#include "kdsim/constants.hpp"
#include "kdsim/error.hpp"

namespace kdsim {

namespace {

using units::amu;
using units::nm;

constexpr double e = constants.elementary_charge;
constexpr double me = constants.electron_mass;

BuiltinParticle atom(std::string name, double mass_amu, std::optional<double> line_nm, std::string note)
{
    return {std::move(name), mass_amu * amu, 0.0,
            line_nm ? std::optional<double>(*line_nm * nm) : std::nullopt, std::move(note)};
}

BuiltinParticle ion(std::string name, double mass_amu, std::string note)
{
    return {std::move(name), mass_amu * amu - me, e, std::nullopt, std::move(note)};
}

const std::vector<BuiltinParticle>& particle_table()
{
    static const std::vector<BuiltinParticle> table = {
        {"electron", me, -e, std::nullopt, "free electron, ponderomotive coupling"},
        atom("Na", 22.98976928, 589.0, "D line 589 nm"),
        atom("Ne*", 20.1797, 640.0, "metastable neon, 640 nm"),
        atom("Ar*", 39.948, 811.0, "metastable argon, 811 nm"),
        atom("Cs", 132.90545196, 852.0, "D2 line 852 nm"),
        atom("Li", 6.94, 671.0, "D line 671 nm"),
        atom("Cr", 51.9961, 425.0, "425 nm"),
        atom("Rb", 85.4678, 780.0, "D2 line 780 nm"),
        ion("Ca+", 40.078, "dominant line 393 nm"),
        ion("Li+", 6.94, "metastable, dominant line 548.5 nm"),
        ion("Ba+", 137.327, "dominant lines 493 nm and 455 nm"),
    };
    return table;
}

const std::vector<Preset>& preset_table()
{
    static const std::vector<Preset> table = {
        {"figure-7-left", "10 eV electron, 1064 nm, w = 0.005 cm, I = 1e4 GW/m^2, diffractive", false},
        {"figure-7-right", "10 eV electron, 1064 nm, w = 0.5 cm, I = 1e2 GW/m^2, Bragg", false},
        {"figure-5", "regime map over (U/eps, 1/(eps dt)) with the survey points", false},
        {"figure-8", "classical rainbow scattering ensemble", false},
        {"table-1", "recoil frequencies and regime labels of the atom-optics survey", false},
        {"table-2-Na", "Na lightshift diffraction at 488 nm, 1e7 W/m^2", true},
        {"table-2-Ar*", "Ar* lightshift diffraction at 488 nm, 1e7 W/m^2", true},
        {"table-2-Ca+", "Ca+ lightshift diffraction at 488 nm, 1e7 W/m^2", true},
        {"table-2-Li+", "Li+ lightshift diffraction at 488 nm, 1e7 W/m^2", true},
        {"table-2-Ba+", "Ba+ lightshift diffraction at 488 nm, 1e7 W/m^2", true},
        {"table-3-bragg", "electron, 1064 nm, 1e2 GW/m^2, w = 0.5 cm, v = 2e6 m/s", false},
        {"table-3-diffractive", "electron, 1064 nm, 1e4 GW/m^2, w = 0.005 cm, v = 2e6 m/s", false},
    };
    return table;
}

}  // namespace

std::span<const BuiltinParticle> builtin_particles() { return particle_table(); }
std::span<const Preset> builtin_presets() { return preset_table(); }

const BuiltinParticle& find_builtin_particle(std::string_view name)
{
    for (const auto& p : particle_table())
        if (p.name == name) return p;
    throw ValidationError("unknown particle '" + std::string(name) + "'");
}

const Preset& find_preset(std::string_view id)
{
    for (const auto& p : preset_table())
        if (p.id == id) return p;
    throw ValidationError("unknown preset '" + std::string(id) + "'");
}

}  // namespace kdsim
