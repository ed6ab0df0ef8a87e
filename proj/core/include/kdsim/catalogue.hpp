#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "kdsim/kinematics.hpp"

namespace kdsim {

struct BuiltinParticle {
    std::string name;
    double mass = 0.0;    // kg
    double charge = 0.0;  // C
    /// Resonance wavelength used for the recoil column of the atom-optics
    /// survey table, when the species appears there.
    std::optional<double> recoil_wavelength;  // m
    std::string note;

    Particle particle() const { return {name, mass, charge, {}}; }
};

struct Preset {
    std::string id;
    std::string description;
    bool requires_line_list = false;
};

std::span<const BuiltinParticle> builtin_particles();
std::span<const Preset> builtin_presets();

/// Throws ValidationError for unknown names.
const BuiltinParticle& find_builtin_particle(std::string_view name);
const Preset& find_preset(std::string_view id);

}  // namespace kdsim
