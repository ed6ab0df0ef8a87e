#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "kdsim/kinematics.hpp"

namespace kdsim {

/// Resonance lines of a species as read from a line-list file.
///
/// Two formats are accepted.
///
/// JSON:
///   {"species": "Na",
///    "lines": [{"wavelength_nm": 589.0, "weight": 0.641},
///              {"wavelength_nm": 589.6, "weight": 0.320}]}
///
/// Plain text, one line per record, '#' starts a comment:
///   # species: Na
///   589.0  0.641
///   589.6  0.320
///
/// Weights must be positive; the sign of each contribution comes from the
/// detuning.
struct LineList {
    std::string species;
    std::vector<ResonanceLine> lines;
};

LineList parse_line_list(std::string_view text);
LineList load_line_list(const std::filesystem::path& path);

}  // namespace kdsim
