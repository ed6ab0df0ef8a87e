#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kdsim/classical.hpp"
#include "kdsim/kinematics.hpp"
#include "kdsim/potentials.hpp"
#include "kdsim/quantum.hpp"

namespace kdsim::cli {

using json = nlohmann::ordered_json;

enum class Command { list, potential, diffract, trajectories, classify, sagnac, tables, figure };

std::string_view to_string(Command command);
Command parse_command(std::string_view name);

struct ParticleOptions {
    std::string builtin = "electron";   // empty when mass/charge are given explicitly
    std::string name;
    std::optional<double> mass_kg;
    std::optional<double> charge_C;
    std::vector<ResonanceLine> lines;
    std::string line_list;              // path, resolved into `lines`
};

struct BeamOptions {
    double wavelength_nm = 1064.0;
    double intensity_W_m2 = 0.0;
    double waist_m = 0.0;
    double height_m = 1e-3;
};

struct PotentialOptions {
    std::optional<PotentialKind> kind;  // default: lightshift when the particle has lines
    FieldConvention field = FieldConvention::standing_wave;
    EnvelopeShape envelope = EnvelopeShape::rectangular;
    std::optional<double> depth_J;      // signed; overrides the depth computed from the beam
};

struct SolverOptions {
    std::optional<double> total_time_s;
    double max_step_s = 0.0;
    double norm_tolerance = 1e-10;
    double amplitude_tolerance = 1e-9;
    double boundary_tolerance = 1e-10;
    int samples = 200;
    int initial_order = 0;
    double offset = 0.0;
    std::optional<int> half_width;
    bool include_diagonal_offset = true;
    BesselConvention bessel = BesselConvention::coupled_equations;
};

struct EnsembleOptions {
    std::size_t trajectories = 10000;
    PositionSampling sampling = PositionSampling::uniform_random;
    int bins = 201;
    double angle_range_rad = 0.0;
    std::optional<double> path_x0_m;
};

struct ClassifyOptions {
    std::optional<double> U_hz;
    std::optional<double> inv_dt_hz;
    std::optional<double> epsilon_hz;
    double u_min = 1e-2, u_max = 1e6;
    double s_min = 1e-3, s_max = 1e4;
    int grid_points = 41;
};

struct SagnacOptions {
    double k_g = 0.0;
    double length_m = 0.0;
    double speed_m_s = 0.0;
    double contrast = 1.0;
    double count_rate = 0.0;
    std::optional<double> density_kg_m3;
    std::optional<double> transit_time_s;
};

struct TablesOptions {
    std::string id = "all";  // 1, 2, 3, all
    std::string species;
    std::string line_list;
    std::optional<double> velocity_m_s;
};

struct FigureOptions {
    std::string id;  // 7-left, 7-right, 5, 8
    int samples = 200;
    int scan_points = 41;
    std::size_t trajectories = 10000;
};

struct OutputOptions {
    std::string dir;
    std::string prefix;
};

struct RunConfig {
    Command command = Command::list;
    ParticleOptions particle;
    BeamOptions beam;
    std::optional<double> velocity_m_s;
    std::optional<double> energy_eV;
    PotentialOptions potential;
    SolverOptions solver;
    EnsembleOptions ensemble;
    ClassifyOptions classify;
    SagnacOptions sagnac;
    TablesOptions tables;
    FigureOptions figure;
    OutputOptions output;
    std::uint64_t seed = 1;
};

/// Builds a RunConfig from a JSON document. Unknown keys at any level are a
/// ValidationError, as are wrong types and out-of-range values.
RunConfig parse_config(const json& doc);

/// The fully resolved configuration, defaults included.
json to_json(const RunConfig& cfg);

/// Particle after resolving the builtin name and any line-list file.
Particle resolve_particle(const ParticleOptions& options);

/// Longitudinal speed from velocity_m_s or energy_eV; nullopt when neither is set.
std::optional<double> resolve_velocity(const RunConfig& cfg, const Particle& particle);

}  // namespace kdsim::cli
