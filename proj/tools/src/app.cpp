#include "app.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "kdsim/error.hpp"

namespace kdsim::cli {

namespace {

namespace fs = std::filesystem;

// A command-line option that, when given, overwrites one location of the
// config document.
struct Binding {
    CLI::Option* option = nullptr;
    std::string pointer;
    std::function<json()> value;
};

class Bindings {
public:
    explicit Bindings(CLI::App* app) : app_(app) {}

    template <class T>
    Bindings& option(const std::string& flag, const std::string& pointer, const std::string& help)
    {
        auto store = std::make_shared<T>();
        auto* opt = app_->add_option(flag, *store, help);
        list_.push_back({opt, pointer, [store] { return json(*store); }});
        return *this;
    }

    Bindings& flag(const std::string& flag, const std::string& pointer, json value, const std::string& help)
    {
        auto* opt = app_->add_flag(flag, help);
        list_.push_back({opt, pointer, [value] { return value; }});
        return *this;
    }

    void apply(json& doc) const
    {
        for (const auto& b : list_) {
            if (b.option->count() == 0) continue;
            if (b.pointer == "/particle") {
                json p = doc.contains("particle") && doc["particle"].is_object() ? doc["particle"] : json::object();
                p.erase("mass_kg");
                p.erase("charge_C");
                p.erase("name");
                p["builtin"] = b.value();
                doc["particle"] = p;
                continue;
            }
            if (b.pointer.rfind("/particle/", 0) == 0 && doc.contains("particle") && doc["particle"].is_string())
                doc["particle"] = json{{"builtin", doc["particle"]}};
            doc[json::json_pointer(b.pointer)] = b.value();
        }
    }

private:
    CLI::App* app_;
    std::vector<Binding> list_;
};

struct Subcommand {
    CLI::App* app = nullptr;
    Command command = Command::list;
    std::unique_ptr<Bindings> bindings;
};

void add_common(Bindings& b)
{
    b.option<std::string>("--output-dir", "/output/dir", "Directory for output files")
        .option<std::string>("--prefix", "/output/prefix", "File name prefix")
        .option<std::uint64_t>("--seed", "/seed", "Random seed");
}

void add_particle_beam(Bindings& b)
{
    b.option<std::string>("--particle", "/particle", "Builtin particle name")
        .option<std::string>("--line-list", "/particle/line_list", "Resonance line-list file")
        .option<double>("--wavelength-nm", "/beam/wavelength_nm", "Laser wavelength (nm)")
        .option<double>("--intensity", "/beam/intensity_W_m2", "Laser intensity (W/m^2)")
        .option<double>("--waist", "/beam/waist_m", "Beam width along the particle path (m)")
        .option<double>("--velocity", "/velocity_m_s", "Longitudinal speed (m/s)")
        .option<double>("--energy-ev", "/energy_eV", "Kinetic energy (eV)")
        .option<std::string>("--kind", "/potential/kind", "ponderomotive | lightshift")
        .option<std::string>("--field-convention", "/potential/field_convention", "standing_wave | travelling_wave")
        .option<std::string>("--envelope", "/potential/envelope", "rectangular | gaussian")
        .option<double>("--depth", "/potential/depth_J", "Signed potential depth (J), overrides the beam")
        .option<double>("--total-time", "/solver/total_time_s", "Interaction time (s), overrides waist/velocity");
}

std::vector<Subcommand> build(CLI::App& app)
{
    std::vector<Subcommand> subs;
    auto add = [&](Command c, const std::string& help) -> Subcommand& {
        Subcommand s;
        s.command = c;
        s.app = app.add_subcommand(std::string(to_string(c)), help);
        s.bindings = std::make_unique<Bindings>(s.app);
        subs.push_back(std::move(s));
        return subs.back();
    };

    add(Command::list, "List builtin particles and presets");

    {
        auto& s = add(Command::potential, "Potential depth, recoil and regime for a particle and beam");
        add_particle_beam(*s.bindings);
        add_common(*s.bindings);
    }
    {
        auto& s = add(Command::diffract, "Integrate the coupled-mode equations");
        add_particle_beam(*s.bindings);
        s.bindings->option<int>("--initial-order", "/solver/initial_order", "Initially populated mode n")
            .option<double>("--offset", "/solver/offset", "Incident momentum offset (units of hbar k)")
            .option<int>("--samples", "/solver/samples", "Number of time samples")
            .option<int>("--half-width", "/solver/half_width", "Initial lattice half-width")
            .option<double>("--norm-tolerance", "/solver/norm_tolerance", "Allowed norm drift")
            .option<double>("--amplitude-tolerance", "/solver/amplitude_tolerance",
                            "Allowed step-doubling amplitude difference")
            .option<double>("--max-step", "/solver/max_step_s", "Largest integrator step (s)")
            .option<std::string>("--bessel-convention", "/solver/bessel_convention", "coupled_equations | printed")
            .flag("--no-diagonal-offset", "/solver/include_diagonal_offset", false,
                  "Drop the uniform V0/2hbar diagonal term");
        add_common(*s.bindings);
    }
    {
        auto& s = add(Command::trajectories, "Classical deflection histogram");
        add_particle_beam(*s.bindings);
        s.bindings->option<std::size_t>("--trajectories", "/ensemble/trajectories", "Ensemble size")
            .option<std::string>("--sampling", "/ensemble/sampling", "uniform_random | uniform_grid")
            .option<int>("--bins", "/ensemble/bins", "Histogram bins")
            .option<double>("--angle-range", "/ensemble/angle_range_rad", "Histogram half-width (rad)")
            .option<double>("--path-x0", "/ensemble/path_x0_m", "Also record one trajectory from this x0 (m)");
        add_common(*s.bindings);
    }
    {
        auto& s = add(Command::classify, "Regime map and point classification");
        add_particle_beam(*s.bindings);
        s.bindings->option<double>("--U-hz", "/classify/U_hz", "Potential depth U/2pi (Hz)")
            .option<double>("--inv-dt-hz", "/classify/inv_dt_hz", "1/dt, tabulated as cyclic (Hz)")
            .option<double>("--epsilon-hz", "/classify/epsilon_hz", "Recoil frequency eps/2pi (Hz)")
            .option<int>("--grid-points", "/classify/grid_points", "Map points per axis");
        add_common(*s.bindings);
    }
    {
        auto& s = add(Command::sagnac, "Rotation sensitivity and molecule transit bound");
        s.bindings->option<double>("--k-g", "/sagnac/k_g", "Grating wave number (rad/m)")
            .option<double>("--length", "/sagnac/length_m", "Grating separation (m)")
            .option<double>("--speed", "/sagnac/speed_m_s", "Particle speed (m/s)")
            .option<double>("--contrast", "/sagnac/contrast", "Fringe contrast")
            .option<double>("--count-rate", "/sagnac/count_rate", "Detected particles per second")
            .option<double>("--density", "/sagnac/density_kg_m3", "Molecule density (kg/m^3)")
            .option<double>("--transit-time", "/sagnac/transit_time_s", "Transit time between gratings (s)");
        add_common(*s.bindings);
    }
    {
        auto& s = add(Command::tables, "Reproduce the comparison tables");
        s.bindings->option<std::string>("--id", "/tables/id", "1 | 2 | 3 | all")
            .option<std::string>("--species", "/tables/species", "Species label for table 2")
            .option<std::string>("--line-list", "/tables/line_list", "Line-list file for table 2")
            .option<double>("--velocity", "/tables/velocity_m_s", "Beam velocity for table 2 (m/s)");
        add_common(*s.bindings);
    }
    {
        auto& s = add(Command::figure, "Reproduce a figure by id");
        s.bindings->option<std::string>("--id", "/figure/id", "7-left | 7-right | 5 | 8")
            .option<int>("--samples", "/figure/samples", "Time samples (figure 7)")
            .option<int>("--scan-points", "/figure/scan_points", "Intensity scan points (figure 7-right)")
            .option<std::size_t>("--trajectories", "/figure/trajectories", "Ensemble size (figure 8)");
        add_common(*s.bindings);
    }
    return subs;
}

json read_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ValidationError("config: cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError("config: '" + path + "' is not valid JSON: " + e.what());
    }
}

std::string default_prefix(const RunConfig& cfg)
{
    switch (cfg.command) {
    case Command::figure: return "figure-" + cfg.figure.id;
    case Command::tables: return "tables-" + cfg.tables.id;
    default: return std::string(to_string(cfg.command));
    }
}

// Writes every file under a temporary name first, then renames, so a
// failure part-way leaves no output behind.
void write_outputs(const fs::path& dir, const std::vector<OutputFile>& files)
{
    fs::create_directories(dir);
    std::vector<std::pair<fs::path, fs::path>> staged;
    try {
        for (const auto& f : files) {
            const fs::path final_path = dir / f.name;
            fs::path tmp = final_path;
            tmp += ".tmp";
            std::ofstream out(tmp, std::ios::binary);
            out << f.content;
            out.close();
            if (!out) throw Error("cannot write '" + tmp.string() + "'");
            staged.emplace_back(tmp, final_path);
        }
    } catch (...) {
        for (const auto& [tmp, _] : staged) fs::remove(tmp);
        throw;
    }
    for (const auto& [tmp, final_path] : staged) fs::rename(tmp, final_path);
}

void report_error(std::ostream& err, std::string_view kind, const std::string& message)
{
    err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::string& default_output_dir)
{
    CLI::App app{"Kapitza-Dirac and atom-optics scattering simulator", "kdsim"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string config_path;
    app.add_option("-c,--config", config_path, "JSON config file; flags override its values");
    app.set_version_flag("--version", "kdsim 0.1.0");
    auto subs = build(app);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForVersion& e) {
        out << "kdsim 0.1.0\n";
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        report_error(err, "validation", e.what());
        return exit_validation;
    }

    try {
        const Subcommand* chosen = nullptr;
        for (const auto& s : subs)
            if (s.app->parsed()) chosen = &s;

        json doc = config_path.empty() ? json::object() : read_config_file(config_path);
        if (!doc.is_object()) throw ValidationError("config: top level must be an object");
        doc["command"] = to_string(chosen->command);
        chosen->bindings->apply(doc);
        RunConfig cfg = parse_config(doc);
        if (cfg.output.dir.empty()) cfg.output.dir = default_output_dir.empty() ? "." : default_output_dir;
        if (cfg.output.prefix.empty()) cfg.output.prefix = default_prefix(cfg);

        auto result = run_command(cfg);
        for (auto& f : result.files) f.name = cfg.output.prefix + "_" + f.name;
        const json meta = metadata(cfg, result);
        if (cfg.command != Command::list) {
            result.files.push_back({cfg.output.prefix + ".json", meta.dump(2) + "\n"});
            write_outputs(cfg.output.dir, result.files);
        }
        out << meta.dump(2) << '\n';
        return exit_ok;
    } catch (const NumericalError& e) {
        report_error(err, "numerical", e.what());
        return exit_numerical;
    } catch (const ValidationError& e) {
        report_error(err, "validation", e.what());
        return exit_validation;
    } catch (const json::exception& e) {
        report_error(err, "validation", std::string("config: ") + e.what());
        return exit_validation;
    } catch (const std::exception& e) {
        report_error(err, "internal", e.what());
        return exit_failure;
    }
}

}  // namespace kdsim::cli
