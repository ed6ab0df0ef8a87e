#include "config.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "kdsim/catalogue.hpp"
#include "kdsim/constants.hpp"
#include "kdsim/error.hpp"
#include "kdsim/line_list.hpp"

namespace kdsim::cli {

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 8> command_names{{
    {Command::list, "list"},
    {Command::potential, "potential"},
    {Command::diffract, "diffract"},
    {Command::trajectories, "trajectories"},
    {Command::classify, "classify"},
    {Command::sagnac, "sagnac"},
    {Command::tables, "tables"},
    {Command::figure, "figure"},
}};

// Walks one JSON object, remembering which keys were consumed so that
// leftovers can be reported as unknown.
class ObjectReader {
public:
    ObjectReader(const json& obj, std::string path) : obj_(obj), path_(std::move(path))
    {
        if (!obj_.is_object()) fail(path_.empty() ? "config" : path_, "must be an object");
    }

    bool has(const std::string& key) const { return obj_.contains(key); }

    const json* raw(const std::string& key)
    {
        seen_.insert(key);
        auto it = obj_.find(key);
        return it == obj_.end() ? nullptr : &*it;
    }

    template <class T>
    std::optional<T> get(const std::string& key)
    {
        const json* v = raw(key);
        if (!v || v->is_null()) return std::nullopt;
        return convert<T>(*v, where(key));
    }

    template <class T>
    void read(const std::string& key, T& target)
    {
        if (auto v = get<T>(key)) target = *v;
    }

    template <class T>
    void read(const std::string& key, std::optional<T>& target)
    {
        if (auto v = get<T>(key)) target = *v;
    }

    ObjectReader child(const std::string& key)
    {
        const json* v = raw(key);
        static const json empty = json::object();
        return ObjectReader(v && !v->is_null() ? *v : empty, where(key));
    }

    void finish() const
    {
        for (const auto& [key, _] : obj_.items())
            if (!seen_.count(key)) fail(where(key), "unknown key");
    }

    std::string where(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

    [[noreturn]] static void fail(const std::string& where, const std::string& what)
    {
        throw ValidationError("config: " + where + ": " + what);
    }

private:
    template <class T>
    static T convert(const json& v, const std::string& where)
    {
        if constexpr (std::is_same_v<T, bool>) {
            if (!v.is_boolean()) fail(where, "expected a boolean");
            return v.get<bool>();
        } else if constexpr (std::is_same_v<T, std::string>) {
            if (!v.is_string()) fail(where, "expected a string");
            return v.get<std::string>();
        } else if constexpr (std::is_integral_v<T>) {
            if (!v.is_number_integer()) fail(where, "expected an integer");
            if constexpr (std::is_unsigned_v<T>)
                if (v.get<std::int64_t>() < 0) fail(where, "must not be negative");
            return v.get<T>();
        } else {
            if (!v.is_number()) fail(where, "expected a number");
            const double d = v.get<double>();
            if (!std::isfinite(d)) fail(where, "must be finite");
            return d;
        }
    }

    const json& obj_;
    std::string path_;
    std::set<std::string> seen_;
};

template <class Enum, std::size_t N>
Enum parse_enum(const std::string& text, const std::array<Enum, N>& values, const std::string& where)
{
    for (Enum v : values)
        if (to_string(v) == text) return v;
    std::string allowed;
    for (Enum v : values) allowed += (allowed.empty() ? "" : ", ") + std::string(to_string(v));
    ObjectReader::fail(where, "'" + text + "' is not one of: " + allowed);
}

constexpr std::array kinds{PotentialKind::ponderomotive, PotentialKind::lightshift};
constexpr std::array fields{FieldConvention::standing_wave, FieldConvention::travelling_wave};
constexpr std::array shapes{EnvelopeShape::rectangular, EnvelopeShape::gaussian};
constexpr std::array samplings{PositionSampling::uniform_random, PositionSampling::uniform_grid,
                               PositionSampling::explicit_list};
constexpr std::array bessels{BesselConvention::coupled_equations, BesselConvention::printed};

std::vector<ResonanceLine> parse_lines(const json& arr, const std::string& where)
{
    if (!arr.is_array()) ObjectReader::fail(where, "expected an array");
    std::vector<ResonanceLine> lines;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        ObjectReader r(arr[i], where + "[" + std::to_string(i) + "]");
        const auto wl = r.get<double>("wavelength_nm");
        const double weight = r.get<double>("weight").value_or(1.0);
        r.finish();
        if (!wl) ObjectReader::fail(r.where("wavelength_nm"), "required");
        if (!(*wl > 0.0)) ObjectReader::fail(r.where("wavelength_nm"), "must be positive");
        if (!(weight > 0.0)) ObjectReader::fail(r.where("weight"), "must be positive");
        lines.push_back(line_from_wavelength(*wl * units::nm, weight));
    }
    return lines;
}

json lines_to_json(const std::vector<ResonanceLine>& lines)
{
    json arr = json::array();
    for (const auto& l : lines)
        arr.push_back({{"wavelength_nm", line_wavelength(l) / units::nm}, {"weight", l.weight}});
    return arr;
}

void parse_particle(RunConfig& cfg, const json* node)
{
    if (!node || node->is_null()) return;
    auto& p = cfg.particle;
    if (node->is_string()) {
        p.builtin = node->get<std::string>();
        find_builtin_particle(p.builtin);
        return;
    }
    ObjectReader r(*node, "particle");
    const auto builtin = r.get<std::string>("builtin");
    r.read("name", p.name);
    r.read("mass_kg", p.mass_kg);
    r.read("charge_C", p.charge_C);
    r.read("line_list", p.line_list);
    if (const json* lines = r.raw("lines"); lines && !lines->is_null())
        p.lines = parse_lines(*lines, "particle.lines");
    r.finish();

    if (builtin) {
        if (p.mass_kg || p.charge_C)
            ObjectReader::fail("particle", "give either 'builtin' or mass_kg/charge_C, not both");
        p.builtin = *builtin;
        find_builtin_particle(p.builtin);
    } else if (p.mass_kg || p.charge_C) {
        p.builtin.clear();
    }
    if (p.builtin.empty()) {
        if (!p.mass_kg) ObjectReader::fail("particle.mass_kg", "required without 'builtin'");
        if (!(*p.mass_kg > 0.0)) ObjectReader::fail("particle.mass_kg", "must be positive");
        if (!p.charge_C) p.charge_C = 0.0;
        if (p.name.empty()) p.name = "custom";
    }
}

}  // namespace

std::string_view to_string(Command command)
{
    for (const auto& [c, name] : command_names)
        if (c == command) return name;
    return "?";
}

Command parse_command(std::string_view name)
{
    for (const auto& [c, n] : command_names)
        if (n == name) return c;
    throw ValidationError("config: command: unknown command '" + std::string(name) + "'");
}

RunConfig parse_config(const json& doc)
{
    RunConfig cfg;
    ObjectReader top(doc, "");

    if (auto cmd = top.get<std::string>("command")) cfg.command = parse_command(*cmd);
    parse_particle(cfg, top.raw("particle"));

    {
        auto r = top.child("beam");
        r.read("wavelength_nm", cfg.beam.wavelength_nm);
        r.read("intensity_W_m2", cfg.beam.intensity_W_m2);
        r.read("waist_m", cfg.beam.waist_m);
        r.read("height_m", cfg.beam.height_m);
        r.finish();
        if (!(cfg.beam.wavelength_nm > 0.0)) ObjectReader::fail("beam.wavelength_nm", "must be positive");
        if (cfg.beam.intensity_W_m2 < 0.0) ObjectReader::fail("beam.intensity_W_m2", "must not be negative");
        if (cfg.beam.waist_m < 0.0) ObjectReader::fail("beam.waist_m", "must not be negative");
        if (!(cfg.beam.height_m > 0.0)) ObjectReader::fail("beam.height_m", "must be positive");
    }

    top.read("velocity_m_s", cfg.velocity_m_s);
    top.read("energy_eV", cfg.energy_eV);
    if (cfg.velocity_m_s && cfg.energy_eV)
        ObjectReader::fail("velocity_m_s", "give either velocity_m_s or energy_eV, not both");
    if (cfg.velocity_m_s && !(*cfg.velocity_m_s > 0.0)) ObjectReader::fail("velocity_m_s", "must be positive");
    if (cfg.energy_eV && !(*cfg.energy_eV > 0.0)) ObjectReader::fail("energy_eV", "must be positive");

    {
        auto r = top.child("potential");
        if (auto s = r.get<std::string>("kind")) cfg.potential.kind = parse_enum(*s, kinds, "potential.kind");
        if (auto s = r.get<std::string>("field_convention"))
            cfg.potential.field = parse_enum(*s, fields, "potential.field_convention");
        if (auto s = r.get<std::string>("envelope"))
            cfg.potential.envelope = parse_enum(*s, shapes, "potential.envelope");
        r.read("depth_J", cfg.potential.depth_J);
        r.finish();
    }

    {
        auto& s = cfg.solver;
        auto r = top.child("solver");
        r.read("total_time_s", s.total_time_s);
        r.read("max_step_s", s.max_step_s);
        r.read("norm_tolerance", s.norm_tolerance);
        r.read("amplitude_tolerance", s.amplitude_tolerance);
        r.read("boundary_tolerance", s.boundary_tolerance);
        r.read("samples", s.samples);
        r.read("initial_order", s.initial_order);
        r.read("offset", s.offset);
        r.read("half_width", s.half_width);
        r.read("include_diagonal_offset", s.include_diagonal_offset);
        if (auto b = r.get<std::string>("bessel_convention"))
            s.bessel = parse_enum(*b, bessels, "solver.bessel_convention");
        r.finish();
        if (s.total_time_s && !(*s.total_time_s > 0.0)) ObjectReader::fail("solver.total_time_s", "must be positive");
        if (s.max_step_s < 0.0) ObjectReader::fail("solver.max_step_s", "must not be negative");
        if (!(s.norm_tolerance > 0.0)) ObjectReader::fail("solver.norm_tolerance", "must be positive");
        if (!(s.amplitude_tolerance > 0.0)) ObjectReader::fail("solver.amplitude_tolerance", "must be positive");
        if (!(s.boundary_tolerance > 0.0)) ObjectReader::fail("solver.boundary_tolerance", "must be positive");
        if (s.samples < 1) ObjectReader::fail("solver.samples", "must be at least 1");
        if (s.half_width && *s.half_width < 1) ObjectReader::fail("solver.half_width", "must be at least 1");
    }

    {
        auto& e = cfg.ensemble;
        auto r = top.child("ensemble");
        r.read("trajectories", e.trajectories);
        if (auto s = r.get<std::string>("sampling")) e.sampling = parse_enum(*s, samplings, "ensemble.sampling");
        r.read("bins", e.bins);
        r.read("angle_range_rad", e.angle_range_rad);
        r.read("path_x0_m", e.path_x0_m);
        r.finish();
        if (e.trajectories < 1) ObjectReader::fail("ensemble.trajectories", "must be at least 1");
        if (e.sampling == PositionSampling::explicit_list)
            ObjectReader::fail("ensemble.sampling", "explicit_list is not available from the command line");
        if (e.bins < 1) ObjectReader::fail("ensemble.bins", "must be at least 1");
        if (e.angle_range_rad < 0.0) ObjectReader::fail("ensemble.angle_range_rad", "must not be negative");
    }

    {
        auto& c = cfg.classify;
        auto r = top.child("classify");
        r.read("U_hz", c.U_hz);
        r.read("inv_dt_hz", c.inv_dt_hz);
        r.read("epsilon_hz", c.epsilon_hz);
        r.read("u_min", c.u_min);
        r.read("u_max", c.u_max);
        r.read("s_min", c.s_min);
        r.read("s_max", c.s_max);
        r.read("grid_points", c.grid_points);
        r.finish();
        const int given = int(c.U_hz.has_value()) + int(c.inv_dt_hz.has_value()) + int(c.epsilon_hz.has_value());
        if (given != 0 && given != 3)
            ObjectReader::fail("classify", "U_hz, inv_dt_hz and epsilon_hz must be given together");
        if (!(c.u_min > 0.0 && c.u_max > c.u_min)) ObjectReader::fail("classify.u_min", "need 0 < u_min < u_max");
        if (!(c.s_min > 0.0 && c.s_max > c.s_min)) ObjectReader::fail("classify.s_min", "need 0 < s_min < s_max");
        if (c.grid_points < 2) ObjectReader::fail("classify.grid_points", "must be at least 2");
    }

    {
        auto& s = cfg.sagnac;
        auto r = top.child("sagnac");
        r.read("k_g", s.k_g);
        r.read("length_m", s.length_m);
        r.read("speed_m_s", s.speed_m_s);
        r.read("contrast", s.contrast);
        r.read("count_rate", s.count_rate);
        r.read("density_kg_m3", s.density_kg_m3);
        r.read("transit_time_s", s.transit_time_s);
        r.finish();
    }

    {
        auto& t = cfg.tables;
        auto r = top.child("tables");
        r.read("id", t.id);
        r.read("species", t.species);
        r.read("line_list", t.line_list);
        r.read("velocity_m_s", t.velocity_m_s);
        r.finish();
        if (t.id != "1" && t.id != "2" && t.id != "3" && t.id != "all")
            ObjectReader::fail("tables.id", "'" + t.id + "' is not one of: 1, 2, 3, all");
    }

    {
        auto& f = cfg.figure;
        auto r = top.child("figure");
        r.read("id", f.id);
        r.read("samples", f.samples);
        r.read("scan_points", f.scan_points);
        r.read("trajectories", f.trajectories);
        r.finish();
        if (!f.id.empty() && f.id != "7-left" && f.id != "7-right" && f.id != "5" && f.id != "8")
            ObjectReader::fail("figure.id", "'" + f.id + "' is not one of: 7-left, 7-right, 5, 8");
        if (f.samples < 1) ObjectReader::fail("figure.samples", "must be at least 1");
        if (f.scan_points < 0) ObjectReader::fail("figure.scan_points", "must not be negative");
        if (f.trajectories < 1) ObjectReader::fail("figure.trajectories", "must be at least 1");
    }

    {
        auto r = top.child("output");
        r.read("dir", cfg.output.dir);
        r.read("prefix", cfg.output.prefix);
        r.finish();
        if (cfg.output.prefix.find('/') != std::string::npos)
            ObjectReader::fail("output.prefix", "must not contain '/'");
    }

    top.read("seed", cfg.seed);
    top.finish();
    return cfg;
}

json to_json(const RunConfig& cfg)
{
    auto opt = [](const auto& o) -> json { return o ? json(*o) : json(nullptr); };
    json j;
    j["command"] = to_string(cfg.command);

    const auto& p = cfg.particle;
    json particle;
    if (!p.builtin.empty()) particle["builtin"] = p.builtin;
    if (!p.name.empty()) particle["name"] = p.name;
    particle["mass_kg"] = opt(p.mass_kg);
    particle["charge_C"] = opt(p.charge_C);
    particle["lines"] = lines_to_json(p.lines);
    particle["line_list"] = p.line_list;
    j["particle"] = particle;

    j["beam"] = {{"wavelength_nm", cfg.beam.wavelength_nm},
                 {"intensity_W_m2", cfg.beam.intensity_W_m2},
                 {"waist_m", cfg.beam.waist_m},
                 {"height_m", cfg.beam.height_m}};
    j["velocity_m_s"] = opt(cfg.velocity_m_s);
    j["energy_eV"] = opt(cfg.energy_eV);
    j["potential"] = {
        {"kind", cfg.potential.kind ? json(to_string(*cfg.potential.kind)) : json(nullptr)},
        {"field_convention", to_string(cfg.potential.field)},
        {"envelope", to_string(cfg.potential.envelope)},
        {"depth_J", opt(cfg.potential.depth_J)}};

    const auto& s = cfg.solver;
    j["solver"] = {{"total_time_s", opt(s.total_time_s)},
                   {"max_step_s", s.max_step_s},
                   {"norm_tolerance", s.norm_tolerance},
                   {"amplitude_tolerance", s.amplitude_tolerance},
                   {"boundary_tolerance", s.boundary_tolerance},
                   {"samples", s.samples},
                   {"initial_order", s.initial_order},
                   {"offset", s.offset},
                   {"half_width", opt(s.half_width)},
                   {"include_diagonal_offset", s.include_diagonal_offset},
                   {"bessel_convention", to_string(s.bessel)}};

    const auto& e = cfg.ensemble;
    j["ensemble"] = {{"trajectories", e.trajectories},
                     {"sampling", to_string(e.sampling)},
                     {"bins", e.bins},
                     {"angle_range_rad", e.angle_range_rad},
                     {"path_x0_m", opt(e.path_x0_m)}};

    const auto& c = cfg.classify;
    j["classify"] = {{"U_hz", opt(c.U_hz)},     {"inv_dt_hz", opt(c.inv_dt_hz)},
                     {"epsilon_hz", opt(c.epsilon_hz)}, {"u_min", c.u_min},
                     {"u_max", c.u_max},        {"s_min", c.s_min},
                     {"s_max", c.s_max},        {"grid_points", c.grid_points}};

    const auto& g = cfg.sagnac;
    j["sagnac"] = {{"k_g", g.k_g},
                   {"length_m", g.length_m},
                   {"speed_m_s", g.speed_m_s},
                   {"contrast", g.contrast},
                   {"count_rate", g.count_rate},
                   {"density_kg_m3", opt(g.density_kg_m3)},
                   {"transit_time_s", opt(g.transit_time_s)}};

    j["tables"] = {{"id", cfg.tables.id},
                   {"species", cfg.tables.species},
                   {"line_list", cfg.tables.line_list},
                   {"velocity_m_s", opt(cfg.tables.velocity_m_s)}};
    j["figure"] = {{"id", cfg.figure.id},
                   {"samples", cfg.figure.samples},
                   {"scan_points", cfg.figure.scan_points},
                   {"trajectories", cfg.figure.trajectories}};
    j["output"] = {{"dir", cfg.output.dir}, {"prefix", cfg.output.prefix}};
    j["seed"] = cfg.seed;
    return j;
}

Particle resolve_particle(const ParticleOptions& options)
{
    Particle particle;
    if (!options.builtin.empty()) {
        particle = find_builtin_particle(options.builtin).particle();
    } else {
        particle.name = options.name;
        particle.mass = options.mass_kg.value_or(0.0);
        particle.charge = options.charge_C.value_or(0.0);
    }
    if (!options.name.empty()) particle.name = options.name;
    particle.lines = options.lines;
    if (!options.line_list.empty()) {
        auto file = load_line_list(options.line_list);
        particle.lines.insert(particle.lines.end(), file.lines.begin(), file.lines.end());
    }
    particle.validate();
    return particle;
}

std::optional<double> resolve_velocity(const RunConfig& cfg, const Particle& particle)
{
    if (cfg.velocity_m_s) return cfg.velocity_m_s;
    if (cfg.energy_eV) return velocity_from_kinetic_energy(*cfg.energy_eV * units::electron_volt, particle.mass);
    return std::nullopt;
}

}  // namespace kdsim::cli
