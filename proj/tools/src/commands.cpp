#include <algorithm>
#include <cmath>
#include <vector>

#include "app.hpp"
#include "kdsim/catalogue.hpp"
#include "kdsim/classical.hpp"
#include "kdsim/constants.hpp"
#include "kdsim/csv.hpp"
#include "kdsim/error.hpp"
#include "kdsim/figure7.hpp"
#include "kdsim/interferometry.hpp"
#include "kdsim/line_list.hpp"
#include "kdsim/regime.hpp"
#include "kdsim/tables.hpp"

namespace kdsim::cli {

namespace {

using kdsim::format_number;

std::string num(double v) { return format_number(v); }

// Each CSV carries the same self-describing header lines.
CsvTable make_csv(const RunConfig& cfg, std::vector<std::string> columns)
{
    CsvTable t(std::move(columns));
    t.add_metadata("command", std::string(to_string(cfg.command)));
    t.add_metadata("frequency_convention", "angular");
    t.add_metadata("bessel_convention", std::string(to_string(cfg.solver.bessel)));
    t.add_metadata("field_convention", std::string(to_string(cfg.potential.field)));
    t.add_metadata("seed", std::to_string(cfg.seed));
    return t;
}

// Particle, beam and potential resolved from the config.
struct Setup {
    Particle particle;
    LaserBeam beam;
    std::optional<double> velocity;
    std::optional<double> dt;
    PotentialSpec potential;  // envelope set only when dt is known
    double epsilon = 0.0;
};

Setup make_setup(const RunConfig& cfg)
{
    Setup s;
    s.particle = resolve_particle(cfg.particle);
    s.beam = {cfg.beam.wavelength_nm * units::nm, cfg.beam.intensity_W_m2, cfg.beam.waist_m, cfg.beam.height_m};
    s.velocity = resolve_velocity(cfg, s.particle);
    s.epsilon = recoil_frequency(s.particle.mass, s.beam.wavelength);

    if (cfg.solver.total_time_s)
        s.dt = cfg.solver.total_time_s;
    else if (s.velocity && s.beam.waist > 0.0)
        s.dt = interaction_time(s.beam.waist, *s.velocity);

    const PotentialKind kind = cfg.potential.kind.value_or(
        s.particle.lines.empty() ? PotentialKind::ponderomotive : PotentialKind::lightshift);
    double signed_depth = 0.0;
    if (cfg.potential.depth_J) {
        signed_depth = *cfg.potential.depth_J;
    } else {
        s.beam.validate();
        if (kind == PotentialKind::ponderomotive) {
            detail::require(s.particle.charge != 0.0, "ponderomotive potential needs a charged particle");
            signed_depth = ponderomotive_depth(s.beam, s.particle.charge, s.particle.mass);
        } else {
            signed_depth = multiline_lightshift(s.beam, s.particle, {}, cfg.potential.field);
        }
    }
    s.potential.depth = std::abs(signed_depth);
    s.potential.sign = signed_depth < 0.0 ? -1 : +1;
    s.potential.k = s.beam.k();
    s.potential.kind = kind;
    if (s.dt)
        s.potential.envelope = cfg.potential.envelope == EnvelopeShape::gaussian ? Envelope::gaussian(*s.dt)
                                                                                 : Envelope::rectangular(*s.dt);
    return s;
}

double require_dt(const Setup& s)
{
    if (!s.dt)
        throw ValidationError(
            "interaction time unknown: give solver.total_time_s, or beam.waist_m with velocity_m_s or energy_eV");
    return *s.dt;
}

double require_velocity(const Setup& s)
{
    if (!s.velocity) throw ValidationError("longitudinal speed unknown: give velocity_m_s or energy_eV");
    return *s.velocity;
}

json setup_json(const Setup& s)
{
    json j;
    j["particle"] = {{"name", s.particle.name}, {"mass_kg", s.particle.mass}, {"charge_C", s.particle.charge},
                     {"lines", s.particle.lines.size()}};
    j["potential_kind"] = to_string(s.potential.kind);
    j["depth_J"] = s.potential.signed_depth();
    j["depth_over_h_hz"] = s.potential.signed_depth() / constants.planck_h;
    j["U_rad_s"] = s.potential.depth / constants.hbar;
    j["epsilon_rad_s"] = s.epsilon;
    j["epsilon_hz"] = angular_to_cyclic(s.epsilon);
    j["velocity_m_s"] = s.velocity ? json(*s.velocity) : json(nullptr);
    j["interaction_time_s"] = s.dt ? json(*s.dt) : json(nullptr);
    if (s.dt) {
        const double U = s.potential.depth / constants.hbar;
        RegimePoint pt{U, 1.0 / *s.dt, s.epsilon, ""};
        const auto coords = regime_coordinates(pt);
        j["U_dt"] = coords.critical();
        j["U_over_eps"] = coords.u_over_eps;
        j["inv_eps_dt"] = coords.inv_eps_dt;
        j["omega_osc_dt"] = coords.oscillation_phase();
        j["regime"] = to_string(classify_regime(coords));
    }
    return j;
}

CsvTable timeseries_csv(const RunConfig& cfg, const EvolutionResult& ev)
{
    auto t = make_csv(cfg, {"time_s", "n", "order", "probability"});
    for (const auto& state : ev.samples)
        for (int n = ev.lattice.n_min; n <= ev.lattice.n_max; ++n)
            t.add_row({num(state.time), std::to_string(n), num(0.5 * n), num(state.probability(n))});
    return t;
}

CsvTable spectrum_csv(const RunConfig& cfg, const std::vector<SpectrumRow>& rows)
{
    auto t = make_csv(cfg, {"n", "order", "momentum_hbar_k", "probability"});
    for (const auto& r : rows)
        t.add_row({std::to_string(r.n), num(r.order), num(r.momentum), num(r.probability)});
    return t;
}

CsvTable histogram_csv(const RunConfig& cfg, const DeflectionHistogram& h)
{
    auto t = make_csv(cfg, {"bin_center_rad", "count"});
    for (std::size_t i = 0; i < h.bins(); ++i) t.add_row({num(h.bin_center(i)), std::to_string(h.counts[i])});
    return t;
}

json evolution_json(const EvolutionResult& ev)
{
    return {{"lattice", {{"n_min", ev.lattice.n_min}, {"n_max", ev.lattice.n_max}, {"offset", ev.lattice.offset}}},
            {"norm_drift", ev.norm_drift},
            {"boundary_population", ev.boundary_population},
            {"step_s", ev.step},
            {"steps", ev.steps},
            {"widenings", ev.widenings},
            {"halvings", ev.halvings}};
}

json histogram_json(const DeflectionHistogram& h, const RainbowEstimate& est)
{
    const auto peaks = rainbow_peaks(h);
    return {{"theta_r_rad", est.angle},
            {"omega_osc_dt", est.omega_osc_dt},
            {"impulse_regime", est.impulse_regime},
            {"peak_negative_rad", peaks.negative},
            {"peak_positive_rad", peaks.positive},
            {"bin_width_rad", h.bin_width()},
            {"total", h.total},
            {"out_of_range", h.out_of_range},
            {"max_energy_error", h.max_energy_error}};
}

std::vector<RegimeMapCell> map_for(const ClassifyOptions& c)
{
    return regime_map(c.u_min, c.u_max, c.s_min, c.s_max, c.grid_points);
}

void add_regime_files(const RunConfig& cfg, CommandOutput& out, const std::optional<RegimePoint>& user)
{
    auto map = make_csv(cfg, {"U_over_eps", "inv_eps_dt", "label"});
    for (const auto& cell : map_for(cfg.classify))
        map.add_row({num(cell.u_over_eps), num(cell.inv_eps_dt), std::string(to_string(cell.label))});

    auto pts = make_csv(cfg, {"id", "species", "U_over_eps", "inv_eps_dt", "label", "expected"});
    json survey = json::array();
    for (const auto& sp : survey_points()) {
        const auto coords = regime_coordinates(sp.point());
        const auto label = classify_regime(coords);
        pts.add_row({sp.id, sp.species, num(coords.u_over_eps), num(coords.inv_eps_dt),
                     std::string(to_string(label)), std::string(to_string(sp.expected))});
        survey.push_back({{"id", sp.id}, {"label", to_string(label)}, {"expected", to_string(sp.expected)}});
    }
    if (user) {
        const auto coords = regime_coordinates(*user);
        const auto label = classify_regime(coords);
        pts.add_row({"user", "", num(coords.u_over_eps), num(coords.inv_eps_dt), std::string(to_string(label)), ""});
        out.results["point"] = {{"U_over_eps", coords.u_over_eps},
                                {"inv_eps_dt", coords.inv_eps_dt},
                                {"U_dt", coords.critical()},
                                {"omega_osc_dt", coords.oscillation_phase()},
                                {"label", to_string(label)}};
    }
    out.results["survey"] = survey;
    out.files.push_back({"regime_map.csv", map.str()});
    out.files.push_back({"points.csv", pts.str()});
}

CommandOutput cmd_list(const RunConfig&)
{
    CommandOutput out;
    json particles = json::array();
    for (const auto& p : builtin_particles())
        particles.push_back({{"name", p.name},
                             {"mass_kg", p.mass},
                             {"charge_C", p.charge},
                             {"recoil_wavelength_m", p.recoil_wavelength ? json(*p.recoil_wavelength) : json(nullptr)},
                             {"note", p.note}});
    json presets = json::array();
    for (const auto& p : builtin_presets())
        presets.push_back({{"id", p.id}, {"description", p.description}, {"requires_line_list", p.requires_line_list}});
    out.results["particles"] = particles;
    out.results["presets"] = presets;
    return out;
}

CommandOutput cmd_potential(const RunConfig& cfg)
{
    const auto s = make_setup(cfg);
    CommandOutput out;
    out.results = setup_json(s);

    auto t = make_csv(cfg, {"x_m", "V_J"});
    const double period = s.potential.period();
    constexpr int points = 201;
    PotentialSpec pot = s.potential;
    pot.envelope = Envelope::rectangular(1.0);
    for (int i = 0; i < points; ++i) {
        const double x = period * i / (points - 1);
        t.add_row({num(x), num(pot.value(x, 0.0))});
    }
    out.files.push_back({"potential.csv", t.str()});
    return out;
}

CommandOutput cmd_diffract(const RunConfig& cfg)
{
    const auto s = make_setup(cfg);
    require_dt(s);
    const auto& so = cfg.solver;

    EvolutionConfig ec;
    ec.potential = s.potential;
    ec.total_time = s.potential.envelope.end_time();
    ec.max_step = so.max_step_s;
    ec.norm_tolerance = so.norm_tolerance;
    ec.amplitude_tolerance = so.amplitude_tolerance;
    ec.boundary_tolerance = so.boundary_tolerance;
    ec.include_diagonal_offset = so.include_diagonal_offset;
    ec.samples = so.samples;

    const auto lattice = so.half_width ? ModeLattice::symmetric(*so.half_width, s.epsilon, so.offset)
                                       : default_lattice(s.potential, s.epsilon, so.offset);
    const auto ev = evolve(lattice, ModeAmplitudes::single(so.initial_order), ec);
    const auto spectrum = diffraction_spectrum(ev.final_state());

    CommandOutput out;
    out.results = setup_json(s);
    out.results["evolution"] = evolution_json(ev);
    out.results["pulse_area"] = s.potential.depth * s.potential.envelope.total_area() / constants.hbar;
    if (so.initial_order == 0 && so.offset == 0.0) {
        const auto fit = fit_bessel_family(ev.final_state());
        out.results["bessel_fit"] = {{"argument", fit.argument}, {"max_deviation", fit.max_deviation}};
    }
    out.files.push_back({"timeseries.csv", timeseries_csv(cfg, ev).str()});
    out.files.push_back({"spectrum.csv", spectrum_csv(cfg, spectrum).str()});

    // Closed-form comparison, meaningful for a rectangular pulse from c_0 = 1.
    if (so.initial_order == 0 && so.offset == 0.0 && s.potential.envelope.shape == EnvelopeShape::rectangular) {
        auto t = make_csv(cfg, {"n", "probability", "bessel_probability"});
        const auto& fin = ev.final_state();
        for (int n = ev.lattice.n_min; n <= ev.lattice.n_max; ++n) {
            if (n % 2 != 0) continue;
            const auto c = bessel_solution(n, s.potential.signed_depth(), ec.total_time, so.bessel);
            t.add_row({std::to_string(n), num(fin.probability(n)), num(std::norm(c))});
        }
        out.files.push_back({"bessel.csv", t.str()});
    }
    return out;
}

CommandOutput cmd_trajectories(const RunConfig& cfg)
{
    const auto s = make_setup(cfg);
    require_dt(s);
    TrajectoryConfig tc;
    tc.potential = s.potential;
    tc.mass = s.particle.mass;
    tc.velocity = require_velocity(s);

    EnsembleConfig ens;
    ens.trajectories = cfg.ensemble.trajectories;
    ens.sampling = cfg.ensemble.sampling;
    ens.seed = cfg.seed;
    ens.bins = cfg.ensemble.bins;
    ens.angle_range = cfg.ensemble.angle_range_rad;
    const auto hist = ensemble_histogram(ens, tc);

    CommandOutput out;
    out.results = setup_json(s);
    out.results["histogram"] = histogram_json(hist, rainbow_angle(tc));
    out.files.push_back({"histogram.csv", histogram_csv(cfg, hist).str()});

    if (cfg.ensemble.path_x0_m) {
        auto one = tc;
        one.x0 = *cfg.ensemble.path_x0_m;
        one.record_path = true;
        const auto r = integrate_trajectory(one);
        auto t = make_csv(cfg, {"t_s", "x_m", "vx_m_s"});
        for (const auto& p : r.path) t.add_row({num(p.t), num(p.x), num(p.vx)});
        out.results["path"] = {{"x0_m", one.x0}, {"angle_rad", r.angle}, {"max_energy_error", r.max_energy_error}};
        out.files.push_back({"path.csv", t.str()});
    }
    return out;
}

CommandOutput cmd_classify(const RunConfig& cfg)
{
    CommandOutput out;
    std::optional<RegimePoint> user;
    const auto& c = cfg.classify;
    if (c.U_hz) {
        user = RegimePoint{cyclic_to_angular(*c.U_hz), cyclic_to_angular(*c.inv_dt_hz),
                           cyclic_to_angular(*c.epsilon_hz), ""};
    } else if (cfg.beam.intensity_W_m2 > 0.0 || cfg.potential.depth_J) {
        const auto s = make_setup(cfg);
        user = RegimePoint{s.potential.depth / constants.hbar, 1.0 / require_dt(s), s.epsilon, ""};
        out.results["setup"] = setup_json(s);
    }
    if (user) user->validate();
    add_regime_files(cfg, out, user);
    return out;
}

CommandOutput cmd_sagnac(const RunConfig& cfg)
{
    const auto& g = cfg.sagnac;
    SagnacConfig sc{g.k_g, g.length_m, g.speed_m_s, g.contrast, g.count_rate};
    sc.validate();
    const double R = sagnac_resolution(sc);
    const auto S = sagnac_sensitivity(sc);

    CommandOutput out;
    auto t = make_csv(cfg, {"quantity", "value", "unit"});
    t.add_row({"R", num(R), "s"});
    t.add_row({"S", num(S.rad_per_s_sqrt_hz), "rad s^-1 Hz^-1/2"});
    t.add_row({"S_over_earth_rate", num(S.earth_rate_units), "s^1/2"});
    out.results = {{"resolution_s", R},
                   {"sensitivity_rad_s_sqrt_hz", S.rad_per_s_sqrt_hz},
                   {"sensitivity_earth_units", S.earth_rate_units},
                   {"earth_rotation_rad_s", constants.earth_rotation}};

    if (g.density_kg_m3 || g.transit_time_s) {
        detail::require(g.density_kg_m3 && g.transit_time_s,
                        "molecule bound needs both sagnac.density_kg_m3 and sagnac.transit_time_s");
        const double size = size_for_transit(*g.density_kg_m3, *g.transit_time_s);
        const double atoms = std::pow(size / (0.3 * units::nm), 3);
        t.add_row({"molecule_size", num(size), "m"});
        t.add_row({"atoms_at_0.3nm", num(atoms), "1"});
        out.results["molecule_size_m"] = size;
        out.results["atoms_at_0.3nm"] = atoms;
    }
    out.files.push_back({"sagnac.csv", t.str()});
    return out;
}

CommandOutput tables_output(const RunConfig& cfg, const TableRequest& req, json notes)
{
    const auto rows = reproduce_tables(req);
    auto t = make_csv(cfg, {"table", "row", "quantity", "unit", "computed", "published", "ratio", "note"});
    json arr = json::array();
    for (const auto& r : rows) {
        t.add_row({r.table, r.row, r.quantity, r.unit, num(r.computed), r.published ? num(*r.published) : "",
                   r.published ? num(r.ratio) : "", r.note});
        arr.push_back({{"table", r.table},
                       {"row", r.row},
                       {"quantity", r.quantity},
                       {"unit", r.unit},
                       {"computed", r.computed},
                       {"published", r.published ? json(*r.published) : json(nullptr)},
                       {"ratio", r.published ? json(r.ratio) : json(nullptr)},
                       {"note", r.note}});
    }
    CommandOutput out;
    out.results["rows"] = arr;
    if (!notes.empty()) out.results["notes"] = notes;
    out.files.push_back({"tables.csv", t.str()});
    return out;
}

CommandOutput cmd_tables(const RunConfig& cfg)
{
    const auto& o = cfg.tables;
    TableRequest req;
    req.table1 = o.id == "1" || o.id == "all";
    req.table3 = o.id == "3" || o.id == "all";
    json notes = json::array();
    if (o.id == "2" || o.id == "all") {
        if (o.line_list.empty()) {
            if (o.id == "2") throw ValidationError("table 2 requires a line list (tables.line_list)");
            notes.push_back("table 2 skipped: requires a line list");
        } else {
            auto list = load_line_list(o.line_list);
            LightshiftRowRequest row;
            row.species = o.species.empty() ? list.species : o.species;
            detail::require(!row.species.empty(), "table 2 needs a species name (tables.species or '# species:')");
            row.lines = std::move(list.lines);
            if (!o.velocity_m_s) throw ValidationError("table 2 requires tables.velocity_m_s");
            row.velocity = *o.velocity_m_s;
            req.table2.push_back(std::move(row));
        }
    }
    return tables_output(cfg, req, notes);
}

// Sodium crossing a 589 nm standing wave for a fixed time, with the depth
// chosen so that omega_osc dt = 0.3 (impulse regime).
TrajectoryConfig figure8_trajectory()
{
    const auto& na = find_builtin_particle("Na");
    TrajectoryConfig tc;
    tc.mass = na.mass;
    tc.velocity = 1000.0;
    const double dt = interaction_time(50.0 * units::um, tc.velocity);
    tc.potential.k = units::two_pi / (589.0 * units::nm);
    tc.potential.kind = PotentialKind::lightshift;
    tc.potential.envelope = Envelope::rectangular(dt);
    const double omega_osc = 0.3 / dt;
    const double ratio = omega_osc / tc.potential.k;
    tc.potential.depth = 0.5 * tc.mass * ratio * ratio;
    return tc;
}

CommandOutput cmd_figure(const RunConfig& cfg)
{
    const auto& f = cfg.figure;
    if (f.id.empty()) throw ValidationError("figure id required (7-left, 7-right, 5, 8)");
    CommandOutput out;
    out.results["figure"] = f.id;

    if (f.id == "7-left" || f.id == "7-right") {
        const auto regime = f.id == "7-left" ? Figure7Regime::diffractive : Figure7Regime::bragg;
        const auto r = figure7_run(regime, {f.samples, f.scan_points});
        out.results["preset"] = {{"regime", to_string(regime)},
                                 {"energy_J", r.preset.energy},
                                 {"wavelength_m", r.preset.wavelength},
                                 {"waist_m", r.preset.waist},
                                 {"intensity_W_m2", r.preset.intensity},
                                 {"velocity_m_s", r.preset.velocity},
                                 {"interaction_time_s", r.preset.interaction_time()},
                                 {"initial_order", r.preset.initial_order}};
        out.results["depth_J"] = r.potential.depth;
        out.results["U_rad_s"] = r.potential.depth / constants.hbar;
        out.results["epsilon_rad_s"] = r.epsilon;
        out.results["pulse_area"] = r.potential.depth * r.potential.envelope.total_area() / constants.hbar;
        out.results["evolution"] = evolution_json(r.evolution);
        out.files.push_back({"timeseries.csv", timeseries_csv(cfg, r.evolution).str()});
        out.files.push_back({"spectrum.csv", spectrum_csv(cfg, r.spectrum).str()});
        if (regime == Figure7Regime::diffractive) {
            const auto fit = fit_bessel_family(r.evolution.final_state());
            out.results["bessel_fit"] = {{"argument", fit.argument}, {"max_deviation", fit.max_deviation}};
        }
        if (!r.scan.empty()) {
            auto t = make_csv(cfg, {"intensity_W_m2", "pulse_area", "p_initial", "p_partner", "p_other"});
            std::vector<double> x, y;
            for (const auto& p : r.scan) {
                t.add_row({num(p.intensity), num(p.pulse_area), num(p.p_initial), num(p.p_partner), num(p.p_other)});
                x.push_back(p.pulse_area);
                y.push_back(p.p_partner);
            }
            const auto fit = fit_sin_squared(x, y);
            out.results["sin2_fit"] = {{"rate", fit.rate}, {"phase", fit.phase}, {"r_squared", fit.r_squared}};
            out.files.push_back({"scan.csv", t.str()});
        }
        return out;
    }

    if (f.id == "5") {
        add_regime_files(cfg, out, std::nullopt);
        return out;
    }

    const auto tc = figure8_trajectory();
    EnsembleConfig ens;
    ens.trajectories = f.trajectories;
    ens.sampling = PositionSampling::uniform_grid;
    ens.bins = 201;
    const auto hist = ensemble_histogram(ens, tc);
    out.results["histogram"] = histogram_json(hist, rainbow_angle(tc));
    out.files.push_back({"histogram.csv", histogram_csv(cfg, hist).str()});

    auto paths = make_csv(cfg, {"trajectory", "t_s", "x_m", "vx_m_s"});
    constexpr int shown = 21;
    for (int i = 0; i < shown; ++i) {
        auto one = tc;
        one.x0 = tc.potential.period() * (i + 0.5) / shown;
        one.record_path = true;
        const auto r = integrate_trajectory(one);
        for (const auto& p : r.path) paths.add_row({std::to_string(i), num(p.t), num(p.x), num(p.vx)});
    }
    out.files.push_back({"paths.csv", paths.str()});
    return out;
}

}  // namespace

CommandOutput run_command(const RunConfig& cfg)
{
    switch (cfg.command) {
    case Command::list: return cmd_list(cfg);
    case Command::potential: return cmd_potential(cfg);
    case Command::diffract: return cmd_diffract(cfg);
    case Command::trajectories: return cmd_trajectories(cfg);
    case Command::classify: return cmd_classify(cfg);
    case Command::sagnac: return cmd_sagnac(cfg);
    case Command::tables: return cmd_tables(cfg);
    case Command::figure: return cmd_figure(cfg);
    }
    throw ValidationError("unknown command");
}

json metadata(const RunConfig& cfg, const CommandOutput& out)
{
    json files = json::array();
    for (const auto& f : out.files) files.push_back(f.name);
    return {{"command", to_string(cfg.command)},
            {"conventions",
             {{"frequency", "angular (rad/s); keys ending in _hz are cyclic"},
              {"bessel", to_string(cfg.solver.bessel)},
              {"field", to_string(cfg.potential.field)}}},
            {"config", to_json(cfg)},
            {"results", out.results},
            {"files", files}};
}

}  // namespace kdsim::cli
