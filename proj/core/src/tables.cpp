#include "kdsim/tables.hpp"

#include <cmath>
#include <limits>

#include "kdsim/catalogue.hpp"
#include "kdsim/constants.hpp"
#include "kdsim/error.hpp"
#include "kdsim/regime.hpp"

namespace kdsim {

namespace {

TableRow make_row(std::string table, std::string row, std::string quantity, std::string unit,
                  double computed, std::optional<double> published, std::string note = {})
{
    const double ratio = published && *published != 0.0 ? computed / *published
                                                          : std::numeric_limits<double>::quiet_NaN();
    return {std::move(table), std::move(row), std::move(quantity), std::move(unit), computed,
            published, ratio, std::move(note)};
}

}  // namespace

LaserBeam lightshift_table_beam()
{
    return {488.0 * units::nm, 1e7, 100.0 * units::um, 1e-3};
}

std::optional<double> lightshift_table_published(const std::string& species)
{
    if (species == "Na") return 0.4;
    if (species == "Ar*") return 0.4;
    if (species == "Ca+") return 0.1;
    if (species == "Li+") return 0.1;
    if (species == "Ba+") return 2.5;
    return std::nullopt;
}

std::vector<ElectronProposal> electron_proposals()
{
    const double lambda = 1064.0 * units::nm;
    return {
        {"bragg", {lambda, 1e2 * units::GW_per_m2, 0.5 * units::cm, 1e-3}, 2e6, 1e9, 2.0},
        {"diffractive", {lambda, 1e4 * units::GW_per_m2, 0.005 * units::cm, 1e-3}, 2e6, 1e11, 2.0},
    };
}

std::vector<TableRow> reproduce_table1()
{
    std::vector<TableRow> rows;
    for (const auto& sp : survey_points()) {
        const auto& particle = find_builtin_particle(sp.species);
        const double eps = recoil_frequency(particle.mass, *particle.recoil_wavelength);
        rows.push_back(make_row("1", sp.id, "epsilon/2pi (" + sp.species + ")", "Hz",
                                angular_to_cyclic(eps), sp.epsilon_hz));
        const auto coords = regime_coordinates(sp.point());
        const auto label = classify_regime(coords);
        rows.push_back(make_row("1", sp.id, "U/eps", "1", coords.u_over_eps, std::nullopt));
        rows.push_back(make_row("1", sp.id, "1/(eps dt)", "1", coords.inv_eps_dt, std::nullopt,
                                std::string("regime=") + std::string(to_string(label)) + " expected="
                                    + std::string(to_string(sp.expected))));
    }
    return rows;
}

std::vector<TableRow> reproduce_table2(const LightshiftRowRequest& request)
{
    if (request.lines.empty())
        throw ValidationError("lightshift table row '" + request.species + "' requires a line list");
    detail::require(request.velocity > 0.0, "lightshift table row '" + request.species
                                                + "' requires a positive velocity");
    const auto beam = lightshift_table_beam();
    Particle particle{request.species, 1.0, 0.0, request.lines};
    const double depth = multiline_lightshift(beam, particle);
    const double tau = interaction_time(beam.waist, request.velocity);
    const double u_hz = std::abs(depth) / constants.planck_h;
    return {
        make_row("2", request.species, "U", "Hz", u_hz, std::nullopt,
                 depth < 0.0 ? "attractive (below resonance)" : "repulsive (above resonance)"),
        make_row("2", request.species, "U*tau", "1", u_hz * tau, lightshift_table_published(request.species)),
    };
}

std::vector<TableRow> reproduce_table3()
{
    std::vector<TableRow> rows;
    for (const auto& p : electron_proposals()) {
        const double vp = ponderomotive_depth(p.beam, constants.elementary_charge, constants.electron_mass);
        const double dt = interaction_time(p.beam.waist, p.velocity);
        rows.push_back(make_row("3", p.row, "V_p/hbar", "rad/s", vp / constants.hbar, p.published_rate));
        rows.push_back(make_row("3", p.row, "V_p dt/hbar", "1", critical_parameter(vp, dt), p.published_product));
    }
    return rows;
}

std::vector<TableRow> reproduce_tables(const TableRequest& request)
{
    std::vector<TableRow> rows;
    if (request.table1)
        for (auto& r : reproduce_table1()) rows.push_back(std::move(r));
    for (const auto& req : request.table2)
        for (auto& r : reproduce_table2(req)) rows.push_back(std::move(r));
    if (request.table3)
        for (auto& r : reproduce_table3()) rows.push_back(std::move(r));
    return rows;
}

}  // namespace kdsim
