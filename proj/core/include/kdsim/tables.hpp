#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kdsim/kinematics.hpp"
#include "kdsim/potentials.hpp"

namespace kdsim {

struct TableRow {
    std::string table;     // "1", "2", "3"
    std::string row;       // row label (point id, species, regime)
    std::string quantity;
    std::string unit;
    double computed = 0.0;
    std::optional<double> published;
    double ratio = 0.0;    // computed / published, NaN when unpublished
    std::string note;
};

/// Species for the high-intensity lightshift table; lines come from the user.
struct LightshiftRowRequest {
    std::string species;
    std::vector<ResonanceLine> lines;
    double velocity = 0.0;  // m/s, sets tau = w / v
};

struct TableRequest {
    bool table1 = false;
    bool table3 = false;
    std::vector<LightshiftRowRequest> table2;
};

/// 488 nm, 1e7 W/m^2, 100 um x 1 mm: the beam shared by all lightshift rows.
LaserBeam lightshift_table_beam();

/// Published U tau value for a lightshift-table species; nullopt if unknown.
std::optional<double> lightshift_table_published(const std::string& species);

/// Electron rows: {bragg, diffractive} beams of the proposal table.
struct ElectronProposal {
    std::string row;
    LaserBeam beam;
    double velocity = 0.0;
    double published_rate = 0.0;     // V_p / hbar as printed
    double published_product = 0.0;  // V_p dt / hbar as printed
};

std::vector<ElectronProposal> electron_proposals();

std::vector<TableRow> reproduce_table1();
std::vector<TableRow> reproduce_table2(const LightshiftRowRequest& request);
std::vector<TableRow> reproduce_table3();
std::vector<TableRow> reproduce_tables(const TableRequest& request);

}  // namespace kdsim
