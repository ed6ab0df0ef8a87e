#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kdsim {

/// A point on the (U/eps, 1/(eps dt)) plane. All rates in rad/s.
struct RegimePoint {
    double U = 0.0;       // potential depth V0 / hbar
    double inv_dt = 0.0;  // 1 / interaction time
    double epsilon = 0.0; // recoil frequency
    std::string label;    // optional published label

    void validate() const;
};

struct RegimeCoordinates {
    double u_over_eps = 0.0;   // U / eps
    double inv_eps_dt = 0.0;   // 1 / (eps dt)

    /// U dt.
    double critical() const { return u_over_eps / inv_eps_dt; }
    /// Small-oscillation phase omega_osc dt = 2 sqrt(U eps) dt.
    double oscillation_phase() const;
};

enum class RegimeLabel { negligible, diffractive, bragg, channelling, lens };

std::string_view to_string(RegimeLabel label);
/// Rank along negligible < {diffractive, bragg} < {lens, channelling}.
int regime_rank(RegimeLabel label);

/// Decision boundaries, all on dimensionless combinations.
///
///   negligible   U dt < negligible_critical
///   diffractive  omega_osc dt < diffractive_phase   (interaction shorter than a well oscillation)
///   deep wells   U / eps > deep_well_ratio:
///                  lens         omega_osc dt <  lens_max_phase  (less than half an oscillation)
///                  channelling  otherwise
///   bragg        everything else
struct RegimeThresholds {
    double negligible_critical = 0.1;
    double diffractive_phase = 0.2;
    double deep_well_ratio = 100.0;
    double lens_max_phase = 3.14159265358979323846;
};

RegimeCoordinates regime_coordinates(const RegimePoint& point);
RegimeLabel classify_regime(const RegimeCoordinates& coords, const RegimeThresholds& thresholds = {});
RegimeLabel classify_regime(const RegimePoint& point, const RegimeThresholds& thresholds = {});

/// V0 dt / hbar.
double critical_parameter(double V0, double dt);

/// Survey point with its published scattering description.
struct SurveyPoint {
    std::string id;       // A .. I
    std::string species;
    double U_hz = 0.0;    // as tabulated, cyclic
    double inv_dt_hz = 0.0;
    double epsilon_hz = 0.0;
    RegimeLabel expected = RegimeLabel::bragg;

    /// Converts the tabulated cyclic values to rad/s.
    RegimePoint point() const;
};

std::span<const SurveyPoint> survey_points();

struct RegimeMapCell {
    double u_over_eps = 0.0;
    double inv_eps_dt = 0.0;
    RegimeLabel label = RegimeLabel::negligible;
};

/// Log-spaced grid, `per_axis` points per axis, inclusive of both ends.
std::vector<RegimeMapCell> regime_map(double u_min, double u_max, double s_min, double s_max,
                                      int per_axis, const RegimeThresholds& thresholds = {});

}  // namespace kdsim
