#include "kdsim/regime.hpp"

#include <cmath>

#include "kdsim/constants.hpp"
#include "kdsim/error.hpp"
#include "kdsim/kinematics.hpp"

namespace kdsim {

void RegimePoint::validate() const
{
    detail::require(U >= 0.0 && inv_dt >= 0.0 && epsilon >= 0.0, "regime rates must be non-negative");
    detail::require(epsilon > 0.0, "recoil frequency must be positive");
    detail::require(inv_dt > 0.0, "interaction time must be positive and finite");
}

double RegimeCoordinates::oscillation_phase() const
{
    return 2.0 * std::sqrt(u_over_eps) / inv_eps_dt;
}

std::string_view to_string(RegimeLabel label)
{
    switch (label) {
    case RegimeLabel::negligible: return "negligible";
    case RegimeLabel::diffractive: return "diffractive";
    case RegimeLabel::bragg: return "bragg";
    case RegimeLabel::channelling: return "channelling";
    case RegimeLabel::lens: return "lens";
    }
    return "unknown";
}

int regime_rank(RegimeLabel label)
{
    switch (label) {
    case RegimeLabel::negligible: return 0;
    case RegimeLabel::diffractive:
    case RegimeLabel::bragg: return 1;
    case RegimeLabel::lens:
    case RegimeLabel::channelling: return 2;
    }
    return -1;
}

RegimeCoordinates regime_coordinates(const RegimePoint& point)
{
    point.validate();
    return {point.U / point.epsilon, point.inv_dt / point.epsilon};
}

RegimeLabel classify_regime(const RegimeCoordinates& c, const RegimeThresholds& th)
{
    if (c.critical() < th.negligible_critical) return RegimeLabel::negligible;
    const double phase = c.oscillation_phase();
    if (phase < th.diffractive_phase) return RegimeLabel::diffractive;
    if (c.u_over_eps > th.deep_well_ratio)
        return phase < th.lens_max_phase ? RegimeLabel::lens : RegimeLabel::channelling;
    return RegimeLabel::bragg;
}

RegimeLabel classify_regime(const RegimePoint& point, const RegimeThresholds& thresholds)
{
    return classify_regime(regime_coordinates(point), thresholds);
}

double critical_parameter(double V0, double dt) { return V0 * dt / constants.hbar; }

RegimePoint SurveyPoint::point() const
{
    return {cyclic_to_angular(U_hz), cyclic_to_angular(inv_dt_hz), cyclic_to_angular(epsilon_hz), id};
}

std::span<const SurveyPoint> survey_points()
{
    using L = RegimeLabel;
    static const std::vector<SurveyPoint> points = {
        {"A", "Na", 0.35e6, 0.15e6, 24e3, L::bragg},
        {"B", "Ne*", 0.10e6, 0.1e6, 24e3, L::bragg},
        {"C", "Ar*", 0.023e6, 0.02e6, 7.5e3, L::bragg},
        {"D", "Na", 18.6e6, 14e6, 24e3, L::diffractive},
        {"E", "Ar*", 1.65e6, 10e6, 7.5e3, L::diffractive},
        {"F", "Cs", 45e6, 0.150e6, 12e3, L::channelling},
        {"G", "Li", 2188e6, 0.12e6, 37e3, L::channelling},
        {"H", "Cr", 100e6, 5e6, 20e3, L::lens},
        {"I", "Rb", 1500e6, 0.01e6, 3.5e3, L::channelling},
    };
    return points;
}

std::vector<RegimeMapCell> regime_map(double u_min, double u_max, double s_min, double s_max,
                                      int per_axis, const RegimeThresholds& thresholds)
{
    detail::require(u_min > 0.0 && u_max > u_min, "regime map: need 0 < u_min < u_max");
    detail::require(s_min > 0.0 && s_max > s_min, "regime map: need 0 < s_min < s_max");
    detail::require(per_axis >= 2, "regime map: need at least two points per axis");
    std::vector<RegimeMapCell> cells;
    cells.reserve(static_cast<std::size_t>(per_axis) * static_cast<std::size_t>(per_axis));
    const double lu0 = std::log10(u_min), lu1 = std::log10(u_max);
    const double ls0 = std::log10(s_min), ls1 = std::log10(s_max);
    for (int i = 0; i < per_axis; ++i) {
        const double u = std::pow(10.0, lu0 + (lu1 - lu0) * i / (per_axis - 1));
        for (int j = 0; j < per_axis; ++j) {
            const double s = std::pow(10.0, ls0 + (ls1 - ls0) * j / (per_axis - 1));
            cells.push_back({u, s, classify_regime(RegimeCoordinates{u, s}, thresholds)});
        }
    }
    return cells;
}

}  // namespace kdsim
