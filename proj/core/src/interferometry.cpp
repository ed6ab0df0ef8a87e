#include "kdsim/interferometry.hpp"

#include <cmath>

#include "kdsim/constants.hpp"
#include "kdsim/error.hpp"

namespace kdsim {

void SagnacConfig::validate() const
{
    detail::require(k_g > 0.0, "grating vector must be positive");
    detail::require(L > 0.0, "grating separation must be positive");
    detail::require(v > 0.0, "particle velocity must be positive");
    detail::require(contrast > 0.0 && contrast <= 1.0, "contrast must be in (0, 1]");
    detail::require(count_rate > 0.0, "count rate must be positive");
}

double sagnac_resolution(const SagnacConfig& cfg)
{
    detail::require(cfg.k_g > 0.0 && cfg.L > 0.0 && cfg.v > 0.0,
                    "resolution needs positive k_g, L and v");
    return cfg.k_g * cfg.L * cfg.L / cfg.v;
}

SagnacSensitivity sagnac_sensitivity(const SagnacConfig& cfg)
{
    cfg.validate();
    const double s = 1.0 / (sagnac_resolution(cfg) * cfg.contrast * std::sqrt(cfg.count_rate));
    return {s, s / constants.earth_rotation};
}

double molecule_transit_bound(double density, double size)
{
    detail::require(density > 0.0 && size > 0.0, "density and size must be positive");
    const double mass = density * size * size * size;
    return mass * size * size / constants.planck_h;
}

double size_for_transit(double density, double transit_time)
{
    detail::require(density > 0.0 && transit_time > 0.0, "density and transit time must be positive");
    return std::pow(transit_time * constants.planck_h / density, 0.2);
}

}  // namespace kdsim
