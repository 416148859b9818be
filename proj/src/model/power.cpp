#include "model/power.hpp"

#include <cmath>

namespace ehplan {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kWattsPerMw = 1e6;
}  // namespace

double annualization_coefficient(double discount_rate, int lifetime_years) {
    if (discount_rate <= 0.0) throw data_error("annualization needs a positive discount rate");
    if (lifetime_years < 1) throw data_error("annualization needs lifetime >= 1 year");
    const double g = std::pow(1.0 + discount_rate, lifetime_years);
    return discount_rate * g / (g - 1.0);
}

double wind_power_max(const ResModuleSpec& spec, double wind_speed) {
    if (spec.kind != ResKind::WT) throw data_error("wind_power_max called with a non-WT spec: " + spec.id);
    if (wind_speed < 0.0) throw data_error("negative wind speed");
    if (wind_speed < spec.cut_in || wind_speed >= spec.cut_out) return 0.0;
    const double v = std::min(wind_speed, spec.rated_speed);
    const double watts =
        0.5 * spec.air_density * v * v * v * spec.swept_area * spec.conversion_eff;
    return watts / kWattsPerMw;
}

double pv_power_max(const ResModuleSpec& spec, double irradiance) {
    if (spec.kind != ResKind::PV) throw data_error("pv_power_max called with a non-PV spec: " + spec.id);
    if (irradiance < 0.0) throw data_error("negative irradiance");
    const double watts = irradiance * std::cos(spec.tilt_angle_deg * kPi / 180.0) *
                         spec.panel_area * spec.mppt_eff * spec.panel_eff;
    return std::max(watts, 0.0) / kWattsPerMw;
}

double res_power_max(const ResModuleSpec& spec, const Scenario& sc, int step) {
    return spec.kind == ResKind::WT ? wind_power_max(spec, sc.wind_speed[step])
                                    : pv_power_max(spec, sc.irradiance[step]);
}

}  // namespace ehplan
