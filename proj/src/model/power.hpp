#ifndef EHPLAN_MODEL_POWER_HPP
#define EHPLAN_MODEL_POWER_HPP

#include "model/types.hpp"

namespace ehplan {

// Capital-recovery factor dr(1+dr)^T / ((1+dr)^T - 1).
double annualization_coefficient(double discount_rate, int lifetime_years);

// Available power of one WT module at the given wind speed, in MW.
double wind_power_max(const ResModuleSpec& spec, double wind_speed);

// Available power of one PV module at the given irradiance (W/m^2), in MW.
double pv_power_max(const ResModuleSpec& spec, double irradiance);

// Dispatch ceiling of one module for either RES kind at the scenario weather point.
double res_power_max(const ResModuleSpec& spec, const Scenario& sc, int step);

}  // namespace ehplan

#endif
