#ifndef EHPLAN_IO_SYNTH_HPP
#define EHPLAN_IO_SYNTH_HPP

#include <cstdint>
#include <string>

#include "scenarios/scenarios.hpp"

namespace ehplan {

// Tunable levels of the synthetic industrial-park profile. Defaults give a
// plausible mid-size park with a two-tier tariff (valley 23:00-07:00).
struct SynthProfile {
    double latitude_deg = 38.0;
    double price_peak = 700.0;    // RMB/MWh
    double price_valley = 300.0;  // RMB/MWh
    double load_e_base = 12.0;    // MW
    double load_h_base = 8.0;     // MW
    double load_c_base = 6.0;     // MW
};

// Sun elevation above the horizon for a day-of-year (0-based), hour-of-day and
// latitude, using the standard declination approximation.
double solar_elevation_deg(int day, int hour, double latitude_deg);

// Deterministic synthetic 8760-hour year. `profile` must be
// "industrial-park-default".
YearSeries synth_year(uint64_t seed, const std::string& profile);
YearSeries synth_year(uint64_t seed, const SynthProfile& profile);

}  // namespace ehplan

#endif
