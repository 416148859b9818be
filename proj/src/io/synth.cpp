#include "io/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace ehplan {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

// Smooth diurnal work-shift shape, peaking mid-day.
double work_shape(int hour) {
    return 0.7 + 0.3 * std::exp(-0.5 * std::pow((hour - 13.0) / 4.0, 2.0));
}

bool valley_hour(int hour) { return hour >= 23 || hour < 7; }

}  // namespace

double solar_elevation_deg(int day, int hour, double latitude_deg) {
    const double decl = -23.45 * std::cos(2.0 * std::numbers::pi * (day + 10.0) / 365.0);
    const double hour_angle = 15.0 * (hour - 12.0);
    const double s = std::sin(latitude_deg * kDeg) * std::sin(decl * kDeg) +
                     std::cos(latitude_deg * kDeg) * std::cos(decl * kDeg) *
                         std::cos(hour_angle * kDeg);
    return std::asin(std::clamp(s, -1.0, 1.0)) / kDeg;
}

YearSeries synth_year(uint64_t seed, const std::string& profile) {
    if (profile != "industrial-park-default") {
        throw config_error("unknown synthetic profile: " + profile);
    }
    return synth_year(seed, SynthProfile{});
}

YearSeries synth_year(uint64_t seed, const SynthProfile& p) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    YearSeries year;
    year.records.reserve(365 * 24);

    double wind = 6.0;  // AR(1) state
    for (int day = 0; day < 365; ++day) {
        // Season phase: 0 at new year, peaks of heat demand in winter, cooling in summer.
        const double phase = 2.0 * std::numbers::pi * day / 365.0;
        const double winter = 0.5 * (1.0 + std::cos(phase));          // 1 in Jan, 0 in Jul
        const double summer = 1.0 - winter;
        const double wind_mean = 5.0 + 2.5 * winter;
        const double clearness_day = 0.55 + 0.35 * unif(rng);

        for (int hour = 0; hour < 24; ++hour) {
            YearRecord r;
            const double shape = work_shape(hour);

            r.load_e = p.load_e_base * (0.9 + 0.2 * summer) * shape *
                       (1.0 + 0.06 * gauss(rng));
            r.load_h = p.load_h_base * (0.2 + 1.3 * winter) * shape *
                       (1.0 + 0.08 * gauss(rng));
            r.load_c = p.load_c_base * (0.1 + 1.5 * summer) * shape *
                       (1.0 + 0.08 * gauss(rng));
            r.load_e = std::max(0.0, r.load_e);
            r.load_h = std::max(0.0, r.load_h);
            r.load_c = std::max(0.0, r.load_c);

            wind = wind_mean + 0.85 * (wind - wind_mean) + 1.2 * gauss(rng);
            wind = std::max(0.0, wind);
            r.wind_speed = wind;

            const double elev = solar_elevation_deg(day, hour, p.latitude_deg);
            r.irradiance =
                elev <= 0.0 ? 0.0 : 1000.0 * std::sin(elev * kDeg) * clearness_day;

            r.price_e = valley_hour(hour) ? p.price_valley : p.price_peak;
            year.records.push_back(r);
        }
    }
    year.validate();
    return year;
}

}  // namespace ehplan
