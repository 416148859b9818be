#ifndef EHPLAN_TESTS_SUPPORT_HPP
#define EHPLAN_TESTS_SUPPORT_HPP

#include <random>

#include "io/config.hpp"
#include "model/types.hpp"
#include "scenarios/scenarios.hpp"

namespace ehplan::testing {

// A converter option with a single-entry coupling matrix.
DeviceOption make_device(DeviceKind kind, const std::string& id, double invest, double maint,
                         double cap_e, double cap_g, Carrier out, double eff);

EssModuleSpec make_ess(EssKind kind, double energy, double power, double eta, double invest,
                       double maint, int max_modules);

// Constant-profile scenario.
Scenario flat_scenario(int steps, double prob, double load_e, double load_h, double load_c,
                       double wind = 0.0, double irradiance = 0.0, double price_e = 500.0);

// Deterministic 2-device, 1-scenario instance; feasible, no RES/ESS.
EhInstance tiny_fixed_instance();

// Random instance within the oracle enumeration budget: <= 2 scenarios,
// 4 steps with storage (6 without), <= 2 options per device kind, module
// caps <= 2. Always feasible thanks to load shedding.
EhInstance random_tiny_instance(std::mt19937_64& rng);

// First `days` days of the synthetic year.
YearSeries small_year(int days, uint64_t seed);

// 10 scenarios x 24 steps from the synthetic year, moderate catalog.
EhInstance medium_instance(uint64_t seed);

// Full default catalog + reduced synthetic-year scenarios.
EhInstance synth_instance(uint64_t seed, int reduced_count, const std::string& case_preset,
                          const std::string& reduction_method = "backward");

}  // namespace ehplan::testing

#endif
