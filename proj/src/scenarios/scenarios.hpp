#ifndef EHPLAN_SCENARIOS_SCENARIOS_HPP
#define EHPLAN_SCENARIOS_SCENARIOS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "model/types.hpp"

namespace ehplan {

// One hourly record of the planning year.
struct YearRecord {
    double load_e = 0.0, load_h = 0.0, load_c = 0.0;  // MW
    double wind_speed = 0.0;                          // m/s
    double irradiance = 0.0;                          // W/m^2
    double price_e = 0.0;                             // RMB/MWh
};

struct YearSeries {
    std::vector<YearRecord> records;

    void validate(int steps_per_day = 24) const;
};

// A scenario set with provenance: original day index, or -1 for a synthetic centroid.
struct ScenarioSet {
    std::vector<Scenario> scenarios;
    std::vector<int> origin;  // same length; day index or -1

    int size() const { return static_cast<int>(scenarios.size()); }
    void validate() const;
};

struct ReductionStep {
    int iteration = 0;
    int removed_id = 0;   // original day index of the removed scenario
    int absorbed_by = 0;  // original day index of the nearest survivor
    double pd_value = 0.0;
};
using ReductionTrace = std::vector<ReductionStep>;

struct DistanceOptions {
    bool normalize = true;       // per-channel min-max scaling before distances
    bool include_price = false;  // include the tariff channel (auto-enabled when it varies)
};

// Cuts the year into whole-day scenarios with uniform probability.
ScenarioSet slice_days(const YearSeries& year, int steps_per_day = 24);

// Pairwise Euclidean distances over concatenated (optionally normalized) channels.
std::vector<std::vector<double>> kantorovich_matrix(const ScenarioSet& set,
                                                    const DistanceOptions& opts = {});

// Iteratively removes the scenario with the smallest probability-weighted distance
// to its nearest survivor, transferring its probability to that survivor.
std::pair<ScenarioSet, ReductionTrace> backward_reduce(const ScenarioSet& set, int target,
                                                       const DistanceOptions& opts = {});

// Seeded k-means (k-means++ init) over the same feature vectors; centroids become
// synthetic scenarios weighted by cluster share.
ScenarioSet kmeans_reduce(const ScenarioSet& set, int k, uint64_t seed,
                          const DistanceOptions& opts = {});

// Signed relative deltas (reduced - full) / full per cost component; nullopt where
// the full-set component is zero.
struct DeviationReport {
    std::optional<double> ic, tc, mc, lc, cvar, total;
};
DeviationReport deviation_report(const CostBreakdown& full, const CostBreakdown& reduced);

}  // namespace ehplan

#endif
