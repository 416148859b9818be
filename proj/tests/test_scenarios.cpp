#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "io/synth.hpp"
#include "model/milp.hpp"
#include "scenarios/scenarios.hpp"
#include "support.hpp"

using namespace ehplan;
using namespace ehplan::testing;

namespace {

// Single-step scenarios distinguished only by electric load.
ScenarioSet line_set(const std::vector<double>& loads, const std::vector<double>& probs) {
    ScenarioSet set;
    for (size_t i = 0; i < loads.size(); ++i) {
        set.scenarios.push_back(flat_scenario(1, probs[i], loads[i], 0.0, 0.0));
        set.origin.push_back(static_cast<int>(i));
    }
    return set;
}

}  // namespace

TEST_CASE("hand-traced backward reduction") {
    const ScenarioSet set = line_set({0.0, 1.0, 10.0}, {0.5, 0.3, 0.2});
    const auto [reduced, trace] = backward_reduce(set, 2);
    REQUIRE(reduced.size() == 2);
    CHECK(reduced.origin == std::vector<int>{0, 2});
    CHECK(reduced.scenarios[0].prob == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(reduced.scenarios[1].prob == doctest::Approx(0.2).epsilon(1e-12));
    REQUIRE(trace.size() == 1);
    CHECK(trace[0].removed_id == 1);
    CHECK(trace[0].absorbed_by == 0);
    CHECK(trace[0].pd_value == doctest::Approx(0.3 * 0.1).epsilon(1e-9));
}

TEST_CASE("greedy step matches brute force and conserves probability") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + static_cast<int>(u(rng) * 10);
        std::vector<double> loads, probs;
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            loads.push_back(20.0 * u(rng));
            probs.push_back(0.05 + u(rng));
            total += probs.back();
        }
        for (double& p : probs) p /= total;
        const ScenarioSet set = line_set(loads, probs);

        // brute-force argmin of p_i * min_j dist(i,j)
        const auto dist = kantorovich_matrix(set);
        int best = -1;
        double best_pd = kInf;
        for (int i = 0; i < n; ++i) {
            double nearest = kInf;
            for (int j = 0; j < n; ++j) {
                if (j != i) nearest = std::min(nearest, dist[i][j]);
            }
            const double pd = probs[i] * nearest;
            if (pd < best_pd - 1e-15) {
                best_pd = pd;
                best = i;
            }
        }

        const auto [reduced, trace] = backward_reduce(set, n - 1);
        REQUIRE(trace.size() == 1);
        CHECK(trace[0].removed_id == best);
        CHECK(trace[0].pd_value == doctest::Approx(best_pd).epsilon(1e-9));

        double sum = 0.0;
        for (const Scenario& s : reduced.scenarios) sum += s.prob;
        CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
}

TEST_CASE("kmeans single cluster collapses to the mean") {
    const ScenarioSet set = line_set({0.0, 1.0, 10.0}, {1.0 / 3, 1.0 / 3, 1.0 / 3});
    const ScenarioSet reduced = kmeans_reduce(set, 1, 99);
    REQUIRE(reduced.size() == 1);
    CHECK(reduced.scenarios[0].prob == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(reduced.scenarios[0].load_e[0] == doctest::Approx(11.0 / 3.0).epsilon(1e-9));
    CHECK(reduced.origin[0] == -1);
}

TEST_CASE("kmeans determinism and probability conservation") {
    const YearSeries year = small_year(20, 3);
    const ScenarioSet full = slice_days(year);
    const ScenarioSet a = kmeans_reduce(full, 5, 7);
    const ScenarioSet b = kmeans_reduce(full, 5, 7);
    REQUIRE(a.size() == 5);
    double sum = 0.0;
    for (int i = 0; i < a.size(); ++i) {
        CHECK(a.scenarios[i].prob == b.scenarios[i].prob);
        CHECK(a.scenarios[i].load_e == b.scenarios[i].load_e);
        sum += a.scenarios[i].prob;
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);
}

TEST_CASE("slice_days shapes and probabilities") {
    const YearSeries year = small_year(20, 3);
    const ScenarioSet set = slice_days(year);
    REQUIRE(set.size() == static_cast<int>(year.records.size()) / 24);
    for (int s = 0; s < set.size(); ++s) {
        CHECK(set.scenarios[s].steps() == 24);
        CHECK(set.scenarios[s].prob == doctest::Approx(1.0 / set.size()).epsilon(1e-12));
        CHECK(set.origin[s] == s);
    }
    CHECK(set.scenarios[1].load_e[0] == doctest::Approx(year.records[24].load_e).epsilon(1e-12));
}

TEST_CASE("deviation report") {
    CostBreakdown full;
    full.ic = 100.0;
    full.expected_tc = 50.0;
    full.expected_mc = 0.0;
    full.expected_lc = 10.0;
    full.cvar_alpha = 80.0;
    full.objective = 200.0;
    CostBreakdown reduced = full;
    reduced.ic = 110.0;
    reduced.expected_lc = 8.0;
    reduced.objective = 190.0;
    const DeviationReport rep = deviation_report(full, reduced);
    CHECK(*rep.ic == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(*rep.tc == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_FALSE(rep.mc.has_value());
    CHECK(*rep.lc == doctest::Approx(-0.2).epsilon(1e-12));
    CHECK(*rep.total == doctest::Approx(-0.05).epsilon(1e-12));
}
