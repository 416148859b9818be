#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "model/costs.hpp"
#include "model/power.hpp"
#include "support.hpp"

using namespace ehplan;
using namespace ehplan::testing;

namespace {

// Zeroed schedule matching the instance shapes.
OperationSchedule blank_schedule(const EhInstance& inst) {
    OperationSchedule sched;
    for (const Scenario& sc : inst.scenarios) {
        const int T = sc.steps();
        ScenarioSchedule ss;
        auto zeros = [T](size_t n, int len) {
            return std::vector<std::vector<double>>(n, std::vector<double>(len, 0.0));
        };
        ss.device_in_e = zeros(inst.devices.size(), T);
        ss.device_in_g = zeros(inst.devices.size(), T);
        ss.res_power = zeros(inst.res_options.size(), T);
        ss.ess_charge = zeros(inst.ess_options.size(), T);
        ss.ess_discharge = zeros(inst.ess_options.size(), T);
        ss.ess_soc = zeros(inst.ess_options.size(), T + 1);
        ss.ess_v_charge = zeros(inst.ess_options.size(), T);
        ss.ess_v_discharge = zeros(inst.ess_options.size(), T);
        for (auto& sh : ss.shed) sh.assign(T, 0.0);
        sched.per_scenario.push_back(std::move(ss));
    }
    return sched;
}

}  // namespace

TEST_CASE("all-zero schedule yields pure investment cost") {
    const EhInstance inst = tiny_fixed_instance();
    PlanDecision plan{{1, 1}, {}, {}};
    const CostBreakdown cb = evaluate_costs(inst, plan, blank_schedule(inst), 0.9, 0.5);
    CHECK(cb.tc[0] == 0.0);
    CHECK(cb.mc[0] == 0.0);
    CHECK(cb.lc[0] == 0.0);
    CHECK(cb.ic > 0.0);
    CHECK(cb.objective == doctest::Approx(cb.ic).epsilon(1e-12));
}

TEST_CASE("gas boiler trading cost, hand oracle") {
    EhInstance inst = tiny_fixed_instance();
    inst.devices.push_back(make_device(DeviceKind::GB, "gb", 1e5, 0.0, 0.0, 12.0, Carrier::Heat,
                                       0.9));
    inst.scenarios[0] = flat_scenario(2, 1.0, 0.0, 5.0, 0.0);
    PlanDecision plan{{1, 1, 1}, {}, {}};
    OperationSchedule sched = blank_schedule(inst);
    sched.per_scenario[0].device_in_g[2] = {10.0, 10.0};  // 10 MW gas for 2 h

    const CostBreakdown cb = evaluate_costs(inst, plan, sched, 0.9, 0.5);
    CHECK(cb.tc[0] == doctest::Approx(6800.0).epsilon(1e-12));  // 10*2*340
    CHECK(cb.mc[0] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("storage mileage maintenance, hand oracle") {
    EhInstance inst = tiny_fixed_instance();
    inst.ess_options.push_back(make_ess(EssKind::BESS, 1.0, 0.5, 0.95, 9e5, 90.0, 4));
    PlanDecision plan{{1, 1}, {}, {1}};
    OperationSchedule sched = blank_schedule(inst);
    auto& ss = sched.per_scenario[0];
    ss.ess_charge[0][0] = 1.0;
    ss.ess_discharge[0][2] = 0.6;
    ss.ess_v_charge[0][0] = 1.0;
    ss.ess_v_discharge[0][2] = 1.0;

    const CostBreakdown cb = evaluate_costs(inst, plan, sched, 0.9, 0.5);
    CHECK(cb.mc[0] == doctest::Approx(90.0 * (1.0 + 0.6)).epsilon(1e-12));
}

TEST_CASE("shedding cost and per-carrier prices") {
    const EhInstance inst = tiny_fixed_instance();
    PlanDecision plan{{1, 1}, {}, {}};
    OperationSchedule sched = blank_schedule(inst);
    sched.per_scenario[0].shed[0][0] = 2.0;  // electricity at 2000
    sched.per_scenario[0].shed[1][1] = 1.0;  // heat at 1800
    const CostBreakdown cb = evaluate_costs(inst, plan, sched, 0.9, 0.5);
    CHECK(cb.lc[0] == doctest::Approx(2.0 * 2000.0 + 1800.0).epsilon(1e-12));
}

TEST_CASE("objective identity and CVaR dominance") {
    EhInstance inst = tiny_fixed_instance();
    inst.scenarios[0].prob = 0.5;
    inst.scenarios.push_back(flat_scenario(4, 0.5, 1.0, 0.0, 0.0));
    PlanDecision plan{{1, 1}, {}, {}};
    OperationSchedule sched = blank_schedule(inst);
    sched.per_scenario[0].device_in_e[1] = {1.0, 1.0, 1.0, 1.0};

    const double alpha = 0.75, beta = 0.6;
    const CostBreakdown cb = evaluate_costs(inst, plan, sched, alpha, beta);
    CHECK(cb.oc_expected ==
          doctest::Approx(0.5 * cb.scenario_cost(0) + 0.5 * cb.scenario_cost(1)).epsilon(1e-12));
    CHECK(cb.objective ==
          doctest::Approx(cb.ic + (1 - beta) * cb.oc_expected + beta * cb.cvar_alpha)
              .epsilon(1e-12));
    CHECK(cb.cvar_alpha >= cb.var_alpha - 1e-12);
    CHECK(cb.expected_tc + cb.expected_mc + cb.expected_lc ==
          doctest::Approx(cb.oc_expected).epsilon(1e-12));
}

TEST_CASE("negative schedule powers are rejected") {
    const EhInstance inst = tiny_fixed_instance();
    PlanDecision plan{{1, 1}, {}, {}};
    OperationSchedule sched = blank_schedule(inst);
    sched.per_scenario[0].device_in_e[1][0] = -0.5;
    CHECK_THROWS_AS(evaluate_costs(inst, plan, sched, 0.9, 0.5), Error);
}

TEST_CASE("investment cost uses per-option lifetimes") {
    EhInstance inst = tiny_fixed_instance();
    inst.res_options.push_back([] {
        ResModuleSpec wt;
        wt.kind = ResKind::WT;
        wt.id = "wt";
        wt.invest_cost = 2e5;
        wt.lifetime_years = 20;
        wt.cut_in = 2.5;
        wt.rated_speed = 12.0;
        wt.cut_out = 25.0;
        wt.swept_area = 1000.0;
        wt.conversion_eff = 0.3;
        wt.rated_power = 0.33;
        return wt;
    }());
    inst.ess_options.push_back(make_ess(EssKind::HESS, 1.0, 0.5, 0.9, 9e4, 9.0, 5));
    const PlanDecision plan{{1, 0}, {2}, {3}};
    const double expect =
        inst.devices[0].invest_cost * annualization_coefficient(0.08, 20) +
        2 * 2e5 * annualization_coefficient(0.08, 20) +
        3 * 9e4 * annualization_coefficient(0.08, 10);
    CHECK(investment_cost(inst, plan) == doctest::Approx(expect).epsilon(1e-12));
}
