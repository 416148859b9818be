#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "model/validate.hpp"
#include "solve/solve.hpp"
#include "support.hpp"

using namespace ehplan;
using namespace ehplan::testing;

namespace {

struct Solved {
    EhInstance inst;
    PlanSolution sol;
};

// Instance with one of everything so every constraint family is exercised.
Solved solved_reference() {
    EhInstance inst;
    inst.devices.push_back(make_device(DeviceKind::CCHP, "cchp", 4e5, 1.5, 0.0, 5.0,
                                       Carrier::Electricity, 0.35));
    inst.devices.back().coupling.c[1][1] = 0.4;
    inst.devices.push_back(
        make_device(DeviceKind::TX, "tx", 1e5, 10.0, 8.0, 0.0, Carrier::Electricity, 0.98));
    inst.devices.push_back(
        make_device(DeviceKind::AC, "ac", 1e5, 2.0, 3.0, 0.0, Carrier::Cooling, 1.4));
    ResModuleSpec wt;
    wt.kind = ResKind::WT;
    wt.id = "wt";
    wt.invest_cost = 1e5;
    wt.maintenance_rate = 50.0;
    wt.lifetime_years = 20;
    wt.cut_in = 2.5;
    wt.rated_speed = 12.0;
    wt.cut_out = 25.0;
    wt.swept_area = 1000.0;
    wt.conversion_eff = 0.3;
    wt.rated_power = 0.33;
    inst.res_options.push_back(wt);
    inst.ess_options.push_back(make_ess(EssKind::BESS, 1.0, 0.5, 0.95, 5e4, 20.0, 3));
    Scenario sc = flat_scenario(4, 1.0, 3.0, 1.0, 0.5, 10.0, 0.0, 600.0);
    sc.price_e[2] = 200.0;  // cheap hour invites storage arbitrage
    inst.scenarios.push_back(sc);
    inst.validate();

    auto backend = make_highs_backend();
    Solved out{inst, solve_monolithic(inst, RiskConfig{0.9, 0.5}, *backend)};
    REQUIRE(out.sol.status == PlanStatus::OptimalWithinGap);
    return out;
}

bool has(const ViolationReport& report, const std::string& label) {
    for (const Violation& v : report) {
        if (v.constraint == label) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("solver optimum passes cleanly") {
    const Solved ref = solved_reference();
    CHECK(validate_schedule(ref.inst, ref.sol.plan, ref.sol.schedule).empty());

    std::mt19937_64 rng(5);
    auto backend = make_highs_backend();
    for (int trial = 0; trial < 8; ++trial) {
        const EhInstance inst = random_tiny_instance(rng);
        const PlanSolution sol = solve_monolithic(inst, RiskConfig{0.9, 0.5}, *backend);
        REQUIRE(sol.status == PlanStatus::OptimalWithinGap);
        CHECK(validate_schedule(inst, sol.plan, sol.schedule).empty());
    }
}

TEST_CASE("each seeded violation is detected with its label") {
    const Solved ref = solved_reference();

    SUBCASE("C13: mandatory devices") {
        PlanDecision plan = ref.sol.plan;
        plan.u[0] = 0;
        CHECK(has(validate_schedule(ref.inst, plan, ref.sol.schedule), "C13a"));
        plan = ref.sol.plan;
        plan.u[1] = 0;
        CHECK(has(validate_schedule(ref.inst, plan, ref.sol.schedule), "C13b"));
    }
    SUBCASE("C14: module count bounds") {
        PlanDecision plan = ref.sol.plan;
        plan.z_res[0] = -1;
        CHECK(has(validate_schedule(ref.inst, plan, ref.sol.schedule), "C14a"));
        plan = ref.sol.plan;
        plan.z_ess[0] = 99;
        CHECK(has(validate_schedule(ref.inst, plan, ref.sol.schedule), "C14b"));
    }
    SUBCASE("C15: RES above availability") {
        OperationSchedule sched = ref.sol.schedule;
        sched.per_scenario[0].res_power[0][0] = 50.0;
        CHECK(has(validate_schedule(ref.inst, ref.sol.plan, sched), "C15"));
    }
    SUBCASE("C19: simultaneous charge and discharge flags") {
        OperationSchedule sched = ref.sol.schedule;
        sched.per_scenario[0].ess_v_charge[0][1] = 1.0;
        sched.per_scenario[0].ess_v_discharge[0][1] = 1.0;
        CHECK(has(validate_schedule(ref.inst, ref.sol.plan, sched), "C19"));
    }
    SUBCASE("C20/C21: power beyond flag or modules") {
        OperationSchedule sched = ref.sol.schedule;
        sched.per_scenario[0].ess_charge[0][1] = 0.3;
        sched.per_scenario[0].ess_v_charge[0][1] = 0.0;
        const auto report = validate_schedule(ref.inst, ref.sol.plan, sched);
        CHECK(has(report, "C20a"));
        OperationSchedule sched2 = ref.sol.schedule;
        sched2.per_scenario[0].ess_v_discharge[0][1] = 1.0;
        sched2.per_scenario[0].ess_v_charge[0][1] = 0.0;
        sched2.per_scenario[0].ess_discharge[0][1] = 100.0;
        CHECK(has(validate_schedule(ref.inst, ref.sol.plan, sched2), "C21b"));
    }
    SUBCASE("C22: state of charge above capacity") {
        OperationSchedule sched = ref.sol.schedule;
        sched.per_scenario[0].ess_soc[0][1] += 100.0;
        CHECK(has(validate_schedule(ref.inst, ref.sol.plan, sched), "C22"));
    }
    SUBCASE("C23: broken SOC recursion") {
        OperationSchedule sched = ref.sol.schedule;
        sched.per_scenario[0].ess_soc[0][2] += 0.25;
        CHECK(has(validate_schedule(ref.inst, ref.sol.plan, sched), "C23"));
    }
    SUBCASE("C24: cyclic state") {
        OperationSchedule sched = ref.sol.schedule;
        auto& soc = sched.per_scenario[0].ess_soc[0];
        soc.back() = soc.front() + 0.5;
        CHECK(has(validate_schedule(ref.inst, ref.sol.plan, sched), "C24"));
    }
    SUBCASE("C26/C27: converter input caps") {
        OperationSchedule sched = ref.sol.schedule;
        sched.per_scenario[0].device_in_e[1][0] = 100.0;
        CHECK(has(validate_schedule(ref.inst, ref.sol.plan, sched), "C26"));
        OperationSchedule sched2 = ref.sol.schedule;
        sched2.per_scenario[0].device_in_g[0][0] = 100.0;
        CHECK(has(validate_schedule(ref.inst, ref.sol.plan, sched2), "C27"));
    }
    SUBCASE("C28: shedding above load") {
        OperationSchedule sched = ref.sol.schedule;
        sched.per_scenario[0].shed[0][0] = 100.0;
        const auto report = validate_schedule(ref.inst, ref.sol.plan, sched);
        CHECK(has(report, "C28"));
    }
    SUBCASE("C29: penetration cap") {
        PlanDecision plan = ref.sol.plan;
        plan.u.assign(plan.u.size(), 0);
        plan.u[0] = 1;  // CCHP only: no electric input capacity
        plan.z_res[0] = 50;
        EhInstance inst = ref.inst;
        inst.res_max_modules = 100;
        const auto report = validate_schedule(inst, plan, ref.sol.schedule);
        CHECK(has(report, "C29"));
    }
    SUBCASE("C30/C31/C32: balances") {
        OperationSchedule sched = ref.sol.schedule;
        sched.per_scenario[0].device_in_e[1][0] += 1.0;
        CHECK(has(validate_schedule(ref.inst, ref.sol.plan, sched), "C30"));
        // heat/cool are one-sided: oversupply is fine, undersupply is not
        OperationSchedule sched2 = ref.sol.schedule;
        sched2.per_scenario[0].device_in_g[0].assign(4, 0.0);
        const auto report = validate_schedule(ref.inst, ref.sol.plan, sched2);
        CHECK(has(report, "C31"));
        EhInstance colder = ref.inst;
        colder.scenarios[0].load_c.assign(4, 50.0);
        CHECK(has(validate_schedule(colder, ref.sol.plan, ref.sol.schedule), "C32"));
    }
}
