#include "model/costs.hpp"

#include "model/power.hpp"

namespace ehplan {

double investment_cost(const EhInstance& inst, const PlanDecision& plan) {
    double ic = 0.0;
    for (size_t d = 0; d < inst.devices.size(); ++d) {
        const DeviceOption& dev = inst.devices[d];
        ic += annualization_coefficient(inst.discount_rate, dev.lifetime_years) * dev.invest_cost *
              plan.u[d];
    }
    for (size_t m = 0; m < inst.res_options.size(); ++m) {
        const ResModuleSpec& spec = inst.res_options[m];
        ic += annualization_coefficient(inst.discount_rate, spec.lifetime_years) *
              spec.invest_cost * plan.z_res[m];
    }
    for (size_t n = 0; n < inst.ess_options.size(); ++n) {
        const EssModuleSpec& ess = inst.ess_options[n];
        ic += annualization_coefficient(inst.discount_rate, ess.lifetime_years) * ess.invest_cost *
              plan.z_ess[n];
    }
    return ic;
}

CostBreakdown evaluate_costs(const EhInstance& inst, const PlanDecision& plan,
                             const OperationSchedule& schedule, double alpha, double beta) {
    const int ns = static_cast<int>(inst.scenarios.size());
    if (static_cast<int>(schedule.per_scenario.size()) != ns) {
        throw data_error("schedule scenario count does not match instance");
    }
    const double dt = inst.dt_hours;

    CostBreakdown cb;
    cb.ic = investment_cost(inst, plan);
    cb.tc.assign(ns, 0.0);
    cb.mc.assign(ns, 0.0);
    cb.lc.assign(ns, 0.0);

    auto check_nonneg = [](double v, const char* what) {
        if (v < -1e-9) throw data_error(std::string("negative power in schedule: ") + what);
    };

    for (int s = 0; s < ns; ++s) {
        const Scenario& sc = inst.scenarios[s];
        const ScenarioSchedule& ss = schedule.per_scenario[s];
        const int T = sc.steps();
        for (size_t d = 0; d < inst.devices.size(); ++d) {
            const DeviceOption& dev = inst.devices[d];
            for (int t = 0; t < T; ++t) {
                const double pe = ss.device_in_e[d][t];
                const double pg = ss.device_in_g[d][t];
                check_nonneg(pe, "device electric input");
                check_nonneg(pg, "device gas input");
                cb.tc[s] += (sc.price_e[t] * pe + inst.gas_price * pg) * dt;
                cb.mc[s] += dev.maintenance_rate * (pe + pg) * dt;
            }
        }
        for (size_t m = 0; m < inst.res_options.size(); ++m) {
            for (int t = 0; t < T; ++t) {
                const double pr = ss.res_power[m][t];
                check_nonneg(pr, "res dispatch");
                cb.mc[s] += inst.res_options[m].maintenance_rate * pr * dt;
            }
        }
        for (size_t n = 0; n < inst.ess_options.size(); ++n) {
            for (int t = 0; t < T; ++t) {
                const double ch = ss.ess_charge[n][t];
                const double dis = ss.ess_discharge[n][t];
                check_nonneg(ch, "ess charge");
                check_nonneg(dis, "ess discharge");
                cb.mc[s] += inst.ess_options[n].maintenance_rate * (ch + dis) * dt;
            }
        }
        for (int r = 0; r < kNumCarriers; ++r) {
            for (int t = 0; t < T; ++t) {
                const double sh = ss.shed[r][t];
                check_nonneg(sh, "shedding");
                cb.lc[s] += inst.shed_cost[r] * sh * dt;
            }
        }
    }

    LossDistribution dist;
    for (int s = 0; s < ns; ++s) {
        dist.losses.push_back(cb.scenario_cost(s));
        dist.probs.push_back(inst.scenarios[s].prob);
    }
    for (int s = 0; s < ns; ++s) {
        cb.expected_tc += dist.probs[s] * cb.tc[s];
        cb.expected_mc += dist.probs[s] * cb.mc[s];
        cb.expected_lc += dist.probs[s] * cb.lc[s];
    }
    cb.oc_expected = cb.expected_tc + cb.expected_mc + cb.expected_lc;
    cb.var_alpha = empirical_var(dist, alpha);
    cb.cvar_alpha = cvar(dist, alpha);
    cb.objective = cb.ic + (1.0 - beta) * cb.oc_expected + beta * cb.cvar_alpha;
    return cb;
}

}  // namespace ehplan
