#include "model/milp.hpp"

#include <cmath>

#include "model/power.hpp"

namespace ehplan {

int MilpProblem::add_var(std::string name, double lb, double ub, VarType type) {
    vars.push_back({std::move(name), lb, ub, type});
    objective.push_back(0.0);
    return static_cast<int>(vars.size()) - 1;
}

int MilpProblem::add_row(std::string name, std::vector<std::pair<int, double>> coeffs,
                         RowSense sense, double rhs) {
    rows.push_back({std::move(name), std::move(coeffs), sense, rhs});
    return static_cast<int>(rows.size()) - 1;
}

void MilpProblem::check_consistent() const {
    const int n = num_vars();
    for (const auto& row : rows) {
        for (const auto& [col, coef] : row.coeffs) {
            (void)coef;
            if (col < 0 || col >= n) throw data_error("row " + row.name + " references unknown column");
        }
    }
    for (const auto& v : vars) {
        if (v.type != VarType::Continuous && (!std::isfinite(v.lb) || !std::isfinite(v.ub))) {
            throw data_error("integer variable " + v.name + " must have finite bounds");
        }
    }
}

namespace {

std::string tag(const std::string& base, int s, int t) {
    return base + "[" + std::to_string(s) + "," + std::to_string(t) + "]";
}

}  // namespace

BuildResult build_milp(const EhInstance& inst, const RiskConfig& risk) {
    inst.validate();
    risk.validate();

    BuildResult out;
    MilpProblem& p = out.problem;
    VarMap& vm = out.vars;

    const int nd = static_cast<int>(inst.devices.size());
    const int nm = static_cast<int>(inst.res_options.size());
    const int nn = static_cast<int>(inst.ess_options.size());
    const int ns = static_cast<int>(inst.scenarios.size());
    const int T = inst.scenarios.front().steps();
    const double dt = inst.dt_hours;
    vm.steps = T;

    // First stage.
    for (int d = 0; d < nd; ++d) {
        vm.u.push_back(p.add_var("u_" + std::string(to_string(inst.devices[d].kind)) + "_" +
                                     inst.devices[d].capacity_id,
                                 0.0, 1.0, VarType::Binary));
    }
    for (int m = 0; m < nm; ++m) {
        vm.z_res.push_back(p.add_var("z_" + inst.res_options[m].id, 0.0,
                                     static_cast<double>(inst.res_max_modules), VarType::Integer));
    }
    for (int n = 0; n < nn; ++n) {
        vm.z_ess.push_back(p.add_var("z_" + inst.ess_options[n].id, 0.0,
                                     static_cast<double>(inst.ess_options[n].max_modules),
                                     VarType::Integer));
    }

    // C13: at least one CCHP and one TX selected.
    {
        std::vector<std::pair<int, double>> cchp, tx;
        for (int d = 0; d < nd; ++d) {
            if (inst.devices[d].kind == DeviceKind::CCHP) cchp.emplace_back(vm.u[d], 1.0);
            if (inst.devices[d].kind == DeviceKind::TX) tx.emplace_back(vm.u[d], 1.0);
        }
        p.add_row("C13a_cchp_required", std::move(cchp), RowSense::GE, 1.0);
        p.add_row("C13b_tx_required", std::move(tx), RowSense::GE, 1.0);
    }

    // C29: RES capacity at most sigma of total electric supply capacity,
    // written as (1-sigma) * sum rated*z - sigma * sum Pmax_e*u <= 0.
    {
        const double sigma = inst.res_penetration_cap;
        std::vector<std::pair<int, double>> row;
        for (int m = 0; m < nm; ++m) {
            row.emplace_back(vm.z_res[m], (1.0 - sigma) * inst.res_options[m].rated_power);
        }
        for (int d = 0; d < nd; ++d) {
            if (inst.devices[d].max_input_e > 0.0) {
                row.emplace_back(vm.u[d], -sigma * inst.devices[d].max_input_e);
            }
        }
        p.add_row("C29_res_penetration", std::move(row), RowSense::LE, 0.0);
    }

    // Second stage.
    vm.dev_in_e.resize(ns);
    vm.dev_in_g.resize(ns);
    vm.res_p.resize(ns);
    vm.ess_ch.resize(ns);
    vm.ess_dis.resize(ns);
    vm.ess_soc.resize(ns);
    vm.ess_vch.resize(ns);
    vm.ess_vdis.resize(ns);
    vm.shed.resize(ns);

    std::vector<LinearExpr> scenario_cost(ns);
    std::vector<double> probs(ns);

    for (int s = 0; s < ns; ++s) {
        const Scenario& sc = inst.scenarios[s];
        probs[s] = sc.prob;
        LinearExpr& cost = scenario_cost[s];

        vm.dev_in_e[s].assign(nd, std::vector<int>(T, -1));
        vm.dev_in_g[s].assign(nd, std::vector<int>(T, -1));
        for (int d = 0; d < nd; ++d) {
            const DeviceOption& dev = inst.devices[d];
            for (int t = 0; t < T; ++t) {
                if (dev.max_input_e > 0.0) {
                    const int c = p.add_var(tag("Pe_" + dev.capacity_id, s, t), 0.0, kInf,
                                            VarType::Continuous);
                    vm.dev_in_e[s][d][t] = c;
                    // C26: electric input limited by the invested capacity.
                    p.add_row(tag("C26_" + dev.capacity_id, s, t),
                              {{c, 1.0}, {vm.u[d], -dev.max_input_e}}, RowSense::LE, 0.0);
                    cost.terms.emplace_back(c, sc.price_e[t] * dt);          // trading
                    cost.terms.emplace_back(c, dev.maintenance_rate * dt);   // maintenance
                }
                if (dev.max_input_g > 0.0) {
                    const int c = p.add_var(tag("Pg_" + dev.capacity_id, s, t), 0.0, kInf,
                                            VarType::Continuous);
                    vm.dev_in_g[s][d][t] = c;
                    // C27: gas input limited by the invested capacity.
                    p.add_row(tag("C27_" + dev.capacity_id, s, t),
                              {{c, 1.0}, {vm.u[d], -dev.max_input_g}}, RowSense::LE, 0.0);
                    cost.terms.emplace_back(c, inst.gas_price * dt);
                    cost.terms.emplace_back(c, dev.maintenance_rate * dt);
                }
            }
        }

        vm.res_p[s].assign(nm, std::vector<int>(T, -1));
        for (int m = 0; m < nm; ++m) {
            const ResModuleSpec& spec = inst.res_options[m];
            for (int t = 0; t < T; ++t) {
                const int c =
                    p.add_var(tag("Pres_" + spec.id, s, t), 0.0, kInf, VarType::Continuous);
                vm.res_p[s][m][t] = c;
                // C15/C17: dispatch at most z modules times the weather-dependent ceiling.
                p.add_row(tag("C15_" + spec.id, s, t),
                          {{c, 1.0}, {vm.z_res[m], -res_power_max(spec, sc, t)}}, RowSense::LE,
                          0.0);
                cost.terms.emplace_back(c, spec.maintenance_rate * dt);
            }
        }

        vm.ess_ch[s].assign(nn, std::vector<int>(T, -1));
        vm.ess_dis[s].assign(nn, std::vector<int>(T, -1));
        vm.ess_soc[s].assign(nn, std::vector<int>(T + 1, -1));
        vm.ess_vch[s].assign(nn, std::vector<int>(T, -1));
        vm.ess_vdis[s].assign(nn, std::vector<int>(T, -1));
        for (int n = 0; n < nn; ++n) {
            const EssModuleSpec& ess = inst.ess_options[n];
            // Tightest valid big-M: the fleet-level power ceiling.
            const double m_ch = ess.max_modules * ess.max_charge_power;
            const double m_dis = ess.max_modules * ess.max_discharge_power;
            for (int t = 0; t <= T; ++t) {
                const int c =
                    p.add_var(tag("E_" + ess.id, s, t), 0.0, kInf, VarType::Continuous);
                vm.ess_soc[s][n][t] = c;
                // C22: state of charge within the invested energy capacity.
                p.add_row(tag("C22_" + ess.id, s, t),
                          {{c, 1.0}, {vm.z_ess[n], -ess.energy_per_module}}, RowSense::LE, 0.0);
            }
            for (int t = 0; t < T; ++t) {
                const int ch =
                    p.add_var(tag("Pch_" + ess.id, s, t), 0.0, kInf, VarType::Continuous);
                const int dis =
                    p.add_var(tag("Pdis_" + ess.id, s, t), 0.0, kInf, VarType::Continuous);
                const int vch = p.add_var(tag("vch_" + ess.id, s, t), 0.0, 1.0, VarType::Binary);
                const int vdis = p.add_var(tag("vdis_" + ess.id, s, t), 0.0, 1.0, VarType::Binary);
                vm.ess_ch[s][n][t] = ch;
                vm.ess_dis[s][n][t] = dis;
                vm.ess_vch[s][n][t] = vch;
                vm.ess_vdis[s][n][t] = vdis;

                // C19: mutually exclusive charge/discharge states.
                p.add_row(tag("C19_" + ess.id, s, t), {{vch, 1.0}, {vdis, 1.0}}, RowSense::LE, 1.0);
                // C20a/C21a: state flags gate the power flows.
                p.add_row(tag("C20a_" + ess.id, s, t), {{ch, 1.0}, {vch, -m_ch}}, RowSense::LE, 0.0);
                p.add_row(tag("C21a_" + ess.id, s, t), {{dis, 1.0}, {vdis, -m_dis}}, RowSense::LE,
                          0.0);
                // C20b/C21b: power within the invested module count.
                p.add_row(tag("C20b_" + ess.id, s, t),
                          {{ch, 1.0}, {vm.z_ess[n], -ess.max_charge_power}}, RowSense::LE, 0.0);
                p.add_row(tag("C21b_" + ess.id, s, t),
                          {{dis, 1.0}, {vm.z_ess[n], -ess.max_discharge_power}}, RowSense::LE, 0.0);
                // C23: state-of-charge dynamics.
                p.add_row(tag("C23_" + ess.id, s, t),
                          {{vm.ess_soc[s][n][t + 1], 1.0},
                           {vm.ess_soc[s][n][t], -1.0},
                           {ch, -ess.eta_ch * dt},
                           {dis, dt / ess.eta_dis}},
                          RowSense::EQ, 0.0);
                cost.terms.emplace_back(ch, ess.maintenance_rate * dt);
                cost.terms.emplace_back(dis, ess.maintenance_rate * dt);
            }
            // C24: cyclic state of charge over the day.
            p.add_row(tag("C24_" + ess.id, s, 0),
                      {{vm.ess_soc[s][n][0], 1.0}, {vm.ess_soc[s][n][T], -1.0}}, RowSense::EQ,
                      0.0);
        }

        const std::array<const std::vector<double>*, 3> loads = {&sc.load_e, &sc.load_h,
                                                                 &sc.load_c};
        for (int r = 0; r < kNumCarriers; ++r) {
            vm.shed[s][r].assign(T, -1);
            for (int t = 0; t < T; ++t) {
                // C28 folded into the bound: shedding cannot exceed the load.
                const int c = p.add_var(tag(std::string("shed_") + to_string(Carrier(r)), s, t),
                                        0.0, (*loads[r])[t], VarType::Continuous);
                vm.shed[s][r][t] = c;
                cost.terms.emplace_back(c, inst.shed_cost[r] * dt);
            }
        }

        // C30-C32: carrier balances. Electricity holds with equality; heat and
        // cooling are one-sided (surplus may be dumped).
        for (int t = 0; t < T; ++t) {
            for (int r = 0; r < kNumCarriers; ++r) {
                std::vector<std::pair<int, double>> row;
                for (int d = 0; d < nd; ++d) {
                    const CouplingMatrix& cm = inst.devices[d].coupling;
                    if (vm.dev_in_e[s][d][t] >= 0 && cm.c[r][0] != 0.0) {
                        row.emplace_back(vm.dev_in_e[s][d][t], cm.c[r][0]);
                    }
                    if (vm.dev_in_g[s][d][t] >= 0 && cm.c[r][1] != 0.0) {
                        row.emplace_back(vm.dev_in_g[s][d][t], cm.c[r][1]);
                    }
                }
                if (r == static_cast<int>(Carrier::Electricity)) {
                    for (int m = 0; m < nm; ++m) row.emplace_back(vm.res_p[s][m][t], 1.0);
                }
                for (int n = 0; n < nn; ++n) {
                    if (static_cast<int>(inst.ess_options[n].carrier()) != r) continue;
                    row.emplace_back(vm.ess_dis[s][n][t], 1.0);
                    row.emplace_back(vm.ess_ch[s][n][t], -1.0);
                }
                row.emplace_back(vm.shed[s][r][t], 1.0);
                const RowSense sense =
                    r == static_cast<int>(Carrier::Electricity) ? RowSense::EQ : RowSense::GE;
                p.add_row(tag(std::string("C3") + std::to_string(r) + "_balance_" +
                                  to_string(Carrier(r)),
                              s, t),
                          std::move(row), sense, (*loads[r])[t]);
            }
        }
    }

    // Investment cost in the objective.
    for (int d = 0; d < nd; ++d) {
        const DeviceOption& dev = inst.devices[d];
        p.set_obj(vm.u[d],
                  annualization_coefficient(inst.discount_rate, dev.lifetime_years) *
                      dev.invest_cost);
    }
    for (int m = 0; m < nm; ++m) {
        const ResModuleSpec& spec = inst.res_options[m];
        p.set_obj(vm.z_res[m], annualization_coefficient(inst.discount_rate, spec.lifetime_years) *
                                   spec.invest_cost);
    }
    for (int n = 0; n < nn; ++n) {
        const EssModuleSpec& ess = inst.ess_options[n];
        p.set_obj(vm.z_ess[n], annualization_coefficient(inst.discount_rate, ess.lifetime_years) *
                                   ess.invest_cost);
    }

    // CVaR machinery: zeta, per-scenario excess, linking rows, weighted objective.
    vm.zeta = p.add_var("zeta", 0.0, kInf, VarType::Continuous);
    for (int s = 0; s < ns; ++s) {
        vm.excess.push_back(p.add_var("excess[" + std::to_string(s) + "]", 0.0, kInf,
                                      VarType::Continuous));
    }
    const RiskTerms rt = emit_risk_terms(scenario_cost, probs, risk, vm.zeta, vm.excess);
    for (size_t s = 0; s < rt.excess_rows.size(); ++s) {
        p.add_row("Ccvar_excess[" + std::to_string(s) + "]", rt.excess_rows[s].terms, RowSense::GE,
                  rt.excess_rhs[s]);
    }
    for (const auto& [col, coef] : rt.objective_terms) p.set_obj(col, coef);
    p.objective_constant += rt.objective_constant;

    p.check_consistent();
    return out;
}

MilpCensus census(const EhInstance& inst) {
    const long long nd = static_cast<long long>(inst.devices.size());
    long long nde = 0, ndg = 0;
    for (const auto& d : inst.devices) {
        if (d.max_input_e > 0.0) ++nde;
        if (d.max_input_g > 0.0) ++ndg;
    }
    const long long nm = static_cast<long long>(inst.res_options.size());
    const long long nn = static_cast<long long>(inst.ess_options.size());
    const long long S = static_cast<long long>(inst.scenarios.size());
    const long long T = inst.scenarios.front().steps();

    MilpCensus c;
    c.binaries = nd + S * T * 2 * nn;                       // u, vch, vdis
    c.integers = nm + nn;                                   // z
    c.variables = c.binaries + c.integers                   //
                  + S * T * (nde + ndg)                     // device inputs
                  + S * T * nm                              // res dispatch
                  + S * T * 2 * nn                          // charge, discharge
                  + S * nn * (T + 1)                        // soc
                  + S * T * 3                               // shedding
                  + 1 + S;                                  // zeta, excess
    c.rows = 2                                              // C13
             + 1                                            // C29
             + S * T * (nde + ndg)                          // C26/C27
             + S * T * nm                                   // C15/C17
             + S * nn * (T + 1)                             // C22
             + S * T * nn * 6                               // C19,C20a,C20b,C21a,C21b,C23
             + S * nn                                       // C24
             + S * T * 3                                    // C30-C32
             + S;                                           // cvar excess links
    return c;
}

PlanDecision extract_plan(const VarMap& vm, const std::vector<double>& x) {
    PlanDecision plan;
    auto round_int = [&](int col) { return static_cast<int>(std::lround(x[col])); };
    for (int col : vm.u) plan.u.push_back(round_int(col));
    for (int col : vm.z_res) plan.z_res.push_back(round_int(col));
    for (int col : vm.z_ess) plan.z_ess.push_back(round_int(col));
    return plan;
}

OperationSchedule extract_schedule(const EhInstance& inst, const VarMap& vm,
                                   const std::vector<double>& x) {
    const int T = vm.steps;
    auto value = [&](int col) { return col >= 0 ? x[col] : 0.0; };
    OperationSchedule sched;
    for (size_t s = 0; s < inst.scenarios.size(); ++s) {
        ScenarioSchedule sc;
        auto fill = [&](const std::vector<std::vector<int>>& cols, int len) {
            std::vector<std::vector<double>> out;
            for (const auto& per_opt : cols) {
                std::vector<double> series(len);
                for (int t = 0; t < len; ++t) series[t] = value(per_opt[t]);
                out.push_back(std::move(series));
            }
            return out;
        };
        sc.device_in_e = fill(vm.dev_in_e[s], T);
        sc.device_in_g = fill(vm.dev_in_g[s], T);
        sc.res_power = fill(vm.res_p[s], T);
        sc.ess_charge = fill(vm.ess_ch[s], T);
        sc.ess_discharge = fill(vm.ess_dis[s], T);
        sc.ess_soc = fill(vm.ess_soc[s], T + 1);
        sc.ess_v_charge = fill(vm.ess_vch[s], T);
        sc.ess_v_discharge = fill(vm.ess_vdis[s], T);
        for (int r = 0; r < kNumCarriers; ++r) {
            sc.shed[r].resize(T);
            for (int t = 0; t < T; ++t) sc.shed[r][t] = value(vm.shed[s][r][t]);
        }
        sched.per_scenario.push_back(std::move(sc));
    }
    return sched;
}

}  // namespace ehplan
