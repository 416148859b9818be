#include "solve/scenario_lp.hpp"

#include "model/power.hpp"

namespace ehplan {

ScenarioLp build_scenario_lp(const EhInstance& inst, int s) {
    const Scenario& sc = inst.scenarios[s];
    const int nd = static_cast<int>(inst.devices.size());
    const int nm = static_cast<int>(inst.res_options.size());
    const int nn = static_cast<int>(inst.ess_options.size());
    const int T = sc.steps();
    const double dt = inst.dt_hours;

    ScenarioLp sub;
    MilpProblem& p = sub.lp;
    auto link = [&](int row, int master_local, double mult) {
        sub.links.push_back({row, master_local, mult});
    };

    sub.dev_e.assign(nd, std::vector<int>(T, -1));
    sub.dev_g.assign(nd, std::vector<int>(T, -1));
    for (int d = 0; d < nd; ++d) {
        const DeviceOption& dev = inst.devices[d];
        for (int t = 0; t < T; ++t) {
            if (dev.max_input_e > 0.0) {
                const int c = p.add_var("Pe", 0.0, kInf, VarType::Continuous);
                sub.dev_e[d][t] = c;
                link(p.add_row("cap_e", {{c, 1.0}}, RowSense::LE, 0.0), d, dev.max_input_e);
                p.set_obj(c, (sc.price_e[t] + dev.maintenance_rate) * dt);
            }
            if (dev.max_input_g > 0.0) {
                const int c = p.add_var("Pg", 0.0, kInf, VarType::Continuous);
                sub.dev_g[d][t] = c;
                link(p.add_row("cap_g", {{c, 1.0}}, RowSense::LE, 0.0), d, dev.max_input_g);
                p.set_obj(c, (inst.gas_price + dev.maintenance_rate) * dt);
            }
        }
    }

    sub.res_p.assign(nm, std::vector<int>(T, -1));
    for (int m = 0; m < nm; ++m) {
        const ResModuleSpec& spec = inst.res_options[m];
        for (int t = 0; t < T; ++t) {
            const int c = p.add_var("Pres", 0.0, kInf, VarType::Continuous);
            sub.res_p[m][t] = c;
            link(p.add_row("cap_res", {{c, 1.0}}, RowSense::LE, 0.0), nd + m,
                 res_power_max(spec, sc, t));
            p.set_obj(c, spec.maintenance_rate * dt);
        }
    }

    sub.ch.assign(nn, std::vector<int>(T, -1));
    sub.dis.assign(nn, std::vector<int>(T, -1));
    sub.soc.assign(nn, std::vector<int>(T + 1, -1));
    for (int n = 0; n < nn; ++n) {
        const EssModuleSpec& ess = inst.ess_options[n];
        for (int t = 0; t <= T; ++t) {
            const int c = p.add_var("E", 0.0, kInf, VarType::Continuous);
            sub.soc[n][t] = c;
            link(p.add_row("cap_soc", {{c, 1.0}}, RowSense::LE, 0.0), nd + nm + n,
                 ess.energy_per_module);
        }
        for (int t = 0; t < T; ++t) {
            const int ch = p.add_var("Pch", 0.0, kInf, VarType::Continuous);
            const int dis = p.add_var("Pdis", 0.0, kInf, VarType::Continuous);
            sub.ch[n][t] = ch;
            sub.dis[n][t] = dis;
            link(p.add_row("cap_ch", {{ch, 1.0}}, RowSense::LE, 0.0), nd + nm + n,
                 ess.max_charge_power);
            link(p.add_row("cap_dis", {{dis, 1.0}}, RowSense::LE, 0.0), nd + nm + n,
                 ess.max_discharge_power);
            p.add_row("soc_dyn",
                      {{sub.soc[n][t + 1], 1.0},
                       {sub.soc[n][t], -1.0},
                       {ch, -ess.eta_ch * dt},
                       {dis, dt / ess.eta_dis}},
                      RowSense::EQ, 0.0);
            p.set_obj(ch, ess.maintenance_rate * dt);
            p.set_obj(dis, ess.maintenance_rate * dt);
        }
        p.add_row("soc_cycle", {{sub.soc[n][0], 1.0}, {sub.soc[n][T], -1.0}}, RowSense::EQ, 0.0);
    }

    const std::array<const std::vector<double>*, 3> loads = {&sc.load_e, &sc.load_h, &sc.load_c};
    for (int r = 0; r < kNumCarriers; ++r) {
        sub.shed[r].assign(T, -1);
        for (int t = 0; t < T; ++t) {
            const int c = p.add_var("shed", 0.0, (*loads[r])[t], VarType::Continuous);
            sub.shed[r][t] = c;
            p.set_obj(c, inst.shed_cost[r] * dt);
        }
    }

    for (int t = 0; t < T; ++t) {
        for (int r = 0; r < kNumCarriers; ++r) {
            std::vector<std::pair<int, double>> row;
            for (int d = 0; d < nd; ++d) {
                const CouplingMatrix& cm = inst.devices[d].coupling;
                if (sub.dev_e[d][t] >= 0 && cm.c[r][0] != 0.0) {
                    row.emplace_back(sub.dev_e[d][t], cm.c[r][0]);
                }
                if (sub.dev_g[d][t] >= 0 && cm.c[r][1] != 0.0) {
                    row.emplace_back(sub.dev_g[d][t], cm.c[r][1]);
                }
            }
            if (r == static_cast<int>(Carrier::Electricity)) {
                for (int m = 0; m < nm; ++m) row.emplace_back(sub.res_p[m][t], 1.0);
            }
            for (int n = 0; n < nn; ++n) {
                if (static_cast<int>(inst.ess_options[n].carrier()) != r) continue;
                row.emplace_back(sub.dis[n][t], 1.0);
                row.emplace_back(sub.ch[n][t], -1.0);
            }
            row.emplace_back(sub.shed[r][t], 1.0);
            const RowSense sense =
                r == static_cast<int>(Carrier::Electricity) ? RowSense::EQ : RowSense::GE;
            p.add_row("balance", std::move(row), sense, (*loads[r])[t]);
        }
    }
    return sub;
}

void set_first_stage(ScenarioLp& sub, const std::vector<double>& first_stage) {
    for (const auto& l : sub.links) {
        sub.lp.rows[l.row].rhs = l.mult * first_stage[l.master];
    }
}

std::vector<double> flatten_first_stage(const EhInstance& inst, const PlanDecision& plan) {
    std::vector<double> x;
    x.reserve(first_stage_size(inst));
    for (int v : plan.u) x.push_back(v);
    for (int v : plan.z_res) x.push_back(v);
    for (int v : plan.z_ess) x.push_back(v);
    return x;
}

}  // namespace ehplan
