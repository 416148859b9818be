#include <cmath>

#include "model/costs.hpp"
#include "risk/risk.hpp"
#include "solve/scenario_lp.hpp"
#include "solve/solve.hpp"

namespace ehplan {

namespace {

// All 0/1 device selections with at least one CCHP and one TX.
std::vector<std::vector<int>> enumerate_u(const EhInstance& inst) {
    const int nd = static_cast<int>(inst.devices.size());
    std::vector<std::vector<int>> out;
    for (long long mask = 0; mask < (1LL << nd); ++mask) {
        std::vector<int> u(nd);
        int cchp = 0, tx = 0;
        for (int d = 0; d < nd; ++d) {
            u[d] = static_cast<int>((mask >> d) & 1);
            if (u[d] && inst.devices[d].kind == DeviceKind::CCHP) ++cchp;
            if (u[d] && inst.devices[d].kind == DeviceKind::TX) ++tx;
        }
        if (cchp >= 1 && tx >= 1) out.push_back(std::move(u));
    }
    return out;
}

bool penetration_ok(const EhInstance& inst, const std::vector<int>& u,
                    const std::vector<int>& z_res) {
    double res_cap = 0.0, conv_cap = 0.0;
    for (size_t m = 0; m < z_res.size(); ++m) {
        res_cap += z_res[m] * inst.res_options[m].rated_power;
    }
    for (size_t d = 0; d < u.size(); ++d) conv_cap += u[d] * inst.devices[d].max_input_e;
    return res_cap <= inst.res_penetration_cap * (conv_cap + res_cap) + 1e-9;
}

// Next mixed-radix counter value; returns false once exhausted.
bool advance(std::vector<int>& digits, const std::vector<int>& radix) {
    for (size_t i = 0; i < digits.size(); ++i) {
        if (++digits[i] < radix[i]) return true;
        digits[i] = 0;
    }
    return false;
}

}  // namespace

double brute_force_oracle(const EhInstance& inst, const RiskConfig& risk, SolverBackend& backend) {
    inst.validate();
    risk.validate();
    const int ns = static_cast<int>(inst.scenarios.size());
    const int nn = static_cast<int>(inst.ess_options.size());
    const int nm = static_cast<int>(inst.res_options.size());
    const int T = inst.scenarios.front().steps();

    const auto u_choices = enumerate_u(inst);
    std::vector<int> z_radix;
    for (int m = 0; m < nm; ++m) z_radix.push_back(inst.res_max_modules + 1);
    for (int n = 0; n < nn; ++n) z_radix.push_back(inst.ess_options[n].max_modules + 1);

    // Enumeration budget: every storage in use multiplies the per-scenario
    // charge/idle/discharge patterns.
    {
        double z_combos = 1.0;
        for (int r : z_radix) z_combos *= r;
        double worst_patterns = std::pow(3.0, static_cast<double>(nn) * T);
        const double budget = static_cast<double>(u_choices.size()) * z_combos * ns *
                              worst_patterns;
        if (budget > 1e6) {
            throw data_error("oracle enumeration budget exceeded: " + std::to_string(budget) +
                             " assignments");
        }
    }

    std::vector<ScenarioLp> subs;
    for (int s = 0; s < ns; ++s) subs.push_back(build_scenario_lp(inst, s));

    double best = kInf;
    for (const auto& u : u_choices) {
        std::vector<int> z(z_radix.size(), 0);
        do {
            std::vector<int> z_res(z.begin(), z.begin() + nm);
            std::vector<int> z_ess(z.begin() + nm, z.end());
            if (!penetration_ok(inst, u, z_res)) continue;

            PlanDecision plan{u, z_res, z_ess};
            const std::vector<double> first_stage = flatten_first_stage(inst, plan);
            const double ic = investment_cost(inst, plan);
            if (ic >= best) {
                // Operation cost is nonnegative; no storage/dispatch can recover this.
                continue;
            }

            // Storage state pattern space: one trit per active storage per step.
            std::vector<int> active;
            for (int n = 0; n < nn; ++n) {
                if (z_ess[n] > 0) active.push_back(n);
            }
            const int cells = static_cast<int>(active.size()) * T;

            LossDistribution dist;
            dist.probs.reserve(ns);
            bool abandoned = false;
            for (int s = 0; s < ns && !abandoned; ++s) {
                set_first_stage(subs[s], first_stage);
                double best_cost = kInf;
                std::vector<int> pattern(cells, 0);
                std::vector<int> radix(cells, 3);
                do {
                    // Apply the pattern as bounds: 0 idle, 1 charge-only, 2 discharge-only.
                    for (size_t a = 0; a < active.size(); ++a) {
                        const int n = active[a];
                        const EssModuleSpec& ess = inst.ess_options[n];
                        for (int t = 0; t < T; ++t) {
                            const int state = cells == 0 ? 0 : pattern[a * T + t];
                            subs[s].lp.vars[subs[s].ch[n][t]].ub =
                                state == 1 ? z_ess[n] * ess.max_charge_power : 0.0;
                            subs[s].lp.vars[subs[s].dis[n][t]].ub =
                                state == 2 ? z_ess[n] * ess.max_discharge_power : 0.0;
                        }
                    }
                    SolveResult r = backend.solve_lp(subs[s].lp);
                    if (r.status == SolveStatus::Optimal) best_cost = std::min(best_cost, r.objective);
                } while (cells > 0 && advance(pattern, radix));
                // Restore open bounds for the next first-stage point.
                for (size_t a = 0; a < active.size(); ++a) {
                    const int n = active[a];
                    for (int t = 0; t < T; ++t) {
                        subs[s].lp.vars[subs[s].ch[n][t]].ub = kInf;
                        subs[s].lp.vars[subs[s].dis[n][t]].ub = kInf;
                    }
                }
                if (!std::isfinite(best_cost)) {
                    abandoned = true;
                    break;
                }
                dist.losses.push_back(best_cost);
                dist.probs.push_back(inst.scenarios[s].prob);
            }
            if (abandoned) continue;

            double expected = 0.0;
            for (int s = 0; s < ns; ++s) expected += dist.probs[s] * dist.losses[s];
            const double obj =
                ic + (1.0 - risk.beta) * expected + risk.beta * cvar(dist, risk.alpha);
            best = std::min(best, obj);
        } while (advance(z, z_radix));
    }
    if (!std::isfinite(best)) throw infeasible_error("oracle found no feasible plan");
    return best;
}

}  // namespace ehplan
