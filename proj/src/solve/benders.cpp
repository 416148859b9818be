#include <chrono>
#include <cmath>
#include <fstream>

#include "model/power.hpp"
#include "risk/risk.hpp"
#include "solve/scenario_lp.hpp"
#include "solve/solve.hpp"

namespace ehplan {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Master {
    MilpProblem p;
    std::vector<int> u, z_res, z_ess;
    std::vector<int> theta, excess;
    int zeta = -1;

    int flat_col(int flat_index) const {
        const int nd = static_cast<int>(u.size());
        const int nm = static_cast<int>(z_res.size());
        if (flat_index < nd) return u[flat_index];
        if (flat_index < nd + nm) return z_res[flat_index - nd];
        return z_ess[flat_index - nd - nm];
    }
};

Master build_master(const EhInstance& inst, const RiskConfig& risk) {
    Master m;
    MilpProblem& p = m.p;
    const int nd = static_cast<int>(inst.devices.size());
    const int nm = static_cast<int>(inst.res_options.size());
    const int nn = static_cast<int>(inst.ess_options.size());
    const int ns = static_cast<int>(inst.scenarios.size());

    for (int d = 0; d < nd; ++d) {
        const DeviceOption& dev = inst.devices[d];
        m.u.push_back(p.add_var("u_" + dev.capacity_id, 0.0, 1.0, VarType::Binary));
        p.set_obj(m.u.back(), annualization_coefficient(inst.discount_rate, dev.lifetime_years) *
                                  dev.invest_cost);
    }
    for (int mm = 0; mm < nm; ++mm) {
        const ResModuleSpec& spec = inst.res_options[mm];
        m.z_res.push_back(p.add_var("z_" + spec.id, 0.0,
                                    static_cast<double>(inst.res_max_modules), VarType::Integer));
        p.set_obj(m.z_res.back(),
                  annualization_coefficient(inst.discount_rate, spec.lifetime_years) *
                      spec.invest_cost);
    }
    for (int n = 0; n < nn; ++n) {
        const EssModuleSpec& ess = inst.ess_options[n];
        m.z_ess.push_back(p.add_var("z_" + ess.id, 0.0, static_cast<double>(ess.max_modules),
                                    VarType::Integer));
        p.set_obj(m.z_ess.back(),
                  annualization_coefficient(inst.discount_rate, ess.lifetime_years) *
                      ess.invest_cost);
    }

    {
        std::vector<std::pair<int, double>> cchp, tx;
        for (int d = 0; d < nd; ++d) {
            if (inst.devices[d].kind == DeviceKind::CCHP) cchp.emplace_back(m.u[d], 1.0);
            if (inst.devices[d].kind == DeviceKind::TX) tx.emplace_back(m.u[d], 1.0);
        }
        p.add_row("cchp_required", std::move(cchp), RowSense::GE, 1.0);
        p.add_row("tx_required", std::move(tx), RowSense::GE, 1.0);
    }
    {
        const double sigma = inst.res_penetration_cap;
        std::vector<std::pair<int, double>> row;
        for (int mm = 0; mm < nm; ++mm) {
            row.emplace_back(m.z_res[mm], (1.0 - sigma) * inst.res_options[mm].rated_power);
        }
        for (int d = 0; d < nd; ++d) {
            if (inst.devices[d].max_input_e > 0.0) {
                row.emplace_back(m.u[d], -sigma * inst.devices[d].max_input_e);
            }
        }
        p.add_row("res_penetration", std::move(row), RowSense::LE, 0.0);
    }

    // Recourse values, CVaR threshold and per-scenario excess live in the master.
    m.zeta = p.add_var("zeta", 0.0, kInf, VarType::Continuous);
    p.set_obj(m.zeta, risk.beta);
    for (int s = 0; s < ns; ++s) {
        const double prob = inst.scenarios[s].prob;
        // Operation cost is nonnegative, so theta starts bounded at zero.
        m.theta.push_back(
            p.add_var("theta[" + std::to_string(s) + "]", 0.0, kInf, VarType::Continuous));
        p.set_obj(m.theta.back(), (1.0 - risk.beta) * prob);
        m.excess.push_back(
            p.add_var("excess[" + std::to_string(s) + "]", 0.0, kInf, VarType::Continuous));
        p.set_obj(m.excess.back(), risk.beta * prob / (1.0 - risk.alpha));
        p.add_row("excess_link[" + std::to_string(s) + "]",
                  {{m.excess.back(), 1.0}, {m.theta.back(), -1.0}, {m.zeta, 1.0}}, RowSense::GE,
                  0.0);
    }
    return m;
}

ScenarioSchedule schedule_from_sub(const EhInstance& inst, const ScenarioLp& sub,
                                   const std::vector<double>& x) {
    ScenarioSchedule out;
    auto fill = [&](const std::vector<std::vector<int>>& cols) {
        std::vector<std::vector<double>> v;
        for (const auto& per_opt : cols) {
            std::vector<double> series;
            series.reserve(per_opt.size());
            for (int c : per_opt) series.push_back(c >= 0 ? std::max(x[c], 0.0) : 0.0);
            v.push_back(std::move(series));
        }
        return v;
    };
    out.device_in_e = fill(sub.dev_e);
    out.device_in_g = fill(sub.dev_g);
    out.res_power = fill(sub.res_p);
    out.ess_charge = fill(sub.ch);
    out.ess_discharge = fill(sub.dis);
    out.ess_soc = fill(sub.soc);
    // Recover the state flags from the relaxed flows.
    const size_t nn = sub.ch.size();
    out.ess_v_charge.resize(nn);
    out.ess_v_discharge.resize(nn);
    for (size_t n = 0; n < nn; ++n) {
        for (size_t t = 0; t < sub.ch[n].size(); ++t) {
            out.ess_v_charge[n].push_back(out.ess_charge[n][t] > 1e-6 ? 1.0 : 0.0);
            out.ess_v_discharge[n].push_back(out.ess_discharge[n][t] > 1e-6 ? 1.0 : 0.0);
        }
    }
    (void)inst;
    for (int r = 0; r < kNumCarriers; ++r) {
        for (int c : sub.shed[r]) out.shed[r].push_back(std::max(x[c], 0.0));
    }
    return out;
}

}  // namespace

std::pair<PlanSolution, BendersLog> benders_solve(const EhInstance& inst, const RiskConfig& risk,
                                                  SolverBackend& backend,
                                                  const SolveOptions& opts) {
    inst.validate();
    risk.validate();
    if (opts.max_iter < 1) throw config_error("benders needs max_iter >= 1");
    if (!backend.supports_lp_duals()) {
        throw solver_error("benders requires an LP backend with dual extraction");
    }

    const int ns = static_cast<int>(inst.scenarios.size());
    Master master = build_master(inst, risk);
    std::vector<ScenarioLp> subs;
    subs.reserve(ns);
    for (int s = 0; s < ns; ++s) subs.push_back(build_scenario_lp(inst, s));

    BendersLog log;
    PlanSolution best;
    double best_ub = kInf;
    double lb = -kInf;
    std::vector<ScenarioSchedule> best_schedules;
    PlanDecision best_plan;
    double best_zeta = 0.0;
    bool converged = false;

    // Master must be solved to (near) exact optimality for a valid lower bound.
    const double master_gap = std::min(opts.gap * 1e-2, 1e-6);

    for (int iter = 1; iter <= opts.max_iter; ++iter) {
        BendersIteration it;
        it.iteration = iter;

        auto t0 = Clock::now();
        SolveResult mres = backend.solve_milp(master.p, master_gap, opts.time_limit_s);
        it.master_ms = ms_since(t0);
        if (mres.status == SolveStatus::Infeasible) {
            PlanSolution sol;
            sol.status = PlanStatus::Infeasible;
            return {sol, log};
        }
        if (mres.status != SolveStatus::Optimal && mres.status != SolveStatus::Limit) {
            throw solver_error("benders master failed: " + mres.message);
        }
        lb = std::max(lb, mres.objective);

        std::vector<double> first_stage(first_stage_size(inst));
        for (size_t i = 0; i < first_stage.size(); ++i) {
            first_stage[i] = std::round(mres.x[master.flat_col(static_cast<int>(i))]);
        }

        // Scenario subproblems at the fixed first stage.
        t0 = Clock::now();
        std::vector<double> costs(ns);
        std::vector<ScenarioSchedule> schedules(ns);
        std::vector<BendersCut> cuts;
        for (int s = 0; s < ns; ++s) {
            set_first_stage(subs[s], first_stage);
            SolveResult sres = backend.solve_lp(subs[s].lp);
            if (sres.status == SolveStatus::Unbounded) {
                throw solver_error("scenario subproblem unbounded; operation variables "
                                   "must be bounded by construction");
            }
            if (sres.status == SolveStatus::Infeasible) {
                // Load can always be shed, so this indicates numerics; certify with
                // a ray-based feasibility cut if one is available.
                if (sres.dual_ray.empty()) {
                    throw solver_error("scenario subproblem infeasible without a dual ray");
                }
                BendersCut cut;
                cut.kind = BendersCut::Kind::Feasibility;
                cut.scenario = s;
                double fixed = 0.0;
                for (int row = 0; row < subs[s].lp.num_rows(); ++row) {
                    fixed += sres.dual_ray[row] * subs[s].lp.rows[row].rhs;
                }
                for (const auto& l : subs[s].links) {
                    const double coef = sres.dual_ray[l.row] * l.mult;
                    // Stored negated so the shared row assembly below yields
                    // sum(coef . x) >= -fixed.
                    cut.master_coeffs[master.flat_col(l.master)] -= coef;
                    fixed -= coef * first_stage[l.master];
                }
                // The certificate proves ray . rhs(x) < 0 at the current point;
                // require it nonnegative for future masters.
                cut.constant = -fixed;
                cuts.push_back(std::move(cut));
                costs[s] = kInf;
                continue;
            }
            if (sres.status != SolveStatus::Optimal) {
                throw solver_error("scenario subproblem failed: " + sres.message);
            }
            costs[s] = sres.objective;
            schedules[s] = schedule_from_sub(inst, subs[s], sres.x);

            // Optimality cut from the capacity-row shadow prices.
            const double theta_now = mres.x[master.theta[s]];
            BendersCut cut;
            cut.kind = BendersCut::Kind::Optimality;
            cut.scenario = s;
            cut.constant = sres.objective;
            for (const auto& l : subs[s].links) {
                const double coef = sres.row_duals[l.row] * l.mult;
                if (coef == 0.0) continue;
                cut.master_coeffs[master.flat_col(l.master)] += coef;
                cut.constant -= coef * first_stage[l.master];
            }
            if (theta_now < sres.objective - 1e-7 * std::max(1.0, std::abs(sres.objective))) {
                cuts.push_back(std::move(cut));
            }
        }
        it.sub_ms = ms_since(t0);

        const bool any_infeasible =
            std::any_of(costs.begin(), costs.end(), [](double c) { return !std::isfinite(c); });
        if (!any_infeasible) {
            LossDistribution dist;
            for (int s = 0; s < ns; ++s) {
                dist.losses.push_back(costs[s]);
                dist.probs.push_back(inst.scenarios[s].prob);
            }
            PlanDecision plan;
            {
                size_t i = 0;
                for (size_t d = 0; d < inst.devices.size(); ++d) {
                    plan.u.push_back(static_cast<int>(first_stage[i++]));
                }
                for (size_t m = 0; m < inst.res_options.size(); ++m) {
                    plan.z_res.push_back(static_cast<int>(first_stage[i++]));
                }
                for (size_t n = 0; n < inst.ess_options.size(); ++n) {
                    plan.z_ess.push_back(static_cast<int>(first_stage[i++]));
                }
            }
            double expected = 0.0;
            for (int s = 0; s < ns; ++s) expected += dist.probs[s] * costs[s];
            const double ub = investment_cost(inst, plan) + (1.0 - risk.beta) * expected +
                              risk.beta * cvar(dist, risk.alpha);
            if (ub < best_ub) {
                best_ub = ub;
                best_plan = plan;
                best_schedules = schedules;
                // The master's own zeta can lag while cuts are few; the
                // incumbent's minimizing threshold is its empirical VaR.
                best_zeta = empirical_var(dist, risk.alpha);
            }
        }

        it.lower_bound = lb;
        it.upper_bound = best_ub;
        it.gap = std::isfinite(best_ub) ? (best_ub - lb) / std::max(std::abs(best_ub), 1e-9)
                                        : kInf;
        it.cuts_added = static_cast<int>(cuts.size());
        log.push_back(it);

        if (it.gap <= opts.gap || cuts.empty()) {
            converged = true;
            break;
        }
        for (const auto& cut : cuts) {
            std::vector<std::pair<int, double>> row;
            if (cut.kind == BendersCut::Kind::Optimality) {
                row.emplace_back(master.theta[cut.scenario], 1.0);
            }
            for (const auto& [col, coef] : cut.master_coeffs) row.emplace_back(col, -coef);
            master.p.add_row((cut.kind == BendersCut::Kind::Optimality ? "opt_cut[" : "feas_cut[") +
                                 std::to_string(cut.scenario) + "]",
                             std::move(row), RowSense::GE, cut.constant);
        }
    }

    if (!std::isfinite(best_ub)) throw solver_error("benders finished without an incumbent");

    PlanSolution sol;
    sol.plan = best_plan;
    sol.schedule.per_scenario = best_schedules;
    sol.costs = evaluate_costs(inst, sol.plan, sol.schedule, risk.alpha, risk.beta);
    sol.status = converged ? PlanStatus::OptimalWithinGap : PlanStatus::IterationLimit;
    sol.achieved_gap = log.empty() ? kInf : log.back().gap;
    sol.zeta_star = best_zeta;

    // The relaxation is only valid when no storage charges and discharges in the
    // same step; fall back to the exact monolithic solve otherwise.
    if (!relaxation_audit(inst, sol).empty()) {
        PlanSolution exact = solve_monolithic(inst, risk, backend, opts);
        return {exact, log};
    }
    return {sol, log};
}

void write_benders_log_csv(const BendersLog& log, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw data_error("cannot write " + path);
    out << "iteration,lb,ub,gap,cuts,master_ms,sub_ms\n";
    for (const auto& it : log) {
        out << it.iteration << ',' << it.lower_bound << ',' << it.upper_bound << ',' << it.gap
            << ',' << it.cuts_added << ',' << it.master_ms << ',' << it.sub_ms << '\n';
    }
}

}  // namespace ehplan
