#include <cmath>

#include "solve/solve.hpp"

namespace ehplan {

namespace {

// Snap solver round-off so downstream validation sees clean integers and
// nonnegative powers.
void tidy(std::vector<double>& x, const MilpProblem& p) {
    for (size_t i = 0; i < x.size(); ++i) {
        if (p.vars[i].type != VarType::Continuous) {
            x[i] = std::round(x[i]);
        } else if (x[i] < 0.0 && x[i] > -1e-6) {
            x[i] = 0.0;
        }
    }
}

}  // namespace

PlanSolution solve_monolithic(const EhInstance& instance, const RiskConfig& risk,
                              SolverBackend& backend, const SolveOptions& opts) {
    BuildResult built = build_milp(instance, risk);
    SolveResult res = backend.solve_milp(built.problem, opts.gap, opts.time_limit_s);

    PlanSolution sol;
    switch (res.status) {
        case SolveStatus::Optimal:
            sol.status = PlanStatus::OptimalWithinGap;
            break;
        case SolveStatus::Infeasible:
            sol.status = PlanStatus::Infeasible;
            return sol;
        case SolveStatus::Limit:
            if (res.x.empty()) {
                throw solver_error("time limit hit before any incumbent: " + res.message);
            }
            sol.status = PlanStatus::IterationLimit;
            break;
        default:
            throw solver_error("backend failure: " + res.message);
    }

    tidy(res.x, built.problem);
    sol.plan = extract_plan(built.vars, res.x);
    sol.schedule = extract_schedule(instance, built.vars, res.x);
    sol.costs = evaluate_costs(instance, sol.plan, sol.schedule, risk.alpha, risk.beta);
    sol.achieved_gap = res.gap;
    sol.zeta_star = res.x[built.vars.zeta];
    return sol;
}

std::vector<AuditFlag> relaxation_audit(const EhInstance& instance, const PlanSolution& sol) {
    std::vector<AuditFlag> flags;
    for (size_t s = 0; s < sol.schedule.per_scenario.size(); ++s) {
        const ScenarioSchedule& ss = sol.schedule.per_scenario[s];
        for (size_t n = 0; n < instance.ess_options.size(); ++n) {
            for (size_t t = 0; t < ss.ess_charge[n].size(); ++t) {
                const double product = ss.ess_charge[n][t] * ss.ess_discharge[n][t];
                if (product > 1e-6) {
                    flags.push_back({static_cast<int>(s), static_cast<int>(t),
                                     static_cast<int>(n), product});
                }
            }
        }
    }
    return flags;
}

}  // namespace ehplan
