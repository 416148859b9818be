#ifndef EHPLAN_SOLVE_SOLVE_HPP
#define EHPLAN_SOLVE_SOLVE_HPP

#include <map>
#include <string>
#include <vector>

#include "model/costs.hpp"
#include "model/milp.hpp"
#include "model/validate.hpp"
#include "solve/backend.hpp"

namespace ehplan {

enum class PlanStatus { OptimalWithinGap, Infeasible, IterationLimit };

struct PlanSolution {
    PlanDecision plan;
    OperationSchedule schedule;
    CostBreakdown costs;
    PlanStatus status = PlanStatus::Infeasible;
    double achieved_gap = 0.0;
    double zeta_star = 0.0;  // optimizer's CVaR threshold, logged next to empirical VaR
};

struct BendersCut {
    enum class Kind { Optimality, Feasibility } kind = Kind::Optimality;
    int scenario = -1;
    double constant = 0.0;
    std::map<int, double> master_coeffs;  // master column -> coefficient
};

struct BendersIteration {
    int iteration = 0;
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    double gap = 0.0;
    int cuts_added = 0;
    double master_ms = 0.0;
    double sub_ms = 0.0;
};
using BendersLog = std::vector<BendersIteration>;

struct SolveOptions {
    double gap = 1e-4;
    double time_limit_s = 0.0;  // 0 disables
    int max_iter = 200;
};

PlanSolution solve_monolithic(const EhInstance& instance, const RiskConfig& risk,
                              SolverBackend& backend, const SolveOptions& opts = {});

// Investment master plus per-scenario operation subproblems with the storage
// state binaries relaxed; every run is certified by relaxation_audit and falls
// back to the monolithic path if the relaxation is violated.
std::pair<PlanSolution, BendersLog> benders_solve(const EhInstance& instance,
                                                  const RiskConfig& risk, SolverBackend& backend,
                                                  const SolveOptions& opts = {});

// Exhaustive enumeration of first-stage and storage-state assignments, one LP per
// assignment. Refuses instances beyond a million LP solves.
double brute_force_oracle(const EhInstance& instance, const RiskConfig& risk,
                          SolverBackend& backend);

// Steps where a storage charges and discharges simultaneously.
struct AuditFlag {
    int scenario = 0;
    int step = 0;
    int ess_option = 0;
    double product = 0.0;  // MW^2
};
std::vector<AuditFlag> relaxation_audit(const EhInstance& instance, const PlanSolution& solution);

void write_benders_log_csv(const BendersLog& log, const std::string& path);

}  // namespace ehplan

#endif
