#ifndef EHPLAN_RUN_REPORT_HPP
#define EHPLAN_RUN_REPORT_HPP

#include <string>
#include <vector>

#include "io/config.hpp"
#include "scenarios/scenarios.hpp"
#include "solve/solve.hpp"

namespace ehplan {

// Money figures are printed in 1e4 RMB with 2 decimals throughout.
std::string money(double rmb);

void write_cost_report(const CostBreakdown& costs, double zeta, const std::string& path);
void write_plan_csv(const EhInstance& inst, const PlanDecision& plan, const std::string& path);
void write_shedding_csv(const EhInstance& inst, const OperationSchedule& sched,
                        const std::string& path);
void write_trading_csv(const EhInstance& inst, const OperationSchedule& sched,
                       const std::string& path);

// One row per sweep cell: selections plus the cost summary.
struct GridRow {
    double alpha = 0.0, beta = 0.0;
    bool solved = false;
    PlanDecision plan;
    CostBreakdown costs;
};
void write_investment_grid_csv(const EhInstance& inst, const std::vector<GridRow>& rows,
                               const std::string& path);

struct DeviationRow {
    std::string label;
    DeviationReport report;
};
void write_deviation_csv(const std::vector<DeviationRow>& rows, const std::string& path);

// Self-contained solution dump: instance, plan, schedule and costs, so an
// audit can re-validate from the file alone.
std::string solution_json(const EhInstance& inst, const PlanSolution& sol);
struct LoadedSolution {
    EhInstance instance;
    PlanSolution solution;
};
LoadedSolution load_solution_json(const std::string& path);
void write_solution_json(const EhInstance& inst, const PlanSolution& sol,
                         const std::string& path);

void write_manifest(const RunConfig& cfg, const std::string& verb, const std::string& path,
                    const std::vector<std::string>& notes = {});

}  // namespace ehplan

#endif
