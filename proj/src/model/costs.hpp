#ifndef EHPLAN_MODEL_COSTS_HPP
#define EHPLAN_MODEL_COSTS_HPP

#include "model/types.hpp"
#include "risk/risk.hpp"

namespace ehplan {

// Recomputes the full cost breakdown from a plan and schedule. Never trusts a
// solver objective: trading, maintenance and shedding costs are summed from the
// schedule, VaR/CVaR from the realized per-scenario cost vector.
CostBreakdown evaluate_costs(const EhInstance& instance, const PlanDecision& plan,
                             const OperationSchedule& schedule, double alpha, double beta);

// Annualized investment cost of a plan on its own.
double investment_cost(const EhInstance& instance, const PlanDecision& plan);

}  // namespace ehplan

#endif
