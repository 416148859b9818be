#ifndef EHPLAN_MODEL_VALIDATE_HPP
#define EHPLAN_MODEL_VALIDATE_HPP

#include <string>
#include <vector>

#include "model/types.hpp"

namespace ehplan {

// One constraint violation. `constraint` is the formulation label (C13..C32),
// scenario/step are -1 for first-stage constraints.
struct Violation {
    std::string constraint;
    int scenario = -1;
    int step = -1;
    double residual = 0.0;
    std::string detail;
};

using ViolationReport = std::vector<Violation>;

// Checks every formulation constraint at absolute tolerance 1e-6 (MW/MWh scale).
// Violations are data, not errors: the report is empty iff the solution is feasible.
ViolationReport validate_schedule(const EhInstance& instance, const PlanDecision& plan,
                                  const OperationSchedule& schedule, double tol = 1e-6);

}  // namespace ehplan

#endif
