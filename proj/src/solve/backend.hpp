#ifndef EHPLAN_SOLVE_BACKEND_HPP
#define EHPLAN_SOLVE_BACKEND_HPP

#include <memory>
#include <string>
#include <vector>

#include "model/milp.hpp"

namespace ehplan {

enum class SolveStatus { Optimal, Infeasible, Unbounded, Limit, Error };

struct SolveResult {
    SolveStatus status = SolveStatus::Error;
    double objective = 0.0;
    std::vector<double> x;
    std::vector<double> row_duals;  // LP solves only; shadow prices d(obj)/d(rhs)
    std::vector<double> dual_ray;   // infeasibility certificate when available
    double gap = 0.0;               // achieved relative MIP gap
    std::string message;
};

// Backend contract: an LP solve on a feasible bounded problem returns both primal
// values and per-row dual multipliers. A single backend handle is not assumed
// thread-safe; instantiate one per worker.
class SolverBackend {
  public:
    virtual ~SolverBackend() = default;
    virtual bool supports_milp() const = 0;
    virtual bool supports_lp_duals() const = 0;
    virtual SolveResult solve_milp(const MilpProblem& p, double rel_gap, double time_limit_s) = 0;
    // Solves the LP relaxation (integrality dropped) and extracts duals.
    virtual SolveResult solve_lp(const MilpProblem& p) = 0;
    // Dumps the problem in CPLEX LP text format for external cross-checks.
    virtual void write_lp_file(const MilpProblem& p, const std::string& path) = 0;
};

std::unique_ptr<SolverBackend> make_highs_backend();

}  // namespace ehplan

#endif
