#ifndef EHPLAN_MODEL_MILP_HPP
#define EHPLAN_MODEL_MILP_HPP

#include <limits>
#include <string>
#include <vector>

#include "model/types.hpp"
#include "risk/risk.hpp"

namespace ehplan {

enum class VarType { Continuous, Binary, Integer };
enum class RowSense { LE, GE, EQ };

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Sparse minimization MILP. The only object handed to solver backends.
struct MilpProblem {
    struct Variable {
        std::string name;
        double lb = 0.0;
        double ub = kInf;
        VarType type = VarType::Continuous;
    };
    struct Row {
        std::string name;
        std::vector<std::pair<int, double>> coeffs;
        RowSense sense = RowSense::LE;
        double rhs = 0.0;
    };

    std::vector<Variable> vars;
    std::vector<Row> rows;
    std::vector<double> objective;  // one coefficient per variable
    double objective_constant = 0.0;

    int add_var(std::string name, double lb, double ub, VarType type);
    int add_row(std::string name, std::vector<std::pair<int, double>> coeffs, RowSense sense,
                double rhs);
    void set_obj(int col, double coef) { objective[col] += coef; }
    int num_vars() const { return static_cast<int>(vars.size()); }
    int num_rows() const { return static_cast<int>(rows.size()); }
    void check_consistent() const;
};

// Column bookkeeping for mapping solver points back onto the domain types.
// Index -1 marks a variable that was not emitted (zero-capacity carrier).
struct VarMap {
    int steps = 0;
    std::vector<int> u;      // per device option
    std::vector<int> z_res;  // per res option
    std::vector<int> z_ess;  // per ess option

    // Second stage, indexed [scenario][option][step].
    std::vector<std::vector<std::vector<int>>> dev_in_e;
    std::vector<std::vector<std::vector<int>>> dev_in_g;
    std::vector<std::vector<std::vector<int>>> res_p;
    std::vector<std::vector<std::vector<int>>> ess_ch;
    std::vector<std::vector<std::vector<int>>> ess_dis;
    std::vector<std::vector<std::vector<int>>> ess_soc;  // steps+1 per option
    std::vector<std::vector<std::vector<int>>> ess_vch;
    std::vector<std::vector<std::vector<int>>> ess_vdis;
    std::vector<std::array<std::vector<int>, 3>> shed;  // [scenario][carrier][step]

    int zeta = -1;
    std::vector<int> excess;  // per scenario
};

struct BuildResult {
    MilpProblem problem;
    VarMap vars;
};

// Assembles the full two-stage planning MILP with the linearized CVaR objective.
BuildResult build_milp(const EhInstance& instance, const RiskConfig& risk);

// Closed-form size census of the problem emitted by build_milp.
struct MilpCensus {
    long long variables = 0;
    long long binaries = 0;
    long long integers = 0;
    long long rows = 0;
};
MilpCensus census(const EhInstance& instance);

// Reads a solver point back into domain decisions using the builder's map.
PlanDecision extract_plan(const VarMap& vm, const std::vector<double>& x);
OperationSchedule extract_schedule(const EhInstance& instance, const VarMap& vm,
                                   const std::vector<double>& x);

}  // namespace ehplan

#endif
