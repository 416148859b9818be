#ifndef EHPLAN_RISK_RISK_HPP
#define EHPLAN_RISK_RISK_HPP

#include <utility>
#include <vector>

#include "common/error.hpp"

namespace ehplan {

// Discrete loss distribution: realizations with probabilities summing to one.
struct LossDistribution {
    std::vector<double> losses;
    std::vector<double> probs;

    void validate() const;
};

struct RiskConfig {
    double alpha = 0.95;  // confidence level in [0,1)
    double beta = 0.5;    // risk weight in [0,1]

    void validate() const;
};

// Smallest realized loss whose cumulative probability reaches alpha.
double empirical_var(const LossDistribution& dist, double alpha);

// CVaR at level alpha: probability-weighted mean of the (1-alpha) tail, with the
// boundary atom weighted fractionally. Equals min over zeta of
// zeta + (1/(1-alpha)) * sum_s p_s * max(0, loss_s - zeta).
double cvar(const LossDistribution& dist, double alpha);

// A linear expression over MILP columns: terms plus a constant.
struct LinearExpr {
    std::vector<std::pair<int, double>> terms;  // (column, coefficient)
    double constant = 0.0;
};

// The linear CVaR machinery to splice into a minimization MILP.
// Column ids refer to the target problem; the caller allocates zeta and the
// per-scenario excess columns before asking for the terms.
struct RiskTerms {
    int zeta_col = -1;
    std::vector<int> excess_cols;  // one per scenario, lower bound 0

    // Rows excess_s - loss_s + zeta >= -loss_const_s, stored as LHS expressions
    // with sense >= and the RHS below.
    std::vector<LinearExpr> excess_rows;
    std::vector<double> excess_rhs;

    // Objective contribution: (1-beta) * sum p_s loss_s + beta * zeta
    // + beta/(1-alpha) * sum p_s excess_s.
    std::vector<std::pair<int, double>> objective_terms;
    double objective_constant = 0.0;
};

RiskTerms emit_risk_terms(const std::vector<LinearExpr>& scenario_losses,
                          const std::vector<double>& probs, const RiskConfig& risk, int zeta_col,
                          const std::vector<int>& excess_cols);

}  // namespace ehplan

#endif
