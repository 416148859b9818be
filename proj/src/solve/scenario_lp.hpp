#ifndef EHPLAN_SOLVE_SCENARIO_LP_HPP
#define EHPLAN_SOLVE_SCENARIO_LP_HPP

#include <vector>

#include "model/milp.hpp"

namespace ehplan {

// Single-scenario operation LP with the storage state binaries relaxed away.
// First-stage decisions enter only through row RHS values; `links` records the
// (row, first-stage variable, multiplier) structure so RHS updates and Benders
// cut coefficients share one source of truth.
//
// First-stage variables are addressed by a flat local index:
//   [0, nd)            device selections u
//   [nd, nd+nm)        RES module counts z
//   [nd+nm, nd+nm+nn)  ESS module counts z
struct ScenarioLp {
    MilpProblem lp;

    struct Link {
        int row = 0;
        int master = 0;  // flat first-stage index
        double mult = 0.0;
    };
    std::vector<Link> links;

    // Column maps, [option][step].
    std::vector<std::vector<int>> dev_e, dev_g, res_p, ch, dis, soc;
    std::array<std::vector<int>, 3> shed;
};

ScenarioLp build_scenario_lp(const EhInstance& instance, int scenario);

// Writes the first-stage point into the linked row RHS values.
void set_first_stage(ScenarioLp& sub, const std::vector<double>& first_stage);

inline int first_stage_size(const EhInstance& inst) {
    return static_cast<int>(inst.devices.size() + inst.res_options.size() +
                            inst.ess_options.size());
}

std::vector<double> flatten_first_stage(const EhInstance& inst, const PlanDecision& plan);

}  // namespace ehplan

#endif
