#include <Highs.h>

#include <map>

#include "common/error.hpp"
#include "solve/backend.hpp"

namespace ehplan {

namespace {

HighsModel to_highs(const MilpProblem& p, bool with_integrality) {
    HighsModel model;
    HighsLp& lp = model.lp_;
    lp.num_col_ = p.num_vars();
    lp.num_row_ = p.num_rows();
    lp.sense_ = ObjSense::kMinimize;
    lp.offset_ = p.objective_constant;
    lp.col_cost_ = p.objective;
    lp.col_lower_.reserve(p.vars.size());
    lp.col_upper_.reserve(p.vars.size());
    for (const auto& v : p.vars) {
        lp.col_lower_.push_back(v.lb);
        lp.col_upper_.push_back(v.ub);
    }
    if (with_integrality) {
        lp.integrality_.reserve(p.vars.size());
        for (const auto& v : p.vars) {
            lp.integrality_.push_back(v.type == VarType::Continuous ? HighsVarType::kContinuous
                                                                    : HighsVarType::kInteger);
        }
    }
    lp.a_matrix_.format_ = MatrixFormat::kRowwise;
    lp.a_matrix_.num_col_ = lp.num_col_;
    lp.a_matrix_.num_row_ = lp.num_row_;
    lp.a_matrix_.start_.assign(1, 0);  // the default-constructed matrix already holds a leading 0
    std::map<int, double> merged;
    for (const auto& row : p.rows) {
        // HiGHS rejects duplicate column indices within a row; rows may pick up
        // several terms on one column (e.g. a converter whose input and output
        // share a carrier), so sum them here.
        merged.clear();
        for (const auto& [col, coef] : row.coeffs) merged[col] += coef;
        for (const auto& [col, coef] : merged) {
            lp.a_matrix_.index_.push_back(col);
            lp.a_matrix_.value_.push_back(coef);
        }
        lp.a_matrix_.start_.push_back(static_cast<HighsInt>(lp.a_matrix_.index_.size()));
        switch (row.sense) {
            case RowSense::LE:
                lp.row_lower_.push_back(-kHighsInf);
                lp.row_upper_.push_back(row.rhs);
                break;
            case RowSense::GE:
                lp.row_lower_.push_back(row.rhs);
                lp.row_upper_.push_back(kHighsInf);
                break;
            case RowSense::EQ:
                lp.row_lower_.push_back(row.rhs);
                lp.row_upper_.push_back(row.rhs);
                break;
        }
    }
    return model;
}

SolveStatus map_status(HighsModelStatus st) {
    switch (st) {
        case HighsModelStatus::kOptimal: return SolveStatus::Optimal;
        case HighsModelStatus::kInfeasible: return SolveStatus::Infeasible;
        case HighsModelStatus::kUnbounded:
        case HighsModelStatus::kUnboundedOrInfeasible: return SolveStatus::Unbounded;
        case HighsModelStatus::kTimeLimit:
        case HighsModelStatus::kIterationLimit:
        case HighsModelStatus::kSolutionLimit: return SolveStatus::Limit;
        default: return SolveStatus::Error;
    }
}

class HighsBackend final : public SolverBackend {
  public:
    bool supports_milp() const override { return true; }
    bool supports_lp_duals() const override { return true; }

    SolveResult solve_milp(const MilpProblem& p, double rel_gap, double time_limit_s) override {
        Highs highs;
        configure(highs);
        if (rel_gap > 0.0) highs.setOptionValue("mip_rel_gap", rel_gap);
        if (time_limit_s > 0.0) highs.setOptionValue("time_limit", time_limit_s);
        if (highs.passModel(to_highs(p, true)) == HighsStatus::kError) {
            throw solver_error("backend rejected the model");
        }
        const HighsStatus rc = highs.run();
        SolveResult out;
        out.status = map_status(highs.getModelStatus());
        if (rc == HighsStatus::kError) out.status = SolveStatus::Error;
        out.message = highs.modelStatusToString(highs.getModelStatus());
        if (out.status == SolveStatus::Optimal || out.status == SolveStatus::Limit) {
            const HighsSolution& sol = highs.getSolution();
            if (sol.value_valid) {
                out.x = sol.col_value;
                out.objective = highs.getObjectiveValue();
                out.gap = highs.getInfo().mip_gap;
            } else if (out.status == SolveStatus::Limit) {
                out.message += " (no incumbent)";
            }
        }
        return out;
    }

    SolveResult solve_lp(const MilpProblem& p) override {
        Highs highs;
        configure(highs);
        if (highs.passModel(to_highs(p, false)) == HighsStatus::kError) {
            throw solver_error("backend rejected the model");
        }
        const HighsStatus rc = highs.run();
        SolveResult out;
        out.status = map_status(highs.getModelStatus());
        if (rc == HighsStatus::kError) out.status = SolveStatus::Error;
        out.message = highs.modelStatusToString(highs.getModelStatus());
        if (out.status == SolveStatus::Optimal) {
            const HighsSolution& sol = highs.getSolution();
            out.x = sol.col_value;
            out.row_duals = sol.row_dual;
            out.objective = highs.getObjectiveValue();
        } else if (out.status == SolveStatus::Infeasible) {
            bool has_ray = false;
            std::vector<double> ray(p.num_rows(), 0.0);
            if (highs.getDualRay(has_ray, ray.data()) == HighsStatus::kOk && has_ray) {
                out.dual_ray = std::move(ray);
            }
        }
        return out;
    }

    void write_lp_file(const MilpProblem& p, const std::string& path) override {
        Highs highs;
        configure(highs);
        HighsModel model = to_highs(p, true);
        // Column names make the dump cross-checkable.
        for (const auto& v : p.vars) model.lp_.col_names_.push_back(v.name);
        for (const auto& r : p.rows) model.lp_.row_names_.push_back(r.name);
        if (highs.passModel(std::move(model)) == HighsStatus::kError ||
            highs.writeModel(path) == HighsStatus::kError) {
            throw solver_error("failed to write LP file " + path);
        }
    }

  private:
    static void configure(Highs& highs) {
        highs.setOptionValue("output_flag", false);
        highs.setOptionValue("threads", 1);
        highs.setOptionValue("random_seed", 0);
    }
};

}  // namespace

std::unique_ptr<SolverBackend> make_highs_backend() { return std::make_unique<HighsBackend>(); }

}  // namespace ehplan
