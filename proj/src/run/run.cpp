#include "run/run.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "io/csv.hpp"
#include "io/synth.hpp"
#include "solve/solve.hpp"

namespace ehplan {

namespace fs = std::filesystem;

namespace {

YearSeries load_year(const RunConfig& cfg) {
    if (!cfg.year_csv.empty()) return ingest_year(cfg.year_csv);
    return synth_year(cfg.synth_seed, cfg.synth_profile);
}

Catalog load_cfg_catalog(const RunConfig& cfg) {
    Catalog cat = cfg.catalog.empty() ? default_catalog() : load_catalog(cfg.catalog);
    return apply_case_preset(cat, cfg.case_preset);
}

struct ReducedSet {
    ScenarioSet set;
    ReductionTrace trace;  // empty unless backward
};

ReducedSet reduce_scenarios(const RunConfig& cfg, const YearSeries& year) {
    ScenarioSet full = slice_days(year, cfg.steps_per_day);
    ReducedSet out;
    if (cfg.reduction_method == "none" || full.size() <= cfg.reduction_count) {
        out.set = std::move(full);
    } else if (cfg.reduction_method == "backward") {
        auto [set, trace] = backward_reduce(full, cfg.reduction_count);
        out.set = std::move(set);
        out.trace = std::move(trace);
    } else {
        out.set = kmeans_reduce(full, cfg.reduction_count, cfg.reduction_seed);
    }
    return out;
}

SolveOptions solve_options(const RunConfig& cfg) {
    SolveOptions o;
    o.gap = cfg.mip_gap;
    o.time_limit_s = cfg.time_limit_s;
    o.max_iter = cfg.max_iter;
    return o;
}

// Solves one instance with the configured method and writes the per-run
// artifact set into `dir`.
PlanSolution solve_and_emit(const RunConfig& cfg, const EhInstance& inst, const fs::path& dir) {
    fs::create_directories(dir);
    RiskConfig risk{cfg.alpha, cfg.beta};
    auto backend = make_highs_backend();

    PlanSolution sol;
    if (cfg.solve_method == "benders") {
        auto [s, log] = benders_solve(inst, risk, *backend, solve_options(cfg));
        sol = std::move(s);
        write_benders_log_csv(log, (dir / "benders_log.csv").string());
    } else {
        sol = solve_monolithic(inst, risk, *backend, solve_options(cfg));
    }
    if (sol.status == PlanStatus::Infeasible) {
        throw infeasible_error("instance is infeasible; check loads against candidate capacity");
    }
    const auto violations = validate_schedule(inst, sol.plan, sol.schedule);
    if (!violations.empty()) {
        throw solver_error("solver schedule failed validation: " + violations.front().constraint +
                           " residual " + std::to_string(violations.front().residual));
    }
    write_cost_report(sol.costs, sol.zeta_star, (dir / "costs.csv").string());
    write_plan_csv(inst, sol.plan, (dir / "plan.csv").string());
    write_shedding_csv(inst, sol.schedule, (dir / "shedding_hourly.csv").string());
    write_trading_csv(inst, sol.schedule, (dir / "trading_hourly.csv").string());
    write_solution_json(inst, sol, (dir / "solution.json").string());
    return sol;
}

std::string cell_name(double alpha, double beta) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "cell_a%g_b%g", alpha, beta);
    return buf;
}

void write_reduced_scenarios_csv(const ScenarioSet& set, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw data_error("cannot write " + path);
    out << "scenario,prob,origin,hour,load_e_mw,load_h_mw,load_c_mw,wind_mps,irradiance_wpm2,"
           "price_e_rmb_per_mwh\n";
    for (int s = 0; s < set.size(); ++s) {
        const Scenario& sc = set.scenarios[s];
        for (int t = 0; t < sc.steps(); ++t) {
            out << s << ',' << sc.prob << ',' << set.origin[s] << ',' << t << ',' << sc.load_e[t]
                << ',' << sc.load_h[t] << ',' << sc.load_c[t] << ',' << sc.wind_speed[t] << ','
                << sc.irradiance[t] << ',' << sc.price_e[t] << "\n";
        }
    }
}

}  // namespace

Catalog apply_case_preset(const Catalog& catalog, const std::string& preset) {
    Catalog out;
    out.devices = catalog.devices;
    const bool res = preset == "case2" || preset == "case4" || preset == "custom";
    const bool ess = preset == "case3" || preset == "case4" || preset == "custom";
    if (res) out.res_options = catalog.res_options;
    if (ess) out.ess_options = catalog.ess_options;
    return out;
}

EhInstance build_instance(const RunConfig& cfg, const Catalog& catalog,
                          const std::vector<Scenario>& scenarios) {
    EhInstance inst;
    inst.devices = catalog.devices;
    inst.res_options = catalog.res_options;
    inst.ess_options = catalog.ess_options;
    inst.scenarios = scenarios;
    inst.gas_price = cfg.gas_price_rmb_per_mwh();
    inst.shed_cost = {cfg.shed_cost_e, cfg.shed_cost_h, cfg.shed_cost_c};
    inst.res_penetration_cap = cfg.sigma;
    inst.discount_rate = cfg.discount_rate;
    inst.res_max_modules = cfg.res_max_modules;
    inst.dt_hours = cfg.dt_hours;
    inst.validate();
    return inst;
}

void run_plan(const RunConfig& cfg) {
    const fs::path dir(cfg.output_dir);
    fs::create_directories(dir);
    const YearSeries year = load_year(cfg);
    const ReducedSet reduced = reduce_scenarios(cfg, year);
    if (!reduced.trace.empty()) {
        write_reduction_trace_csv(reduced.trace, (dir / "reduction_trace.csv").string());
    }
    const Catalog cat = load_cfg_catalog(cfg);
    const EhInstance inst = build_instance(cfg, cat, reduced.set.scenarios);

    if (cfg.solve_method == "oracle") {
        RiskConfig risk{cfg.alpha, cfg.beta};
        auto backend = make_highs_backend();
        const double obj = brute_force_oracle(inst, risk, *backend);
        std::ofstream out(dir / "costs.csv");
        out << "component,value_1e4_rmb\nobjective," << money(obj) << "\n";
    } else {
        solve_and_emit(cfg, inst, dir);
    }
    write_manifest(cfg, "plan", (dir / "manifest.json").string());
}

void run_sweep(const RunConfig& cfg) {
    const fs::path dir(cfg.output_dir);
    fs::create_directories(dir);
    const YearSeries year = load_year(cfg);
    const ReducedSet reduced = reduce_scenarios(cfg, year);
    if (!reduced.trace.empty()) {
        write_reduction_trace_csv(reduced.trace, (dir / "reduction_trace.csv").string());
    }
    const Catalog cat = load_cfg_catalog(cfg);
    const EhInstance inst = build_instance(cfg, cat, reduced.set.scenarios);

    const std::vector<double> alphas =
        cfg.alpha_list.empty() ? std::vector<double>{cfg.alpha} : cfg.alpha_list;
    const std::vector<double> betas =
        cfg.beta_list.empty() ? std::vector<double>{cfg.beta} : cfg.beta_list;

    std::vector<GridRow> grid;
    std::vector<std::string> notes;
    for (double a : alphas) {
        for (double b : betas) {
            RunConfig cell = cfg;
            cell.alpha = a;
            cell.beta = b;
            GridRow row;
            row.alpha = a;
            row.beta = b;
            try {
                const PlanSolution sol = solve_and_emit(cell, inst, dir / cell_name(a, b));
                row.solved = true;
                row.plan = sol.plan;
                row.costs = sol.costs;
            } catch (const Error& e) {
                notes.push_back(cell_name(a, b) + ": " + e.what());
            }
            grid.push_back(std::move(row));
        }
    }
    write_investment_grid_csv(inst, grid, (dir / "investment_grid.csv").string());
    write_manifest(cfg, "sweep", (dir / "manifest.json").string(), notes);
    if (!notes.empty() &&
        notes.size() == alphas.size() * betas.size()) {
        throw solver_error("every sweep cell failed; first: " + notes.front());
    }
}

void run_reduce(const RunConfig& cfg) {
    const fs::path dir(cfg.output_dir);
    fs::create_directories(dir);
    const YearSeries year = load_year(cfg);
    const ReducedSet reduced = reduce_scenarios(cfg, year);
    write_reduced_scenarios_csv(reduced.set, (dir / "reduced_scenarios.csv").string());
    if (!reduced.trace.empty()) {
        write_reduction_trace_csv(reduced.trace, (dir / "reduction_trace.csv").string());
    }
    write_manifest(cfg, "reduce", (dir / "manifest.json").string());
}

void run_synth(const RunConfig& cfg) {
    const fs::path dir(cfg.output_dir);
    fs::create_directories(dir);
    write_year_csv(synth_year(cfg.synth_seed, cfg.synth_profile), (dir / "year.csv").string());
    write_manifest(cfg, "synth", (dir / "manifest.json").string());
}

void run_audit(const RunConfig& cfg) {
    if (cfg.solution_file.empty()) throw config_error("audit requires solution_file");
    const fs::path dir(cfg.output_dir);
    fs::create_directories(dir);
    const LoadedSolution loaded = load_solution_json(cfg.solution_file);
    const auto violations =
        validate_schedule(loaded.instance, loaded.solution.plan, loaded.solution.schedule);

    std::ofstream out(dir / "audit_report.csv");
    if (!out) throw data_error("cannot write audit report");
    out << "constraint,scenario,step,residual,detail\n";
    for (const auto& v : violations) {
        out << v.constraint << ',' << v.scenario << ',' << v.step << ',' << v.residual << ','
            << v.detail << "\n";
    }
    write_manifest(cfg, "audit", (dir / "manifest.json").string());
    if (!violations.empty()) {
        throw infeasible_error("audit found " + std::to_string(violations.size()) +
                               " constraint violations; see audit_report.csv");
    }
}

void dispatch_verb(const RunConfig& cfg, const std::string& verb) {
    if (verb == "plan") run_plan(cfg);
    else if (verb == "sweep") run_sweep(cfg);
    else if (verb == "reduce") run_reduce(cfg);
    else if (verb == "synth") run_synth(cfg);
    else if (verb == "audit") run_audit(cfg);
    else throw config_error("unknown verb: " + verb);
}

int run_verb(const RunConfig& cfg, const std::string& verb) {
    try {
        dispatch_verb(cfg, verb);
        return 0;
    } catch (const Error& e) {
        std::cerr << "ehplan: " << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "ehplan: " << e.what() << "\n";
        return static_cast<int>(ErrorCode::Solver);
    }
}

}  // namespace ehplan
