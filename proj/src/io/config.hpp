#ifndef EHPLAN_IO_CONFIG_HPP
#define EHPLAN_IO_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "model/types.hpp"

namespace ehplan {

// Candidate equipment pool before case-preset filtering.
struct Catalog {
    std::vector<DeviceOption> devices;
    std::vector<ResModuleSpec> res_options;
    std::vector<EssModuleSpec> ess_options;

    void validate() const;
};

// Built-in reference catalog for the industrial-park study.
Catalog default_catalog();

Catalog load_catalog(const std::string& path);
void write_catalog(const Catalog& catalog, const std::string& path);

// JSON round-trip of a catalog fragment; used by the solution dump so an audit
// can rebuild the exact instance from the file alone.
std::string catalog_json_string(const Catalog& catalog);
Catalog catalog_from_json_string(const std::string& text);

// Flat-key run configuration; JSON on disk, every key optional with the
// defaults below. Key names match the struct fields.
struct RunConfig {
    // data
    std::string year_csv;  // empty -> synthetic year
    uint64_t synth_seed = 42;
    std::string synth_profile = "industrial-park-default";
    std::string catalog;  // path; empty -> built-in default
    std::string output_dir = "out";

    // risk
    double alpha = 0.95;
    double beta = 0.5;
    std::vector<double> alpha_list;  // sweep grids; empty -> {alpha}/{beta}
    std::vector<double> beta_list;

    // scenario reduction
    std::string reduction_method = "backward";  // backward|kmeans|none
    int reduction_count = 30;
    uint64_t reduction_seed = 1;

    // solve
    std::string solve_method = "benders";  // monolithic|benders|oracle
    double mip_gap = 1e-4;
    double time_limit_s = 0.0;  // 0 -> none
    int max_iter = 200;

    // physics
    double gas_price_rmb_per_m3 = 3.4;
    double gas_heating_value_kwh_per_m3 = 10.0;
    double discount_rate = 0.08;
    double sigma = 0.5;  // RES penetration cap
    double shed_cost_e = 2000.0, shed_cost_h = 1800.0, shed_cost_c = 1800.0;  // RMB/MWh
    double dt_hours = 1.0;
    int res_max_modules = 100;
    int steps_per_day = 24;

    // case preset: case1 converters only; case2 +RES; case3 +ESS; case4 all
    std::string case_preset = "case4";  // case1..case4|custom

    // audit verb input
    std::string solution_file;

    double gas_price_rmb_per_mwh() const {
        return gas_price_rmb_per_m3 / gas_heating_value_kwh_per_m3 * 1000.0;
    }
    void validate() const;
};

RunConfig load_run_config(const std::string& path);
// Applies one "key=value" override; lists accept comma-separated values.
void apply_override(RunConfig& cfg, const std::string& key, const std::string& value);

std::string run_config_json(const RunConfig& cfg);

}  // namespace ehplan

#endif
