#include <cstdio>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "ehplan.h"

namespace {

struct RunDeleter {
    void operator()(ehp_run* r) const { ehp_run_destroy(r); }
};

int execute(const std::string& verb, const std::string& config_path,
            const std::vector<std::pair<std::string, std::string>>& overrides,
            bool print_config) {
    std::unique_ptr<ehp_run, RunDeleter> run(ehp_run_create());
    if (!run) {
        std::fprintf(stderr, "ehplan: out of memory\n");
        return EHP_ERR_SOLVER;
    }
    auto fail = [&](int rc) {
        std::fprintf(stderr, "ehplan: %s\n", ehp_run_last_error(run.get()));
        return rc;
    };
    if (!config_path.empty()) {
        if (int rc = ehp_run_load_config(run.get(), config_path.c_str())) return fail(rc);
    }
    for (const auto& [key, value] : overrides) {
        if (int rc = ehp_run_set(run.get(), key.c_str(), value.c_str())) return fail(rc);
    }
    if (print_config) std::printf("%s\n", ehp_run_config_json(run.get()));
    if (int rc = ehp_run_exec(run.get(), verb.c_str())) return fail(rc);
    return EHP_OK;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Energy-hub investment planner with CVaR risk weighting"};
    app.require_subcommand(1);
    app.footer("Config keys can be set with repeated --set key=value; flags below are\n"
               "shortcuts for the most common ones and win over the config file.");

    std::string config_path;
    std::vector<std::string> sets;
    bool print_config = false;
    app.add_option("-c,--config", config_path, "JSON config file");
    app.add_option("-s,--set", sets, "Override a config key, key=value");
    app.add_flag("--print-config", print_config, "Echo the effective config before running");

    // Common shortcuts, applied after --set in command-line order independence.
    std::vector<std::pair<std::string, std::string>> shortcuts;
    auto shortcut = [&](const char* flag, const char* key, const char* help) {
        app.add_option_function<std::string>(
            flag, [&shortcuts, key](const std::string& v) { shortcuts.emplace_back(key, v); },
            help);
    };
    shortcut("-o,--output", "output_dir", "Output directory");
    shortcut("--alpha", "alpha", "CVaR confidence level");
    shortcut("--beta", "beta", "Risk weight");
    shortcut("--year", "year_csv", "Year data CSV (omit to synthesize)");
    shortcut("--seed", "synth_seed", "Synthetic-year seed");
    shortcut("--case", "case_preset", "Case preset: case1..case4|custom");
    shortcut("--method", "solve_method", "monolithic|benders|oracle");
    shortcut("--reduction", "reduction_method", "backward|kmeans|none");
    shortcut("--scenarios", "reduction_count", "Reduced scenario count");
    shortcut("--solution", "solution_file", "Solution JSON for audit");

    for (const char* verb : {"plan", "sweep", "reduce", "synth", "audit"}) {
        app.add_subcommand(verb)->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    std::vector<std::pair<std::string, std::string>> overrides;
    for (const std::string& s : sets) {
        const size_t eq = s.find('=');
        if (eq == std::string::npos) {
            std::fprintf(stderr, "ehplan: --set expects key=value, got '%s'\n", s.c_str());
            return EHP_ERR_CONFIG;
        }
        overrides.emplace_back(s.substr(0, eq), s.substr(eq + 1));
    }
    overrides.insert(overrides.end(), shortcuts.begin(), shortcuts.end());

    const std::string verb = app.get_subcommands().front()->get_name();
    return execute(verb, config_path, overrides, print_config);
}
