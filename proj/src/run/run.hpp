#ifndef EHPLAN_RUN_RUN_HPP
#define EHPLAN_RUN_RUN_HPP

#include <string>

#include "io/config.hpp"
#include "run/report.hpp"

namespace ehplan {

// Case presets restrict the candidate pool: case1 converters only, case2 adds
// RES, case3 adds ESS, case4 (and custom) keeps everything.
Catalog apply_case_preset(const Catalog& catalog, const std::string& preset);

EhInstance build_instance(const RunConfig& cfg, const Catalog& catalog,
                          const std::vector<Scenario>& scenarios);

// Verb drivers; each writes its artifacts under cfg.output_dir and throws
// ehplan::Error on failure.
void run_plan(const RunConfig& cfg);
void run_sweep(const RunConfig& cfg);
void run_reduce(const RunConfig& cfg);
void run_synth(const RunConfig& cfg);
void run_audit(const RunConfig& cfg);

// Dispatches a verb name; throws ehplan::Error on failure.
void dispatch_verb(const RunConfig& cfg, const std::string& verb);

// Same, but reports to stderr and returns the process exit code (0 on
// success, otherwise the ErrorCode value).
int run_verb(const RunConfig& cfg, const std::string& verb);

}  // namespace ehplan

#endif
