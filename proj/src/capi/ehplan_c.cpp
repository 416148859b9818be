#include "ehplan.h"

#include <functional>
#include <new>
#include <string>

#include "run/run.hpp"

struct ehp_run {
    ehplan::RunConfig cfg;
    std::string last_error;
    std::string config_json;
};

namespace {

int guarded(ehp_run* run, const std::function<void()>& body) {
    run->last_error.clear();
    try {
        body();
        return EHP_OK;
    } catch (const ehplan::Error& e) {
        run->last_error = e.what();
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        run->last_error = e.what();
        return EHP_ERR_SOLVER;
    }
}

}  // namespace

extern "C" {

const char* ehp_version(void) { return "1.0.0"; }

ehp_run* ehp_run_create(void) { return new (std::nothrow) ehp_run(); }

void ehp_run_destroy(ehp_run* run) { delete run; }

int ehp_run_load_config(ehp_run* run, const char* path) {
    if (!run) return EHP_ERR_CONFIG;
    if (!path) {
        run->last_error = "null path";
        return EHP_ERR_CONFIG;
    }
    return guarded(run, [&] { run->cfg = ehplan::load_run_config(path); });
}

int ehp_run_set(ehp_run* run, const char* key, const char* value) {
    if (!run) return EHP_ERR_CONFIG;
    if (!key || !value) {
        run->last_error = "null key or value";
        return EHP_ERR_CONFIG;
    }
    // Apply on a copy so a rejected value leaves the held config untouched.
    return guarded(run, [&] {
        ehplan::RunConfig next = run->cfg;
        ehplan::apply_override(next, key, value);
        run->cfg = std::move(next);
    });
}

const char* ehp_run_config_json(ehp_run* run) {
    if (!run) return "";
    run->config_json = ehplan::run_config_json(run->cfg);
    return run->config_json.c_str();
}

int ehp_run_exec(ehp_run* run, const char* verb) {
    if (!run) return EHP_ERR_CONFIG;
    if (!verb) {
        run->last_error = "null verb";
        return EHP_ERR_CONFIG;
    }
    return guarded(run, [&] { ehplan::dispatch_verb(run->cfg, verb); });
}

const char* ehp_run_last_error(const ehp_run* run) {
    return run ? run->last_error.c_str() : "";
}

}  // extern "C"
