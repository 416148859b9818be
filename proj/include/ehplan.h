/* C interface to the energy-hub planning core.
 *
 * Usage: create a run handle, optionally load a JSON config file, override
 * individual keys, then execute one verb. All functions returning int give 0
 * on success or an EHP_ERR_* code; the message for the most recent failure on
 * a handle is available via ehp_run_last_error until the next call.
 */
#ifndef EHPLAN_H
#define EHPLAN_H

#ifdef __cplusplus
extern "C" {
#endif

enum {
    EHP_OK = 0,
    EHP_ERR_CONFIG = 2,
    EHP_ERR_DATA = 3,
    EHP_ERR_INFEASIBLE = 4,
    EHP_ERR_SOLVER = 5
};

typedef struct ehp_run ehp_run;

const char* ehp_version(void);

ehp_run* ehp_run_create(void);
void ehp_run_destroy(ehp_run* run);

/* Loads a flat-key JSON configuration file, replacing the handle's config. */
int ehp_run_load_config(ehp_run* run, const char* path);

/* Overrides one configuration key, e.g. ("beta", "0.9") or
 * ("beta_list", "0.1,0.5,0.9"). */
int ehp_run_set(ehp_run* run, const char* key, const char* value);

/* Returns the current configuration as a JSON string owned by the handle;
 * valid until the next call on the handle. */
const char* ehp_run_config_json(ehp_run* run);

/* Executes one verb: "plan", "sweep", "reduce", "synth" or "audit".
 * Artifacts are written under the configured output_dir. */
int ehp_run_exec(ehp_run* run, const char* verb);

/* Message of the most recent failure on this handle; empty string if none. */
const char* ehp_run_last_error(const ehp_run* run);

#ifdef __cplusplus
}
#endif

#endif
