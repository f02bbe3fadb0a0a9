/*
 * ncrsim - system-level simulator for NCR-assisted mmWave networks.
 *
 * C API over the simulation core. Handles are opaque; every function
 * returning int yields NCRSIM_OK on success and an error code otherwise,
 * with a human-readable message available from ncrsim_last_error().
 */
#ifndef NCRSIM_H
#define NCRSIM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define NCRSIM_OK 0
#define NCRSIM_ERR_INVALID_ARGUMENT 1
#define NCRSIM_ERR_CONFIG 2
#define NCRSIM_ERR_IO 3
#define NCRSIM_ERR_RUNTIME 4

#define NCRSIM_GROUP_ALL 0
#define NCRSIM_GROUP_CENTRAL 1
#define NCRSIM_GROUP_SIDE 2

#define NCRSIM_DIR_DL 0
#define NCRSIM_DIR_UL 1

typedef struct ncrsim_config ncrsim_config;
typedef struct ncrsim_result ncrsim_result;

typedef struct ncrsim_sample {
    uint64_t seed;
    uint64_t slot;
    uint32_t ue;
    uint8_t group;     /* NCRSIM_GROUP_CENTRAL or NCRSIM_GROUP_SIDE */
    uint8_t direction; /* NCRSIM_DIR_DL or NCRSIM_DIR_UL */
    uint8_t reserved[2];
    double sinr_db;
} ncrsim_sample;

const char* ncrsim_version(void);

/* Message describing the most recent failure on this thread. */
const char* ncrsim_last_error(void);

/* --- configuration ----------------------------------------------------- */

ncrsim_config* ncrsim_config_create(void);
void ncrsim_config_destroy(ncrsim_config* cfg);

/* Loads `key = value` lines; see the repository README for the schema. */
int ncrsim_config_load_file(ncrsim_config* cfg, const char* path);
int ncrsim_config_set(ncrsim_config* cfg, const char* key, const char* value);

/* NCRSIM_OK when runnable; otherwise writes the first problem into msg. */
int ncrsim_config_validate(const ncrsim_config* cfg, char* msg, size_t cap);

/* Space-separated scenario names the config requests ("all" expanded). */
int ncrsim_config_scenarios(const ncrsim_config* cfg, char* buf, size_t cap);
/* Returns the number of seeds; copies up to cap of them into buf. */
size_t ncrsim_config_seeds(const ncrsim_config* cfg, uint64_t* buf, size_t cap);

/* --- simulation --------------------------------------------------------- */

/* Runs one (scenario, seed) simulation; the result owns its samples. */
int ncrsim_run(const ncrsim_config* cfg, const char* scenario, uint64_t seed,
               ncrsim_result** out);

void ncrsim_result_destroy(ncrsim_result* result);

/* Appends src samples to dst (multi-seed aggregation). */
int ncrsim_result_merge(ncrsim_result* dst, const ncrsim_result* src);

size_t ncrsim_result_sample_count(const ncrsim_result* result);
/* Copies up to cap samples; returns the number copied. */
size_t ncrsim_result_samples(const ncrsim_result* result, ncrsim_sample* buf, size_t cap);

/* Linear-interpolated SINR quantile (dB) of the filtered sample set. */
int ncrsim_result_quantile(const ncrsim_result* result, int direction, int group, double q,
                           double* out_db);

/* quantile(scenario) - quantile(baseline) in dB at the same filter. */
int ncrsim_percentile_delta(const ncrsim_result* scenario, const ncrsim_result* baseline,
                            int direction, int group, double q, double* out_db);

/* --- export ------------------------------------------------------------- */

int ncrsim_result_write_csv(const ncrsim_result* result, const char* path);
int ncrsim_result_write_cdf_csv(const ncrsim_result* result, const char* path);

/* Percentile summary (10th/50th/90th and gains vs. the baseline entry). */
int ncrsim_write_summary_json(const ncrsim_result* const* results, size_t count,
                              size_t baseline_index, const char* path);

/* Human-readable gain table; returns needed length like snprintf. */
int ncrsim_format_gain_table(const ncrsim_result* const* results, size_t count,
                             size_t baseline_index, char* buf, size_t cap);

#ifdef __cplusplus
}
#endif

#endif /* NCRSIM_H */
