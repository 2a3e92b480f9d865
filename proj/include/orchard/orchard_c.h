#ifndef ORCHARD_C_H
#define ORCHARD_C_H

/*
 * C interface to the orchard library. All functions return a status code;
 * results are passed back through out-parameters. Strings returned through
 * char** out-parameters are heap-allocated JSON (or text) documents that the
 * caller releases with orc_string_free. On failure, orc_last_error() returns
 * a JSON error object ({"error":{"code":...,"message":...}}) kept in
 * thread-local storage until the next orchard call on the same thread.
 *
 * Labels are 1-based everywhere. Handles are opaque and freed with the
 * matching *_free function; freeing NULL is a no-op.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum orc_status {
    ORC_OK = 0,
    ORC_ERR_INPUT = 1,
    ORC_ERR_NOT_GENERIC = 2,
    ORC_ERR_PARITY = 3,
    ORC_ERR_RETRY = 4,
    ORC_ERR_IO = 5,
    ORC_ERR_INTERNAL = 6
} orc_status;

typedef struct orc_config orc_config;   /* affine point configuration */
typedef struct orc_hconfig orc_hconfig; /* projective / spherical configuration */
typedef struct orc_gconfig orc_gconfig; /* function family + source points */
typedef struct orc_wiring orc_wiring;   /* pseudoline wiring diagram */

const char* orc_version(void);
void orc_string_free(char* s);
const char* orc_last_error(void);

/* ---- affine configurations -------------------------------------------- */

orc_status orc_config_parse(const char* text, orc_config** out);
orc_status orc_config_read(const char* path, orc_config** out);
void orc_config_free(orc_config* cfg);
orc_status orc_config_format(const orc_config* cfg, char** out);
int orc_config_dim(const orc_config* cfg);
int orc_config_size(const orc_config* cfg);
orc_status orc_config_random(int n, int d, unsigned long long seed, long coord_bound, int retries,
                             orc_config** out);

/* genericity report, or ORC_ERR_NOT_GENERIC naming a degenerate subset */
orc_status orc_check_json(const orc_config* cfg, char** out);

/* method is "all_pairs" or "anchor"; pair_i/pair_j of 0 skip the pair
 * report, with_invariants adds the phi/omega sign data, with_stats adds the
 * instrumented predicate counter */
orc_status orc_partition_json(const orc_config* cfg, const char* method, int with_invariants,
                              int pair_i, int pair_j, int with_stats, char** out);
orc_status orc_tree_json(const orc_config* cfg, char** out);
orc_status orc_flip_json(const orc_config* cfg, const int* flipset, int flipset_len, int mover,
                         char** out);
orc_status orc_parity_json(int n, int d, int trials, int steps, unsigned long long seed,
                           char** out);
orc_status orc_render_svg(const orc_config* cfg, int pair_i, int pair_j, char** out);
orc_status orc_dualize_json(const orc_config* cfg, unsigned long long seed, int retries,
                            char** out);

/* ---- generalized (function-family) configurations ---------------------- */

orc_status orc_gconfig_parse(const char* text, orc_gconfig** out);
orc_status orc_gconfig_read(const char* path, orc_gconfig** out);
void orc_gconfig_free(orc_gconfig* gcfg);
orc_status orc_gcheck_json(const orc_gconfig* gcfg, char** out);
orc_status orc_family_json(const orc_gconfig* gcfg, char** out);

/* ---- projective and spherical configurations --------------------------- */

orc_status orc_hconfig_parse(const char* text, orc_hconfig** out);
orc_status orc_hconfig_read(const char* path, orc_hconfig** out);
void orc_hconfig_free(orc_hconfig* hcfg);
orc_status orc_hcheck_json(const orc_hconfig* hcfg, char** out);
orc_status orc_projective_json(const orc_hconfig* hcfg, unsigned long long seed, int retries,
                               char** out);
orc_status orc_spherical_json(const orc_hconfig* hcfg, unsigned long long seed, int retries,
                              char** out);
orc_status orc_gamma_json(const orc_hconfig* hcfg, unsigned long long seed, int retries,
                          char** out);

/* ---- wiring diagrams ---------------------------------------------------- */

orc_status orc_wiring_parse(const char* text, orc_wiring** out);
orc_status orc_wiring_read(const char* path, orc_wiring** out);
void orc_wiring_free(orc_wiring* wd);
orc_status orc_wiring_format(const orc_wiring* wd, char** out);
orc_status orc_wiring_check_json(const orc_wiring* wd, char** out);
/* validity + parity + partition (even case) or both orientations (odd) */
orc_status orc_wiring_report_json(const orc_wiring* wd, char** out);
orc_status orc_wiring_digon_json(const orc_wiring* wd, int i, int j, char** out);
orc_status orc_wiring_move_json(const orc_wiring* wd, int position, char** out);
/* mode is "respect" or "oppose"; uses the primary compatible orientation */
orc_status orc_wiring_desing_json(const orc_wiring* wd, const char* mode, char** out);

#ifdef __cplusplus
}
#endif

#endif /* ORCHARD_C_H */
