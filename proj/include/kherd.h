/* C API for the kherd sample-selection library.
 *
 * All functions return kherd_status (except trivial accessors); on failure a
 * thread-local message is available from kherd_last_error(). Objects are
 * opaque handles created by *_create/_load/_build calls and released with the
 * matching *_free. Strings returned through char** out-parameters are
 * heap-allocated and must be released with kherd_string_free.
 */
#ifndef KHERD_H
#define KHERD_H

#include <stdint.h>

#if defined(_WIN32)
#define KHERD_API __declspec(dllexport)
#else
#define KHERD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kherd_status {
  KHERD_OK = 0,
  KHERD_ERR_INVALID = 1, /* bad arguments or failed validation */
  KHERD_ERR_IO = 2,      /* unreadable, unwritable or malformed file */
  KHERD_ERR_INTERNAL = 3
} kherd_status;

typedef struct kherd_dataset kherd_dataset;
typedef struct kherd_context kherd_context;
typedef struct kherd_selection kherd_selection;

KHERD_API const char *kherd_version(void);

/* Message for the most recent failure on this thread; never NULL. */
KHERD_API const char *kherd_last_error(void);

KHERD_API void kherd_string_free(char *s);

/* ---- datasets ------------------------------------------------------- */

/* features: row-major n x d; labels: length n or NULL. The data is copied. */
KHERD_API kherd_status kherd_dataset_create(const double *features, int64_t n,
                                            int64_t d, const int32_t *labels,
                                            kherd_dataset **out);

/* format: "csv", "rdsb", or NULL to detect from extension/magic. */
KHERD_API kherd_status kherd_dataset_load(const char *path, const char *format,
                                          kherd_dataset **out);
KHERD_API kherd_status kherd_dataset_save(const kherd_dataset *ds,
                                          const char *path,
                                          const char *format);

KHERD_API int64_t kherd_dataset_n(const kherd_dataset *ds);
KHERD_API int64_t kherd_dataset_d(const kherd_dataset *ds);
KHERD_API int kherd_dataset_has_labels(const kherd_dataset *ds);

/* Writes "sha256:<64 hex digits>" (71 chars + NUL) into out. */
KHERD_API kherd_status kherd_dataset_fingerprint(const kherd_dataset *ds,
                                                 char out[72]);
KHERD_API void kherd_dataset_free(kherd_dataset *ds);

/* dist: "gmm1" | "gmm2" | "circle-annulus" | "uniform-square". */
KHERD_API kherd_status kherd_synth(const char *dist, int64_t n, uint64_t seed,
                                   kherd_dataset **out);

/* ---- kernel context -------------------------------------------------- */

typedef struct kherd_kernel_options {
  const char *kind; /* "gaussian" | "laplacian" | "polynomial"; NULL=gaussian */
  double bandwidth; /* sigma; <= 0 selects the median heuristic */
  double degree;    /* polynomial only; <= 0 uses the default 2 */
  double offset;    /* polynomial only */
  int cache_gram;   /* nonzero caches the dense n x n Gram matrix */
} kherd_kernel_options;

KHERD_API kherd_status kherd_context_build(const kherd_dataset *ds,
                                           const kherd_kernel_options *opt,
                                           kherd_context **out);
KHERD_API double kherd_context_bandwidth(const kherd_context *ctx);
KHERD_API double kherd_context_kbar(const kherd_context *ctx);
KHERD_API void kherd_context_free(kherd_context *ctx);

/* ---- selection -------------------------------------------------------- */

typedef struct kherd_select_options {
  const char *algorithm;  /* "gkhr" | "gkh" | "random" | "stratified" |
                             "kmeans"; NULL = gkhr */
  const char *alpha_rule; /* "auto" | "ratio" | "explicit"; NULL = auto */
  double alpha;           /* used when alpha_rule is "explicit" */
  uint64_t seed;          /* randomised baselines only */
  int check_bound;        /* attach the bound verdict to the record */
} kherd_select_options;

KHERD_API kherd_status kherd_select(const kherd_context *ctx, int64_t m,
                                    const kherd_select_options *opt,
                                    kherd_selection **out);

KHERD_API int64_t kherd_selection_size(const kherd_selection *sel);
KHERD_API kherd_status kherd_selection_indices(const kherd_selection *sel,
                                               int64_t *out, int64_t capacity);
/* Final alpha-MMD^2 of the selection, recomputed exactly. */
KHERD_API double kherd_selection_criterion(const kherd_selection *sel);
KHERD_API double kherd_selection_alpha(const kherd_selection *sel);
/* Wall time of the selection loop itself, in (fractional) milliseconds. */
KHERD_API double kherd_selection_wall_ms(const kherd_selection *sel);
/* Serialised selection record, schema version 1. */
KHERD_API kherd_status kherd_selection_record_json(const kherd_selection *sel,
                                                   char **out_json);
KHERD_API void kherd_selection_free(kherd_selection *sel);

/* ---- evaluation and verification -------------------------------------- */

KHERD_API kherd_status kherd_alpha_mmd_sq(const kherd_context *ctx,
                                          const int64_t *indices, int64_t m,
                                          double alpha, double *out);

KHERD_API kherd_status kherd_bound_constants(const kherd_context *ctx,
                                             double alpha, int64_t m,
                                             double *c_alpha_sq, double *b,
                                             double *rhs);

/* Exhaustive minimisation over all size-m subsets (multisets when
 * with_replacement), guarded at 1e6 candidates. Returns a JSON report. */
KHERD_API kherd_status kherd_oracle_exhaustive_json(const kherd_context *ctx,
                                                    int64_t m, double alpha,
                                                    int with_replacement,
                                                    char **out_json);

/* ---- benchmark harness ------------------------------------------------- */

/* config_json: {"distributions": ["gmm1", ...], "ns": [...], "fracs": [...],
 *               "runs": int, "alpha_rule": "ratio"|"auto"|"explicit",
 *               "alpha_explicit": double, "seed": uint}. */
KHERD_API kherd_status kherd_bench_run_json(const char *config_json,
                                            char **out_report_json);
KHERD_API kherd_status kherd_bench_report_csv(const char *report_json,
                                              char **out_csv);

/* ---- visualisation ------------------------------------------------------ */

/* Renders the dataset with the record's selected indices highlighted. */
KHERD_API kherd_status kherd_render_svg(const kherd_dataset *ds,
                                        const char *record_json, int width,
                                        int height, char **out_svg);

#ifdef __cplusplus
}
#endif

#endif /* KHERD_H */
