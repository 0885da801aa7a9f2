/*
 * C interface to the collatz library.
 *
 * Every fallible call returns a collatz_status. On failure the out
 * parameters are left untouched and collatz_last_error() describes the
 * problem; the message is per-thread and valid until the next call on
 * that thread.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_destroy function. Strings returned through char** are
 * released with collatz_string_free. Large integers cross the boundary
 * as decimal strings.
 */
#ifndef COLLATZ_COLLATZ_H
#define COLLATZ_COLLATZ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(COLLATZ_BUILDING)
#    define COLLATZ_API __declspec(dllexport)
#  else
#    define COLLATZ_API __declspec(dllimport)
#  endif
#else
#  define COLLATZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum collatz_status {
  COLLATZ_OK = 0,
  COLLATZ_ERR_INVALID_ARGUMENT = 1,
  COLLATZ_ERR_DOMAIN = 2,
  COLLATZ_ERR_OVERFLOW = 3,
  COLLATZ_ERR_CAP_EXCEEDED = 4,
  COLLATZ_ERR_INSUFFICIENT_DATA = 5,
  COLLATZ_ERR_VERIFICATION = 6,
  COLLATZ_ERR_IO = 7,
  COLLATZ_ERR_INTERNAL = 8
} collatz_status;

COLLATZ_API const char* collatz_last_error(void);
COLLATZ_API const char* collatz_status_name(collatz_status status);
COLLATZ_API const char* collatz_version(void);
COLLATZ_API void collatz_string_free(char* s);

/* ---- shared value lists ---------------------------------------------- */

/* Ordered list of naturals held as decimal strings. */
typedef struct collatz_numbers collatz_numbers;

COLLATZ_API size_t collatz_numbers_size(const collatz_numbers* list);
/* Borrowed pointer, valid while the list lives. NULL if out of range. */
COLLATZ_API const char* collatz_numbers_at(const collatz_numbers* list, size_t index);
COLLATZ_API collatz_status collatz_numbers_join(const collatz_numbers* list, const char* sep, char** out);
COLLATZ_API void collatz_numbers_destroy(collatz_numbers* list);

/* ---- core dynamics --------------------------------------------------- */

#define COLLATZ_DEFAULT_CAP 1000000u

typedef struct collatz_stopping {
  uint64_t sigma;
  uint64_t odd_steps; /* odd values among X(1)..X(sigma) */
  int capped;
} collatz_stopping;

COLLATZ_API collatz_status collatz_step(uint64_t x, uint64_t* out);
COLLATZ_API collatz_status collatz_odd_step(uint64_t x, uint64_t* out);
COLLATZ_API collatz_status collatz_two_adic_valuation(uint64_t x, unsigned* out);
COLLATZ_API collatz_status collatz_total_stopping_time(uint64_t x, uint64_t cap, collatz_stopping* out);
/* Unbounded variant; x is a decimal string. */
COLLATZ_API collatz_status collatz_total_stopping_time_big(const char* x, uint64_t cap, collatz_stopping* out);
/* Values X(1).. up to the first return to 1 or the cap. */
COLLATZ_API collatz_status collatz_trajectory(const char* x, uint64_t cap, collatz_numbers** values,
                                              int* terminated);

/* ---- parity statistics ----------------------------------------------- */

typedef struct collatz_record {
  uint64_t x;
  uint64_t sigma;
  uint64_t odd_steps;
  uint64_t p_odd_numerator; /* odd values among X(1)..X(sigma+1) */
  double p_odd;             /* p_odd_numerator / sigma */
} collatz_record;

typedef struct collatz_scan collatz_scan;
typedef struct collatz_histogram collatz_histogram;

typedef struct collatz_fit {
  double alpha;
  double intercept;
  double r_squared;
  double window_lo;
  double window_hi;
  uint64_t bins_used;
  uint64_t sample_count;
} collatz_fit;

/* "0101..." for t = 1..sigma. */
COLLATZ_API collatz_status collatz_parity_sequence(uint64_t x, char** bits);
COLLATZ_API collatz_status collatz_p_odd(uint64_t x, collatz_record* out);
COLLATZ_API collatz_status collatz_record_json(const collatz_record* record, char** out);

/* cache_path may be NULL. When set, the file is loaded if present and
 * rewritten after a successful scan. On overflow or cap failure
 * *failing_x (if non-NULL) receives the offending start. */
COLLATZ_API collatz_status collatz_scan_run(uint64_t lo, uint64_t hi, unsigned workers, const char* cache_path,
                                            collatz_scan** out, uint64_t* failing_x);
COLLATZ_API size_t collatz_scan_size(const collatz_scan* scan);
COLLATZ_API collatz_status collatz_scan_record(const collatz_scan* scan, size_t index, collatz_record* out);
COLLATZ_API collatz_status collatz_scan_max_p_odd(const collatz_scan* scan, uint64_t x_threshold,
                                                  collatz_record* out);
COLLATZ_API collatz_status collatz_scan_mean_sigma(const collatz_scan* scan, double* out);
COLLATZ_API collatz_status collatz_scan_csv(const collatz_scan* scan, char** out);
COLLATZ_API collatz_status collatz_scan_plot(const collatz_scan* scan, char** out);
COLLATZ_API void collatz_scan_destroy(collatz_scan* scan);

COLLATZ_API collatz_status collatz_histogram_from_scan(const collatz_scan* scan, unsigned bins,
                                                       collatz_histogram** out);
COLLATZ_API collatz_status collatz_histogram_from_values(const double* values, size_t count, unsigned bins,
                                                         collatz_histogram** out);
/* Parses the `bin_lo,bin_hi,probability` CSV format. */
COLLATZ_API collatz_status collatz_histogram_from_csv(const char* text, collatz_histogram** out);
COLLATZ_API size_t collatz_histogram_bins(const collatz_histogram* h);
COLLATZ_API collatz_status collatz_histogram_bin(const collatz_histogram* h, size_t index, double* lo, double* hi,
                                                 double* probability);
COLLATZ_API uint64_t collatz_histogram_sample_count(const collatz_histogram* h);
COLLATZ_API collatz_status collatz_histogram_csv(const collatz_histogram* h, char** out);
/* Two columns (bin_center probability); log10 != 0 gives log10 columns. */
COLLATZ_API collatz_status collatz_histogram_plot(const collatz_histogram* h, int log10, char** out);
COLLATZ_API void collatz_histogram_destroy(collatz_histogram* h);

COLLATZ_API collatz_status collatz_power_law_fit(const collatz_histogram* h, double window_lo, double window_hi,
                                                 collatz_fit* out);
COLLATZ_API collatz_status collatz_fit_json(const collatz_fit* fit, char** out);

/* ---- odd tree -------------------------------------------------------- */

typedef enum collatz_odd_kind {
  COLLATZ_TRIVIAL_CYCLE = 0,
  COLLATZ_DEC = 1, /* 4n+1 */
  COLLATZ_INC = 2  /* 4n-1 */
} collatz_odd_kind;

typedef struct collatz_class {
  collatz_odd_kind kind;
  uint64_t n;
  int root3;
} collatz_class;

typedef struct collatz_tree collatz_tree;

typedef struct collatz_roots_report {
  uint64_t checked;
  uint64_t counterexamples;
  uint64_t first_counterexample; /* 0 when none */
} collatz_roots_report;

COLLATZ_API collatz_status collatz_classify(uint64_t x, collatz_class* out);
/* include_increasing = 0: the 4n+1 closed-form family only;
 * otherwise also the 4n-1 predecessor of y = 6n-1. */
COLLATZ_API collatz_status collatz_predecessors(uint64_t y, size_t count, int include_increasing,
                                                collatz_numbers** out);
COLLATZ_API collatz_status collatz_predecessors_direct(uint64_t y, unsigned k_max, collatz_numbers** out);
COLLATZ_API collatz_status collatz_tree_build(uint64_t root, uint64_t max_value, unsigned max_depth,
                                              collatz_tree** out);
COLLATZ_API size_t collatz_tree_node_count(const collatz_tree* tree);
COLLATZ_API collatz_status collatz_tree_json(const collatz_tree* tree, char** out);
COLLATZ_API collatz_status collatz_tree_dot(const collatz_tree* tree, char** out);
COLLATZ_API void collatz_tree_destroy(collatz_tree* tree);
COLLATZ_API collatz_status collatz_verify_roots(uint64_t n_max, collatz_roots_report* out);

/* ---- increasing sequences -------------------------------------------- */

typedef enum collatz_multiplier_verdict {
  COLLATZ_MULTIPLIER_ACCEPTED = 0,
  COLLATZ_MULTIPLIER_REJECTED_TWO = 1,
  COLLATZ_MULTIPLIER_REJECTED_THREE = 2,
  COLLATZ_MULTIPLIER_REJECTED_COMPOSITE = 3,
  COLLATZ_MULTIPLIER_REJECTED_ZERO = 4
} collatz_multiplier_verdict;

typedef struct collatz_qseq collatz_qseq;
typedef struct collatz_run collatz_run;

COLLATZ_API collatz_status collatz_n_terms(unsigned q, collatz_numbers** out);
COLLATZ_API collatz_status collatz_n_table_csv(unsigned q_max, char** out);
COLLATZ_API collatz_multiplier_verdict collatz_validate_multiplier(uint64_t m, int strict);
COLLATZ_API const char* collatz_multiplier_verdict_name(collatz_multiplier_verdict verdict);

COLLATZ_API collatz_status collatz_qseq_create(unsigned q, uint64_t multiplier, int strict, collatz_qseq** out);
COLLATZ_API int collatz_qseq_verified(const collatz_qseq* seq);
COLLATZ_API collatz_status collatz_qseq_values(const collatz_qseq* seq, collatz_numbers** out);
COLLATZ_API collatz_status collatz_qseq_n_terms(const collatz_qseq* seq, collatz_numbers** out);
COLLATZ_API collatz_status collatz_qseq_json(const collatz_qseq* seq, char** out);
COLLATZ_API void collatz_qseq_destroy(collatz_qseq* seq);

/* x0 = 2^(s+2) n - (2^(s+1) + 1) as a decimal string. */
COLLATZ_API collatz_status collatz_run_seed(unsigned s, uint64_t n, char** x0);
COLLATZ_API collatz_status collatz_run_verify(const char* x0, unsigned s, collatz_run** out);
COLLATZ_API int collatz_run_passed(const collatz_run* run);
COLLATZ_API unsigned collatz_run_maximal(const collatz_run* run);
/* x0, F(x0), ..., F^s(x0). */
COLLATZ_API collatz_status collatz_run_values(const collatz_run* run, collatz_numbers** out);
COLLATZ_API void collatz_run_destroy(collatz_run* run);

#ifdef __cplusplus
}
#endif

#endif /* COLLATZ_COLLATZ_H */
