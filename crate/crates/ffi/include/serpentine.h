#ifndef SERPENTINE_H
#define SERPENTINE_H

/* Generated by cbindgen; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum SerpStatus {
  SERP_STATUS_OK = 0,
  SERP_STATUS_INVALID_ARGUMENT = 1,
  SERP_STATUS_UNSUPPORTED = 2,
  SERP_STATUS_DEGREE_OVERFLOW = 3,
  SERP_STATUS_VERIFICATION_FAILED = 4,
  SERP_STATUS_NULL_POINTER = 5,
  SERP_STATUS_INVALID_UTF8 = 6,
  SERP_STATUS_PANIC = 7,
} SerpStatus;

typedef enum SerpZChoice {
  SERP_Z_CHOICE_CONSECUTIVE = 0,
  SERP_Z_CHOICE_SHIFTED = 1,
} SerpZChoice;

typedef struct SerpReport SerpReport;

typedef struct SerpSymFun SerpSymFun;

typedef struct SerpTableau SerpTableau;

/**
 * Run parameters. Negative `n` / `k` mean "use the default range".
 */
typedef struct SerpConfig {
  uint32_t degree_bound;
  uint32_t n_max;
  uint32_t k_max;
  int32_t n;
  int32_t k;
  enum SerpZChoice z_choice;
} SerpConfig;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the calling thread's last error message into `buf` (truncated,
 * nul-terminated) and returns the full message length in bytes.
 *
 * # Safety
 * `buf` must be null or point to `len` writable bytes.
 */
size_t serp_last_error(char *buf, size_t len);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void serp_string_free(char *s);

/**
 * Parses a tableau written as `[1 2 4 / 3]`.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum SerpStatus serp_tableau_parse(const char *text, struct SerpTableau **out);

/**
 * # Safety
 * `t` must be null or a handle from [`serp_tableau_parse`].
 */
void serp_tableau_free(struct SerpTableau *t);

/**
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum SerpStatus serp_tableau_size(const struct SerpTableau *t, size_t *out);

/**
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum SerpStatus serp_tableau_maj(const struct SerpTableau *t, uint64_t *out);

/**
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum SerpStatus serp_tableau_charge(const struct SerpTableau *t, uint64_t *out);

/**
 * The stable major index of the serpentine tableau continuing `t`, which
 * must have an even number of cells.
 *
 * # Safety
 * `t` must be a live handle; `out` must be writable.
 */
enum SerpStatus serp_tableau_stable_major_index(const struct SerpTableau *t, int64_t *out);

/**
 * The Schur function `s_λ` in the power-sum basis.
 *
 * # Safety
 * `parts` must point to `len` values (or be null with `len == 0`); `out`
 * must be writable.
 */
enum SerpStatus serp_schur(const uint32_t *parts, size_t len, struct SerpSymFun **out);

/**
 * # Safety
 * `f` must be null or a handle from this library.
 */
void serp_symfun_free(struct SerpSymFun *f);

/**
 * Text form such as `1/2 p(1,1) + 1/2 p(2)`; free with [`serp_string_free`].
 *
 * # Safety
 * `f` must be a live handle; `out` must be writable.
 */
enum SerpStatus serp_symfun_to_string(const struct SerpSymFun *f, char **out);

/**
 * `⟨f, g⟩` under the boson pairing, as a `num/den` string.
 *
 * # Safety
 * `f` and `g` must be live handles; `out` must be writable.
 */
enum SerpStatus serp_symfun_inner_product(const struct SerpSymFun *f,
                                          const struct SerpSymFun *g,
                                          char **out);

/**
 * The default run parameters.
 */
struct SerpConfig serp_config_default(void);

/**
 * Runs a harness subcommand. A run whose checks fail still returns `OK`
 * with a report; inspect it with [`serp_report_passed`].
 *
 * # Safety
 * `subcommand` must be a nul-terminated string; `config` may be null for
 * the defaults; `out` must be writable.
 */
enum SerpStatus serp_run(const char *subcommand,
                         const struct SerpConfig *config,
                         struct SerpReport **out);

/**
 * # Safety
 * `r` must be null or a handle from [`serp_run`].
 */
void serp_report_free(struct SerpReport *r);

/**
 * # Safety
 * `r` must be a live handle; `out` must be writable.
 */
enum SerpStatus serp_report_passed(const struct SerpReport *r, bool *out);

/**
 * # Safety
 * `r` must be a live handle; `out` must be writable.
 */
enum SerpStatus serp_report_check_count(const struct SerpReport *r, size_t *out);

/**
 * The report as JSON; free with [`serp_string_free`].
 *
 * # Safety
 * `r` must be a live handle; `out` must be writable.
 */
enum SerpStatus serp_report_json(const struct SerpReport *r, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SERPENTINE_H */
