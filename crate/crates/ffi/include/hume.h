#ifndef HUME_H
#define HUME_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HumeLevelKind {
  HUME_LEVEL_KIND_ARITHMETICAL = 0,
  HUME_LEVEL_KIND_SIGMA = 1,
  HUME_LEVEL_KIND_PI = 2,
} HumeLevelKind;

typedef enum HumeStatus {
  HUME_STATUS_OK = 0,
  HUME_STATUS_NULL_POINTER = 1,
  HUME_STATUS_INVALID_UTF8 = 2,
  HUME_STATUS_PARSE = 3,
  HUME_STATUS_DOMAIN = 4,
  HUME_STATUS_PANIC = 5,
} HumeStatus;

typedef struct HumeAcfSet HumeAcfSet;

typedef struct HumeFormula HumeFormula;

typedef struct HumeRcfSet HumeRcfSet;

/**
 * `n` is 0 for arithmetical formulas.
 */
typedef struct HumeLevel {
  enum HumeLevelKind kind;
  uint32_t n;
} HumeLevel;

/**
 * Dimension (`-1` for the empty set) and Euler characteristic.
 */
typedef struct HumeInvariant {
  int32_t dim;
  int64_t euler;
} HumeInvariant;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or null. Valid until the next
 * failing call on the same thread.
 */
const char *hume_last_error(void);

/**
 * # Safety
 * `s` is null or was returned by this library and not yet freed.
 */
void hume_string_free(char *s);

/**
 * # Safety
 * `src` is a nul-terminated string and `out_formula` is writable.
 */
enum HumeStatus hume_formula_parse(const char *src, struct HumeFormula **out_formula);

/**
 * # Safety
 * `f` is a live formula handle and `out_level` is writable.
 */
enum HumeStatus hume_formula_classify(const struct HumeFormula *f, struct HumeLevel *out_level);

/**
 * The formula in surface syntax; free with [`hume_string_free`].
 *
 * # Safety
 * `f` is a live formula handle and `out_text` is writable.
 */
enum HumeStatus hume_formula_print(const struct HumeFormula *f, char **out_text);

/**
 * # Safety
 * `f` is null or a handle from [`hume_formula_parse`] not yet freed.
 */
void hume_formula_free(struct HumeFormula *f);

/**
 * Accepts `roots(p)`, `co-roots(p)`, `empty` and `k`.
 *
 * # Safety
 * `src` is a nul-terminated string and `out_set` is writable.
 */
enum HumeStatus hume_acf_set_parse(const char *src, struct HumeAcfSet **out_set);

/**
 * # Safety
 * `s` is a live handle and `out_number` is writable.
 */
enum HumeStatus hume_acf_number(const struct HumeAcfSet *s, int64_t *out_number);

/**
 * # Safety
 * `a` and `b` are live handles and `out_equiv` is writable.
 */
enum HumeStatus hume_acf_hume_equiv(const struct HumeAcfSet *a,
                                    const struct HumeAcfSet *b,
                                    bool *out_equiv);

/**
 * # Safety
 * `s` is null or a handle from [`hume_acf_set_parse`] not yet freed.
 */
void hume_acf_set_free(struct HumeAcfSet *s);

/**
 * Accepts cell notation such as `(-2, -1) U {0}` or a sign-condition
 * formula such as `x^2-2 < 0`.
 *
 * # Safety
 * `src` is a nul-terminated string and `out_set` is writable.
 */
enum HumeStatus hume_rcf_set_parse(const char *src, struct HumeRcfSet **out_set);

/**
 * # Safety
 * `s` is a live handle and `out_inv` is writable.
 */
enum HumeStatus hume_rcf_invariant(const struct HumeRcfSet *s, struct HumeInvariant *out_inv);

/**
 * # Safety
 * `s` is a live handle and `out_number` is writable.
 */
enum HumeStatus hume_rcf_number(const struct HumeRcfSet *s, int64_t *out_number);

/**
 * # Safety
 * `a` and `b` are live handles and `out_equiv` is writable.
 */
enum HumeStatus hume_rcf_hume_equiv(const struct HumeRcfSet *a,
                                    const struct HumeRcfSet *b,
                                    bool *out_equiv);

/**
 * # Safety
 * `s` is null or a handle from [`hume_rcf_set_parse`] not yet freed.
 */
void hume_rcf_set_free(struct HumeRcfSet *s);

/**
 * Runs one CLI command. `argv` excludes the program name. The report is
 * written to `out_report` (free with [`hume_string_free`]) and the process
 * exit code the command would have produced to `out_code`.
 *
 * # Safety
 * `argv` holds `argc` nul-terminated strings; both out pointers are writable.
 */
enum HumeStatus hume_cli_run(const char *const *argv,
                             size_t argc,
                             char **out_report,
                             int *out_code);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* HUME_H */
