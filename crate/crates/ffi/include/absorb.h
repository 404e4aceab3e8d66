#ifndef ABSORB_H
#define ABSORB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum AbsorbStatus {
  ABSORB_STATUS_OK = 0,
  ABSORB_STATUS_NULL_POINTER = 1,
  ABSORB_STATUS_INVALID_UTF8 = 2,
  ABSORB_STATUS_PARSE = 3,
  ABSORB_STATUS_INVALID_INPUT = 4,
  ABSORB_STATUS_SIZE_LIMIT = 5,
  ABSORB_STATUS_IMPROPER = 6,
  ABSORB_STATUS_UNSUPPORTED = 7,
  ABSORB_STATUS_MISMATCH = 8,
  ABSORB_STATUS_OUT_OF_RANGE = 9,
  ABSORB_STATUS_PANIC = 10,
} AbsorbStatus;

/**
 * A finite module over an [`AbsorbRing`].
 */
typedef struct AbsorbModule AbsorbModule;

/**
 * A finite ring `Z_n1 x ... x Z_nk`.
 */
typedef struct AbsorbRing AbsorbRing;

/**
 * A submodule of an [`AbsorbModule`].
 */
typedef struct AbsorbSubmodule AbsorbSubmodule;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer is
 * valid until the next call into this library on the same thread.
 */
const char *absorb_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void absorb_string_free(char *s);

/**
 * Ring from its moduli, e.g. `{2, 3}` for `Z2 x Z3`.
 *
 * # Safety
 * `moduli` must point to `len` readable values; `out` must be writable.
 */
enum AbsorbStatus absorb_ring_new(const uint32_t *moduli, size_t len, struct AbsorbRing **out);

/**
 * Ring from text such as `Z8` or `Z2xZ3`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be writable.
 */
enum AbsorbStatus absorb_ring_parse(const char *spec, struct AbsorbRing **out);

/**
 * Number of elements, or 0 for a null handle.
 *
 * # Safety
 * `ring` must be null or a live handle.
 */
size_t absorb_ring_cardinality(const struct AbsorbRing *ring);

/**
 * # Safety
 * `ring` must be null or a live handle; it is invalid afterwards.
 */
void absorb_ring_free(struct AbsorbRing *ring);

/**
 * The ring as a module over itself.
 *
 * # Safety
 * `ring` must be a live handle; `out` must be writable.
 */
enum AbsorbStatus absorb_module_regular(const struct AbsorbRing *ring, struct AbsorbModule **out);

/**
 * Module from cyclic orders on coordinate 0 (`"2,4"`) or module JSON.
 * `ring` may be null when the JSON names its ring.
 *
 * # Safety
 * `ring` must be null or a live handle; `spec` must be a NUL-terminated
 * string; `out` must be writable.
 */
enum AbsorbStatus absorb_module_parse(const struct AbsorbRing *ring,
                                      const char *spec,
                                      struct AbsorbModule **out);

/**
 * # Safety
 * `module` must be null or a live handle.
 */
size_t absorb_module_cardinality(const struct AbsorbModule *module);

/**
 * Number of coordinates of a module element.
 *
 * # Safety
 * `module` must be null or a live handle.
 */
size_t absorb_module_width(const struct AbsorbModule *module);

/**
 * # Safety
 * `module` must be null or a live handle; it is invalid afterwards.
 */
void absorb_module_free(struct AbsorbModule *module);

/**
 * Number of submodules, including zero and the whole module.
 *
 * # Safety
 * `module` must be a live handle; `count` must be writable.
 */
enum AbsorbStatus absorb_module_submodule_count(const struct AbsorbModule *module, size_t *count);

/**
 * Submodule `index` in lattice order (by size, then elements).
 *
 * # Safety
 * `module` must be a live handle; `out` must be writable.
 */
enum AbsorbStatus absorb_module_submodule_at(const struct AbsorbModule *module,
                                             size_t index,
                                             struct AbsorbSubmodule **out);

/**
 * Submodule generated by `count` elements given as consecutive
 * coordinate tuples of length `absorb_module_width`.
 *
 * # Safety
 * `coords` must point to `count * width` readable values (it may be null
 * when `count` is 0); `module` must be a live handle; `out` writable.
 */
enum AbsorbStatus absorb_submodule_generated(const struct AbsorbModule *module,
                                             const uint32_t *coords,
                                             size_t count,
                                             struct AbsorbSubmodule **out);

/**
 * # Safety
 * `sub` must be null or a live handle.
 */
size_t absorb_submodule_len(const struct AbsorbSubmodule *sub);

/**
 * Whether `sub` belongs to a class: `prime`, `classical-prime`, `2abs`,
 * `c2a`, or `<k>abs`. Fails with `Improper` on the whole module.
 *
 * # Safety
 * `sub` must be a live handle; `predicate` a NUL-terminated string;
 * `holds` writable.
 */
enum AbsorbStatus absorb_submodule_is(const struct AbsorbSubmodule *sub,
                                      const char *predicate,
                                      bool *holds);

/**
 * # Safety
 * `sub` must be null or a live handle; it is invalid afterwards.
 */
void absorb_submodule_free(struct AbsorbSubmodule *sub);

/**
 * Classification of every proper submodule, as the CLI's JSON report.
 *
 * # Safety
 * `module` must be a live handle; `out` writable.
 */
enum AbsorbStatus absorb_classify_json(const struct AbsorbModule *module, char **out);

/**
 * Runs suites (comma-separated ids or `all`). `max_module` of 0 keeps the
 * default bound. `passed` receives the overall verdict.
 *
 * # Safety
 * `suites` must be a NUL-terminated string; `out` and `passed` writable.
 */
enum AbsorbStatus absorb_verify_json(const char *suites,
                                     size_t max_module,
                                     char **out,
                                     bool *passed);

/**
 * First submodule in class `left` but not `right`. `found` is false when
 * the bounded family is exhausted.
 *
 * # Safety
 * `left` and `right` must be NUL-terminated strings; `out` and `found`
 * writable.
 */
enum AbsorbStatus absorb_search_json(const char *left,
                                     const char *right,
                                     size_t max_module,
                                     char **out,
                                     bool *found);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ABSORB_H */
