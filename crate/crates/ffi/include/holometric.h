#ifndef HOLOMETRIC_H
#define HOLOMETRIC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/*
 Result codes shared by every entry point.
 */
typedef enum HmStatus {
  HM_STATUS_OK = 0,
  HM_STATUS_NULL_POINTER = 1,
  HM_STATUS_INVALID_UTF8 = 2,
  HM_STATUS_PARSE_ERROR = 3,
  HM_STATUS_MATH_ERROR = 4,
  HM_STATUS_INVALID_ARGUMENT = 5,
  HM_STATUS_CHECK_FAILED = 6,
  HM_STATUS_PANIC = 7,
} HmStatus;

typedef enum HmIsotropyType {
  HM_ISOTROPY_TYPE_UNIPOTENT = 0,
  HM_ISOTROPY_TYPE_SEMISIMPLE = 1,
  HM_ISOTROPY_TYPE_MIXED = 2,
} HmIsotropyType;

/*
 A parsed `.liealg` document. Opaque to C.
 */
typedef struct HmSpec HmSpec;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Parses a NUL-terminated `.liealg` document into a new spec handle.

 # Safety
 `text` must be a valid NUL-terminated string and `out` valid for writes.
 */
enum HmStatus hm_spec_parse(const char *text, struct HmSpec **out);

/*
 Releases a spec handle. Null is ignored.

 # Safety
 `spec` must come from [`hm_spec_parse`] and not have been freed.
 */
void hm_spec_free(struct HmSpec *spec);

/*
 Dimension of the algebra.

 # Safety
 `spec` must be a live handle and `out` valid for writes.
 */
enum HmStatus hm_spec_dim(const struct HmSpec *spec, size_t *out);

/*
 Canonical text of the spec.

 # Safety
 `spec` must be a live handle and `out` valid for writes.
 */
enum HmStatus hm_spec_serialize(const struct HmSpec *spec, char **out);

/*
 Class name of a three-dimensional unimodular algebra, such as `SOL`.

 # Safety
 `spec` must be a live handle and `out` valid for writes.
 */
enum HmStatus hm_spec_classify(const struct HmSpec *spec, char **out);

/*
 Constant curvature of the spec's metric. On success `is_constant` says
 whether the curvature is constant; `value` receives the constant as text
 when it is, and `witness` (three indices) receives a basis triple
 `(i, j, k)` with `R(e_i, e_j)e_k` off the constant-curvature shape when
 it is not. `value` and `witness` may be null.

 # Safety
 `spec` must be a live handle, `is_constant` valid for writes, `value`
 null or valid for writes, `witness` null or valid for three writes.
 */
enum HmStatus hm_spec_constcurv(const struct HmSpec *spec,
                                bool *is_constant,
                                char **value,
                                size_t *witness);

/*
 Isotropy type of the model described by the spec's `[isotropy]` section.

 # Safety
 `spec` must be a live handle and `out` valid for writes.
 */
enum HmStatus hm_spec_isotropy_type(const struct HmSpec *spec, enum HmIsotropyType *out);

/*
 Runs the full verification suite; `json` receives the report and
 `all_passed` whether every check passed. Returns `CheckFailed` when any
 check fails, with the report still written.

 # Safety
 `json` and `all_passed` must be valid for writes.
 */
enum HmStatus hm_verify_paper(uint64_t seed, double tol, char **json, bool *all_passed);

/*
 Numeric Möbius invariance check; `max_residual` receives the largest
 residual over `samples` draws. Returns `CheckFailed` when it reaches `tol`.

 # Safety
 `max_residual` must be valid for writes.
 */
enum HmStatus hm_mobius_check(size_t samples, uint64_t seed, double tol, double *max_residual);

/*
 Releases a string returned by this library. Null is ignored.

 # Safety
 `s` must come from this library and not have been freed.
 */
void hm_string_free(char *s);

/*
 Message for the most recent failure on this thread, or null. The pointer
 stays valid until the next library call on the same thread.
 */
const char *hm_last_error(void);

/*
 Library version as a static NUL-terminated string.
 */
const char *hm_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOLOMETRIC_H */
