#ifndef Z3ORBIFOLD_H
#define Z3ORBIFOLD_H

#include <stddef.h>
#include <stdint.h>

/**
 * Status codes returned by every entry point.
 */
typedef enum Z3oStatus {
  Z3O_STATUS_OK = 0,
  Z3O_STATUS_NULL_POINTER = 1,
  Z3O_STATUS_INVALID_LEVEL = 2,
  Z3O_STATUS_INVALID_LABEL = 3,
  Z3O_STATUS_PARSE_ERROR = 4,
  Z3O_STATUS_BUFFER_TOO_SMALL = 5,
  Z3O_STATUS_VERIFICATION_FAILED = 6,
  Z3O_STATUS_CAP_EXCEEDED = 7,
  Z3O_STATUS_INVALID_ARGUMENT = 8,
  Z3O_STATUS_INTERNAL = 9,
} Z3oStatus;

typedef enum Z3oSuite {
  Z3O_SUITE_UNIT = 0,
  Z3O_SUITE_COMM = 1,
  Z3O_SUITE_ASSOC = 2,
  Z3O_SUITE_DUAL = 3,
  Z3O_SUITE_QDIM = 4,
  Z3O_SUITE_ORACLE = 5,
  Z3O_SUITE_CATALOG = 6,
} Z3oSuite;

/**
 * Opaque handle for one level.
 */
typedef struct Z3oCatalog Z3oCatalog;

/**
 * An irreducible module: `sector` is 0 (untwisted), 1 (T1) or 2 (T2).
 */
typedef struct Z3oLabel {
  uint32_t sector;
  uint32_t i;
  uint32_t j;
} Z3oLabel;

/**
 * One summand of a fusion product.
 */
typedef struct Z3oFusionTerm {
  struct Z3oLabel label;
  uint64_t multiplicity;
} Z3oFusionTerm;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates a catalog for level `level` (must be at least 1).
 */
enum Z3oStatus z3o_catalog_new(int64_t level, struct Z3oCatalog **out_handle);

/**
 * Releases a handle from [`z3o_catalog_new`]. Null is ignored.
 */
void z3o_catalog_free(struct Z3oCatalog *handle);

enum Z3oStatus z3o_catalog_level(const struct Z3oCatalog *handle, uint32_t *out_level);

/**
 * Number of irreducible modules, `9(k+1)`.
 */
enum Z3oStatus z3o_catalog_len(const struct Z3oCatalog *handle, size_t *out_len);

/**
 * Label at position `index` of the canonical order.
 */
enum Z3oStatus z3o_catalog_label(const struct Z3oCatalog *handle,
                                 size_t index,
                                 struct Z3oLabel *out_label);

/**
 * Parses `u:<i>:<j>`, `t1:<i>:<j>` or `t2:<i>:<j>` (NUL-terminated).
 */
enum Z3oStatus z3o_label_parse(const struct Z3oCatalog *handle,
                               const char *text,
                               struct Z3oLabel *out_label);

/**
 * Writes the canonical text of `label` into `buf` (NUL-terminated).
 * `out_needed` receives the required size including the NUL, also when
 * the buffer is too small.
 */
enum Z3oStatus z3o_label_format(const struct Z3oCatalog *handle,
                                struct Z3oLabel label,
                                char *buf,
                                size_t buf_len,
                                size_t *out_needed);

/**
 * Exact conformal weight as a reduced fraction `num/den`.
 */
enum Z3oStatus z3o_conformal_weight(const struct Z3oCatalog *handle,
                                    struct Z3oLabel label,
                                    int64_t *out_num,
                                    int64_t *out_den);

/**
 * Quantum dimension as a double.
 */
enum Z3oStatus z3o_qdim(const struct Z3oCatalog *handle, struct Z3oLabel label, double *out_value);

/**
 * Quantum dimension rendered to `digits` decimal places.
 */
enum Z3oStatus z3o_qdim_string(const struct Z3oCatalog *handle,
                               struct Z3oLabel label,
                               uint32_t digits,
                               char *buf,
                               size_t buf_len,
                               size_t *out_needed);

/**
 * 1 if the quantum dimension is exactly 1 (a simple current), else 0.
 */
enum Z3oStatus z3o_is_simple_current(const struct Z3oCatalog *handle,
                                     struct Z3oLabel label,
                                     uint8_t *out_flag);

/**
 * Contragredient module.
 */
enum Z3oStatus z3o_dual(const struct Z3oCatalog *handle,
                        struct Z3oLabel label,
                        struct Z3oLabel *out_label);

/**
 * Fusion rule `N_{a,b}^c`.
 */
enum Z3oStatus z3o_fusion_coefficient(const struct Z3oCatalog *handle,
                                      struct Z3oLabel a,
                                      struct Z3oLabel b,
                                      struct Z3oLabel c,
                                      uint64_t *out_value);

/**
 * Writes the terms of `a ⊠ b` in canonical order into `terms`.
 * `out_len` always receives the number of terms; if `capacity` is smaller
 * the call returns `BufferTooSmall` and writes nothing.
 */
enum Z3oStatus z3o_fuse(const struct Z3oCatalog *handle,
                        struct Z3oLabel a,
                        struct Z3oLabel b,
                        struct Z3oFusionTerm *terms,
                        size_t capacity,
                        size_t *out_len);

/**
 * Runs one verification suite with the default caps and seed. Returns
 * `VerificationFailed` when any check fails; counts are written either way.
 */
enum Z3oStatus z3o_verify(const struct Z3oCatalog *handle,
                          enum Z3oSuite suite,
                          uint64_t *out_checks,
                          uint64_t *out_failures);

/**
 * Copies the last error message of this thread into `buf` and returns
 * the size it needs including the NUL (0 when there is no message).
 */
size_t z3o_last_error_message(char *buf, size_t buf_len);

/**
 * Static, NUL-terminated version string.
 */
const char *z3o_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* Z3ORBIFOLD_H */
