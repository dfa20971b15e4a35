#ifndef RANKMETRIC_H
#define RANKMETRIC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Result of a call.
typedef enum RmStatus {
  RM_STATUS_OK = 0,
  RM_STATUS_NULL_POINTER = 1,
  RM_STATUS_INVALID_UTF8 = 2,
  RM_STATUS_INVALID_INPUT = 3,
  RM_STATUS_INVALID_PARAMS = 4,
  RM_STATUS_CAP_EXCEEDED = 5,
  // A checked property failed or a decoding was ambiguous.
  RM_STATUS_VIOLATION = 6,
  RM_STATUS_BUFFER_TOO_SMALL = 7,
  RM_STATUS_PANIC = 8,
} RmStatus;

// Metric selector for [`rm_pair_min_distance`].
typedef enum RmMetric {
  RM_METRIC_RANK = 0,
  RM_METRIC_HAMMING = 1,
} RmMetric;

// A linear code over `F_{q^m}`.
typedef struct RmCode RmCode;

// A nested pair `C_2 ⊊ C_1`.
typedef struct RmPair RmPair;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or an empty string. The
// pointer stays valid until the next call into the library on this thread.
const char *rm_last_error(void);

// Library version as a static NUL-terminated string.
const char *rm_version(void);

// # Safety
// `s` must come from this library and not have been freed. Null is ignored.
void rm_string_free(char *s);

// Parses a code file (`{"field": …, "n": …, "G": …}`).
//
// # Safety
// `json` must be a NUL-terminated string and `out` a writable pointer.
enum RmStatus rm_code_from_json(const char *json, struct RmCode **out);

// Gabidulin code of length `n` and dimension `k` over `F_{p^{e m}}`.
//
// # Safety
// `out` must be a writable pointer.
enum RmStatus rm_code_gabidulin(uint32_t p,
                                uint32_t e,
                                uint32_t m,
                                size_t n,
                                size_t k,
                                struct RmCode **out);

// # Safety
// `code` must come from this library and not have been freed. Null is ignored.
void rm_code_free(struct RmCode *code);

// Dual code as a new handle.
//
// # Safety
// `code` must be a live handle and `out` a writable pointer.
enum RmStatus rm_code_dual(const struct RmCode *code, struct RmCode **out);

// Length `n`, or 0 for a null handle.
//
// # Safety
// `code` must be null or a live handle.
size_t rm_code_length(const struct RmCode *code);

// Dimension `k`, or 0 for a null handle.
//
// # Safety
// `code` must be null or a live handle.
size_t rm_code_dimension(const struct RmCode *code);

// Whether the code is fixed by the Frobenius map; false for a null handle.
//
// # Safety
// `code` must be null or a live handle.
bool rm_code_is_galois_closed(const struct RmCode *code);

// Generalized rank weights `d_{R,1}, …, d_{R,k}`. `cap` bounds the
// enumeration size; 0 selects the default.
//
// # Safety
// `code` must be a live handle, `out` must hold `len` values and `written`
// must be null or writable.
enum RmStatus rm_code_rank_weights(const struct RmCode *code,
                                   uint64_t cap,
                                   size_t *out,
                                   size_t len,
                                   size_t *written);

// Generalized Hamming weights `d_{H,1}, …, d_{H,k}`.
//
// # Safety
// As for [`rm_code_rank_weights`].
enum RmStatus rm_code_hamming_weights(const struct RmCode *code,
                                      uint64_t cap,
                                      size_t *out,
                                      size_t len,
                                      size_t *written);

// The code as a code-file JSON string, released with [`rm_string_free`].
//
// # Safety
// `code` must be a live handle and `out` a writable pointer.
enum RmStatus rm_code_to_json(const struct RmCode *code, char **out);

// Parses a pair file (`{"field": …, "n": …, "G2": …, "Gprime": …}`).
//
// # Safety
// `json` must be a NUL-terminated string and `out` a writable pointer.
enum RmStatus rm_pair_from_json(const char *json, struct RmPair **out);

// # Safety
// `pair` must come from this library and not have been freed. Null is ignored.
void rm_pair_free(struct RmPair *pair);

// `n`, `dim C_1` and `dim C_2`. Any output pointer may be null.
//
// # Safety
// `pair` must be a live handle.
enum RmStatus rm_pair_dims(const struct RmPair *pair, size_t *n, size_t *k1, size_t *k2);

// Information leaked to an observer of `c Bᵀ`, in `F_{q^m}`-symbols. `b_json`
// is a JSON array of rows over `F_q`, each of length `n`.
//
// # Safety
// `pair` must be a live handle, `b_json` a NUL-terminated string and `out`
// a writable pointer.
enum RmStatus rm_pair_leakage(const struct RmPair *pair, const char *b_json, size_t *out);

// Minimum distance of the coset coding scheme in the chosen metric.
//
// # Safety
// `pair` must be a live handle and `out` a writable pointer.
enum RmStatus rm_pair_min_distance(const struct RmPair *pair,
                                   enum RmMetric metric,
                                   uint64_t cap,
                                   size_t *out);

// Runs a command-line invocation (`argv[0]` is the program name) and
// returns its JSON report in `report` and its exit code in `exit_code`.
// A command that ran but reported a violation still returns `RM_STATUS_OK`.
//
// # Safety
// `argv` must point to `argc` NUL-terminated strings; `report` and
// `exit_code` must be writable.
enum RmStatus rm_run(size_t argc, const char *const *argv, char **report, int *exit_code);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RANKMETRIC_H */
