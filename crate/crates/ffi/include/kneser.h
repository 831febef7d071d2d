#ifndef KNESER_H
#define KNESER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum KneserStatus {
  KNESER_STATUS_OK = 0,
  KNESER_STATUS_NULL_POINTER = 1,
  KNESER_STATUS_INVALID_INPUT = 2,
  KNESER_STATUS_RESOURCE_CAP = 3,
  KNESER_STATUS_UNSUPPORTED_ORDER = 4,
  KNESER_STATUS_CERTIFICATE_INVALID = 5,
  KNESER_STATUS_OVERFLOW = 6,
  KNESER_STATUS_BUFFER_TOO_SMALL = 7,
  KNESER_STATUS_PANIC = 8,
} KneserStatus;

/**
 * Opaque flag complex `VR(F_n^{[m]}; r)`.
 */
typedef struct KneserComplex KneserComplex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread; empty after success.
 * The pointer stays valid until the next call into this library.
 */
const char *kneser_last_error(void);

/**
 * Build `VR(F_n^{[m]}; scale)`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum KneserStatus kneser_complex_new(uint32_t n,
                                     uint32_t m,
                                     uint32_t scale,
                                     struct KneserComplex **out);

/**
 * Build `Ind(KG(n, k)) = VR(F_n^{[2n+k]}; 2(n-1))`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle.
 */
enum KneserStatus kneser_complex_new_kneser(uint32_t n, uint32_t k, struct KneserComplex **out);

/**
 * Release a handle. Null is ignored.
 *
 * # Safety
 * `c` must be null or a handle from this library that has not been freed.
 */
void kneser_complex_free(struct KneserComplex *c);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `c` must be null or a live handle.
 */
size_t kneser_complex_vertex_count(const struct KneserComplex *c);

/**
 * Number of simplices of dimension `dim`.
 *
 * # Safety
 * `c` must be a live handle and `out` writable.
 */
enum KneserStatus kneser_complex_count_simplices(const struct KneserComplex *c,
                                                 size_t dim,
                                                 uint64_t *out);

/**
 * Reduced Betti numbers `b_0 ..= b_max_dim` over `GF(p)` written to
 * `out[0..=max_dim]`. `max_simplices = 0` selects the default cap.
 *
 * # Safety
 * `c` must be a live handle; `out` must point to `out_len` writable `u64`s.
 */
enum KneserStatus kneser_complex_betti(const struct KneserComplex *c,
                                       uint32_t p,
                                       size_t max_dim,
                                       uint64_t max_simplices,
                                       uint64_t *out,
                                       size_t out_len);

/**
 * `C(2n+k, 2n)`.
 *
 * # Safety
 * `out` must be writable.
 */
enum KneserStatus kneser_bigdim_bound(uint32_t n, uint32_t k, uint64_t *out);

/**
 * `base · Σ_{i=ℓ}^{m} C(i-2, ℓ-2)`.
 *
 * # Safety
 * `out` must be writable.
 */
enum KneserStatus kneser_smalldim_bound(uint32_t l, uint64_t base, uint32_t m, uint64_t *out);

/**
 * Connectivity bound for `Ind(KG(n, k))` and the total-domination lower
 * bound `gamma_num / gamma_den` in lowest terms.
 *
 * # Safety
 * All output pointers must be writable.
 */
enum KneserStatus kneser_connectivity_bound(uint32_t n,
                                            uint32_t k,
                                            int64_t *conn,
                                            uint64_t *gamma_num,
                                            uint64_t *gamma_den);

/**
 * Build and check the rank certificate for `VR(F_n^{[m]}; 2(n-1))`; on
 * success `rank` receives the certified number of independent classes.
 *
 * # Safety
 * `rank` must be writable.
 */
enum KneserStatus kneser_certificate_rank(uint32_t n, uint32_t m, uint32_t p, uint64_t *rank);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KNESER_H */
