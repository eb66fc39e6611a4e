#ifndef FIELDPOS_H
#define FIELDPOS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FpStatus {
  FP_STATUS_OK = 0,
  FP_STATUS_NULL_POINTER = 1,
  FP_STATUS_INVALID_ARGUMENT = 2,
  /**
   * A computation failed, e.g. a mixed packet passed to the field position.
   */
  FP_STATUS_COMPUTATION = 3,
  FP_STATUS_BUFFER_TOO_SMALL = 4,
  FP_STATUS_PANIC = 5,
} FpStatus;

/**
 * Opaque wavepacket handle.
 */
typedef struct FpPacket FpPacket;

/**
 * Opaque verify report handle.
 */
typedef struct FpReport FpReport;

/**
 * One row of a verify report.
 */
typedef struct FpCheckRow {
  double max_residual;
  double tolerance;
  size_t samples;
  bool passed;
} FpCheckRow;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copy the calling thread's last error message, NUL-terminated, into `buf`.
 * Returns the number of bytes needed including the terminator; nothing is
 * written when `buf` is null or `len` is too small.
 *
 * # Safety
 * `buf` must be null or point to `len` writable bytes.
 */
size_t fp_last_error(char *buf, size_t len);

/**
 * Plane-wave spinor for branch `+1`/`-1` and spin `+1` (up) / `-1` (down).
 *
 * # Safety
 * `p` points to 3 doubles; `re` and `im` to 4 writable doubles each.
 */
enum FpStatus fp_spinor(double mass, const double *p, int branch, int spin, double *re, double *im);

/**
 * Field spin component `S^{k+1}` for `k` in `0..3`.
 *
 * # Safety
 * `p` points to 3 doubles; `re` and `im` to 16 writable doubles each.
 */
enum FpStatus fp_field_spin(double mass,
                            const double *p,
                            int branch,
                            size_t k,
                            double *re,
                            double *im);

/**
 * Matrix part of the particle field position, component `k` in `0..3`.
 *
 * # Safety
 * `p` points to 3 doubles; `re` and `im` to 16 writable doubles each.
 */
enum FpStatus fp_position_matrix(double mass, const double *p, size_t k, double *re, double *im);

/**
 * Build a 1-D wavepacket on an `n`-mode grid over `[-p_max, p_max)`.
 * `mix` is the particle fraction.
 *
 * # Safety
 * `out` must point to writable storage for one pointer.
 */
enum FpStatus fp_packet_new(size_t n,
                            double p_max,
                            double mass,
                            double p0,
                            double sigma_p,
                            double mix,
                            int spin,
                            struct FpPacket **out);

/**
 * Advance the packet by `t` in place.
 *
 * # Safety
 * `packet` must come from [`fp_packet_new`] and not be freed.
 */
enum FpStatus fp_packet_evolve(struct FpPacket *packet, double t);

/**
 * Packet norm under the invariant measure.
 *
 * # Safety
 * `packet` must be a live handle and `out` writable.
 */
enum FpStatus fp_packet_norm(const struct FpPacket *packet, double *out);

/**
 * Position expectation: `kind = 0` for the Dirac position, `1` for the
 * field position (single-branch packets only).
 *
 * # Safety
 * `packet` must be a live handle and `out` writable.
 */
enum FpStatus fp_packet_position(const struct FpPacket *packet, int kind, double *out);

/**
 * # Safety
 * `packet` must be null or a handle from [`fp_packet_new`] not yet freed.
 */
void fp_packet_free(struct FpPacket *packet);

/**
 * Run the verification suite. The report is returned even when checks fail;
 * inspect it with [`fp_report_all_passed`].
 *
 * # Safety
 * `out` must point to writable storage for one pointer.
 */
enum FpStatus fp_verify(double mass,
                        uint64_t seed,
                        double tol_exact,
                        double tol_fd,
                        size_t samples,
                        struct FpReport **out);

/**
 * Number of rows in a report, 0 for null.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
size_t fp_report_len(const struct FpReport *report);

/**
 * `true` iff every row passed; `false` for null.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
bool fp_report_all_passed(const struct FpReport *report);

/**
 * # Safety
 * `report` must be a live handle and `row` writable.
 */
enum FpStatus fp_report_row(const struct FpReport *report, size_t index, struct FpCheckRow *row);

/**
 * Copy the name of row `index`, NUL-terminated. `needed` receives the
 * required size including the terminator.
 *
 * # Safety
 * `report` must be a live handle, `buf` null or `len` writable bytes, and
 * `needed` null or writable.
 */
enum FpStatus fp_report_name(const struct FpReport *report,
                             size_t index,
                             char *buf,
                             size_t len,
                             size_t *needed);

/**
 * # Safety
 * `report` must be null or a handle from [`fp_verify`] not yet freed.
 */
void fp_report_free(struct FpReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FIELDPOS_H */
