#ifndef MUBASIS_H
#define MUBASIS_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  MB_STATUS_OK = 0,
  MB_STATUS_NULL_ARGUMENT = 1,
  MB_STATUS_INVALID_UTF8 = 2,
  /**
   * Parse errors, wrong arity, t-degree above one.
   */
  MB_STATUS_INVALID_INPUT = 3,
  /**
   * The input does not define a curve or surface.
   */
  MB_STATUS_DEGENERATE = 4,
  MB_STATUS_INTERNAL = 5,
} MbStatus;

typedef enum {
  MB_FRAME_ORIGINAL = 0,
  MB_FRAME_NORMALIZED = 1,
} MbFrame;

typedef enum {
  MB_COMMAND_PLUECKER = 0,
  MB_COMMAND_MUBASIS_CURVE = 1,
  MB_COMMAND_MUBASIS_SURFACE = 2,
  MB_COMMAND_IMPLICITIZE_CURVE = 3,
  MB_COMMAND_IMPLICITIZE_SURFACE = 4,
  MB_COMMAND_DEGREES = 5,
  MB_COMMAND_VERIFY = 6,
} MbCommand;

/**
 * An implicit equation with its exponent and degree data.
 */
typedef struct MbImplicit MbImplicit;

/**
 * A rendered command report.
 */
typedef struct MbReport MbReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Implicitizes the ruled surface given by four polynomials in `s, t`.
 *
 * # Safety
 * `polys` must point to `count` NUL-terminated strings and `out` must be writable.
 */
MbStatus mb_implicitize_surface(const char *const *polys,
                                size_t count,
                                uint64_t seed,
                                MbImplicit **out);

/**
 * Implicitizes the planar curve given by three polynomials in `s`.
 *
 * # Safety
 * `polys` must point to `count` NUL-terminated strings and `out` must be writable.
 */
MbStatus mb_implicitize_curve(const char *const *polys,
                              size_t count,
                              uint64_t seed,
                              MbImplicit **out);

/**
 * Map degree `k` with `Res = c·F^k`; 0 for a null handle.
 *
 * # Safety
 * The handle must be null or live.
 */
uint32_t mb_implicit_k(const MbImplicit *h);

/**
 * Total degree of `F`; 0 for a null handle.
 *
 * # Safety
 * The handle must be null or live.
 */
uint32_t mb_implicit_degree(const MbImplicit *h);

/**
 * `F` as text in `x, y, z, w`; null for a null handle.
 *
 * # Safety
 * The handle must be null or live.
 */
const char *mb_implicit_text(const MbImplicit *h, MbFrame frame);

/**
 * The JSON `implicit` report for the original frame.
 *
 * # Safety
 * The handle must be null or live.
 */
const char *mb_implicit_json(const MbImplicit *h);

/**
 * # Safety
 * `h` must come from this library and not have been freed.
 */
void mb_implicit_free(MbImplicit *h);

/**
 * Runs any command, rendering the report as JSON or text.
 *
 * # Safety
 * `polys` must point to `count` NUL-terminated strings and `out` must be writable.
 */
MbStatus mb_run(MbCommand command,
                const char *const *polys,
                size_t count,
                uint64_t seed,
                bool json,
                MbReport **out);

/**
 * # Safety
 * The handle must be null or live.
 */
const char *mb_report_text(const MbReport *r);

/**
 * # Safety
 * `r` must come from this library and not have been freed.
 */
void mb_report_free(MbReport *r);

/**
 * Message for the most recent failure on this thread, empty after a success.
 */
const char *mb_last_error(void);

/**
 * Static description of a status code.
 */
const char *mb_status_str(MbStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MUBASIS_H */
