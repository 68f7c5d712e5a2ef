#ifndef SIMSON_H
#define SIMSON_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

#define SIMSON_CHECK_SIMSON 1

#define SIMSON_CHECK_PARALLEL_CHORDS (1 << 1)

#define SIMSON_CHECK_ISOGONAL (1 << 2)

#define SIMSON_CHECK_OPTICAL (1 << 3)

#define SIMSON_CHECK_ARCHIMEDES (1 << 4)

#define SIMSON_CHECK_LAMBERT (1 << 5)

#define SIMSON_CHECK_ALL ((1 << 6) - 1)

typedef enum SimsonStatus {
  SIMSON_STATUS_OK = 0,
  SIMSON_STATUS_NULL_POINTER = 1,
  SIMSON_STATUS_INVALID_ARGUMENT = 2,
  SIMSON_STATUS_DEGENERATE = 3,
  SIMSON_STATUS_NOT_FOUND = 4,
  SIMSON_STATUS_PANIC = 5,
} SimsonStatus;

/**
 * A polygon and, once known, its Simson point, line and feet.
 */
typedef struct SimsonPolygonHandle SimsonPolygonHandle;

/**
 * Comparisons at length scale `L` allow `abs_eps + rel_eps * L`.
 */
typedef struct SimsonTolerance {
  double abs_eps;
  double rel_eps;
} SimsonTolerance;

typedef struct SimsonPoint {
  double x;
  double y;
} SimsonPoint;

/**
 * `a x + b y + c = 0` with `a² + b² = 1`.
 */
typedef struct SimsonLine {
  double a;
  double b;
  double c;
} SimsonLine;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The default tolerance, `1e-9` absolute and relative.
 */
struct SimsonTolerance simson_tolerance_default(void);

/**
 * Message for the last failed call on this thread, or null after a
 * successful call. Valid until the next call into the library.
 */
const char *simson_last_error_message(void);

/**
 * Polygon with the given vertices and no Simson data.
 */
enum SimsonStatus simson_polygon_from_vertices(const struct SimsonPoint *vertices,
                                               size_t count,
                                               struct SimsonPolygonHandle **out);

/**
 * Equidistant polygon with `S = (0, s)`, `L` the x-axis and feet
 * `x0, x0 + delta, ...`.
 */
enum SimsonStatus simson_polygon_equidistant(double s,
                                             double x0,
                                             double delta,
                                             size_t n,
                                             struct SimsonPolygonHandle **out);

/**
 * Polygon whose sides pass through `feet` perpendicular to the lines
 * joining them to `simson_point`.
 */
enum SimsonStatus simson_polygon_construct(struct SimsonPoint simson_point,
                                           struct SimsonLine simson_line,
                                           const struct SimsonPoint *feet,
                                           size_t count,
                                           struct SimsonTolerance tol,
                                           struct SimsonPolygonHandle **out);

/**
 * Releases a handle; null is ignored.
 */
void simson_polygon_free(struct SimsonPolygonHandle *handle);

enum SimsonStatus simson_polygon_len(const struct SimsonPolygonHandle *handle, size_t *out_len);

/**
 * Vertex `index` (0-based).
 */
enum SimsonStatus simson_polygon_vertex(const struct SimsonPolygonHandle *handle,
                                        size_t index,
                                        struct SimsonPoint *out);

/**
 * The recorded Simson point and line; `NOT_FOUND` when none is known yet.
 * Either output pointer may be null.
 */
enum SimsonStatus simson_polygon_simson_point(const struct SimsonPolygonHandle *handle,
                                              struct SimsonPoint *out_point,
                                              struct SimsonLine *out_line);

/**
 * Searches for a Simson point and records it in the handle. Returns
 * `NOT_FOUND` when the polygon has none. Either output pointer may be null.
 */
enum SimsonStatus simson_polygon_find_point(struct SimsonPolygonHandle *handle,
                                            struct SimsonTolerance tol,
                                            struct SimsonPoint *out_point,
                                            struct SimsonLine *out_line);

/**
 * Runs the checks selected by `checks` (a mask of `SIMSON_CHECK_*`).
 * `out_pass` receives the overall verdict; when `out_json` is not null it
 * receives the full report, to be released with [`simson_string_free`].
 */
enum SimsonStatus simson_polygon_verify(const struct SimsonPolygonHandle *handle,
                                        uint32_t checks,
                                        struct SimsonTolerance tol,
                                        bool *out_pass,
                                        char **out_json);

/**
 * Releases a string returned by this library; null is ignored.
 */
void simson_string_free(char *s);

/**
 * Equally spaced optimal knots for interpolating `(x² - delta²)/(4s)` on
 * `[a, b]` with `n` segments. `knots` must hold `n + 1` values; either
 * error output may be null.
 */
enum SimsonStatus simson_approx_optimal(double s,
                                        double delta,
                                        double a,
                                        double b,
                                        size_t n,
                                        double *knots,
                                        size_t knots_len,
                                        double *out_l1,
                                        double *out_l2);

/**
 * Common point of the circumcircles of the four triangles formed by
 * `lines[0..4]`.
 */
enum SimsonStatus simson_miquel_point(const struct SimsonLine *lines,
                                      struct SimsonTolerance tol,
                                      struct SimsonPoint *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SIMSON_H */
