#ifndef IDEAL_POLYHEDRA_H
#define IDEAL_POLYHEDRA_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum IpStatus {
  IP_STATUS_OK = 0,
  IP_STATUS_NULL_POINTER = 1,
  IP_STATUS_DOMAIN = 2,
  IP_STATUS_PRECONDITION = 3,
  IP_STATUS_STRUCTURE = 4,
  IP_STATUS_FORMAT = 5,
  IP_STATUS_OVERFLOW = 6,
  IP_STATUS_SOLVER = 7,
  IP_STATUS_INCOMPLETE_CENSUS = 8,
  IP_STATUS_IO = 9,
  IP_STATUS_BUFFER_TOO_SMALL = 10,
  IP_STATUS_OUT_OF_RANGE = 11,
  IP_STATUS_PANIC = 12,
} IpStatus;

/**
 * An embedded polyhedral graph.
 */
typedef struct IpGraph IpGraph;

/**
 * An owned list of graphs.
 */
typedef struct IpGraphList IpGraphList;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the last error message on this thread into `buf` (NUL-terminated,
 * truncated to `cap`). Returns the full message length including the NUL.
 *
 * # Safety
 * `buf` must be null or point to `cap` writable bytes.
 */
size_t ip_last_error_message(char *buf, size_t cap);

/**
 * Builds a graph from 0-based rotation lists in compressed form: the
 * neighbours of vertex `v` are `neighbors[offsets[v] .. offsets[v + 1]]`
 * in cyclic order. `offsets` has `vertex_count + 1` entries.
 *
 * # Safety
 * The arrays must have the stated lengths.
 */
enum IpStatus ip_graph_from_rotation(size_t vertex_count,
                                     const uint32_t *offsets,
                                     const uint32_t *neighbors,
                                     struct IpGraph **out);

/**
 * The `n`-antiprism, `n >= 3`.
 *
 * # Safety
 * `out` must be valid for writing.
 */
enum IpStatus ip_graph_antiprism(size_t n, struct IpGraph **out);

/**
 * The twisted `n`-antiprism, `n >= 4`.
 *
 * # Safety
 * `out` must be valid for writing.
 */
enum IpStatus ip_graph_twisted_antiprism(size_t n, struct IpGraph **out);

/**
 * Releases a graph. Null is ignored.
 *
 * # Safety
 * `g` must be null or a live handle from this library, not used afterwards.
 */
void ip_graph_free(struct IpGraph *g);

/**
 * # Safety
 * `g` must be a live handle, `out` valid for writing.
 */
enum IpStatus ip_graph_vertex_count(const struct IpGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle, `out` valid for writing.
 */
enum IpStatus ip_graph_face_count(const struct IpGraph *g, size_t *out);

/**
 * Copies the rotation list of vertex `v` into `buf`. `len` receives the
 * degree; if it exceeds `cap`, nothing is copied and `BufferTooSmall` is
 * returned.
 *
 * # Safety
 * `buf` must hold `cap` entries, `len` valid for writing.
 */
enum IpStatus ip_graph_neighbors(const struct IpGraph *g,
                                 size_t v,
                                 uint32_t *buf,
                                 size_t cap,
                                 size_t *len);

/**
 * Whether the graph is realizable as an ideal right-angled polyhedron.
 * When it is not, `ip_last_error_message` describes the obstruction.
 *
 * # Safety
 * `g` must be a live handle, `out` valid for writing.
 */
enum IpStatus ip_graph_is_valid(const struct IpGraph *g, bool *out);

/**
 * Hyperbolic volume of the ideal right-angled realization.
 *
 * # Safety
 * `g` must be a live handle, `out` valid for writing.
 */
enum IpStatus ip_graph_volume(const struct IpGraph *g, uint64_t seed, double *out);

/**
 * Writes the canonical code bytes. `len` receives the code length; if it
 * exceeds `cap`, nothing is copied and `BufferTooSmall` is returned.
 *
 * # Safety
 * `buf` must hold `cap` bytes, `len` valid for writing.
 */
enum IpStatus ip_graph_canonical_code(const struct IpGraph *g,
                                      uint8_t *buf,
                                      size_t cap,
                                      size_t *len);

/**
 * # Safety
 * `out` must be valid for writing.
 */
enum IpStatus ip_lobachevsky(double theta, double *out);

/**
 * # Safety
 * `out` must be valid for writing.
 */
enum IpStatus ip_antiprism_volume(size_t n, double *out);

/**
 * # Safety
 * `out` must be valid for writing.
 */
enum IpStatus ip_twisted_antiprism_volume(size_t n, double *out);

/**
 * Decodes a `planar_code` byte stream.
 *
 * # Safety
 * `bytes` must hold `len` bytes, `out` valid for writing.
 */
enum IpStatus ip_read_planar_code(const uint8_t *bytes, size_t len, struct IpGraphList **out);

/**
 * All polyhedra with at most `max_faces` faces, in canonical form.
 *
 * # Safety
 * `out` must be valid for writing.
 */
enum IpStatus ip_enumerate(size_t max_faces, struct IpGraphList **out);

/**
 * # Safety
 * `list` must be a live handle, `out` valid for writing.
 */
enum IpStatus ip_graph_list_len(const struct IpGraphList *list, size_t *out);

/**
 * Copies graph `index` into a new handle, which the caller frees.
 *
 * # Safety
 * `list` must be a live handle, `out` valid for writing.
 */
enum IpStatus ip_graph_list_get(const struct IpGraphList *list, size_t index, struct IpGraph **out);

/**
 * Releases a list. Null is ignored.
 *
 * # Safety
 * `list` must be null or a live handle, not used afterwards.
 */
void ip_graph_list_free(struct IpGraphList *list);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* IDEAL_POLYHEDRA_H */
