#ifndef EDGESYM_H
#define EDGESYM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum EsStatus {
  ES_STATUS_OK = 0,
  ES_STATUS_NULL_POINTER = 1,
  ES_STATUS_INVALID_UTF8 = 2,
  ES_STATUS_PARSE_ERROR = 3,
  ES_STATUS_INVALID_GRAPH = 4,
  ES_STATUS_INVALID_EDGE_SET = 5,
  ES_STATUS_OVERFLOW = 6,
  ES_STATUS_CAP_EXCEEDED = 7,
  ES_STATUS_INTERNAL = 8,
} EsStatus;

/**
 * Opaque graph handle.
 */
typedef struct EsGraph EsGraph;

/**
 * Group orders and orbit sizes of one ratio-identity check.
 */
typedef struct EsRatioReport {
  uint64_t aut_g;
  uint64_t ao_g;
  uint64_t aut_g_minus;
  uint64_t ao_g_minus;
  bool holds;
} EsRatioReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a graph6 string into a new handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum EsStatus es_graph_from_graph6(const char *text, struct EsGraph **out);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored as
 * `2 * edge_count` vertex indices. A pair given twice is an error.
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (or be null when
 * `edge_count` is 0) and `out` must be valid.
 */
enum EsStatus es_graph_from_edges(size_t n,
                                  const size_t *edges,
                                  size_t edge_count,
                                  struct EsGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from this library that has not been freed.
 */
void es_graph_free(struct EsGraph *g);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t es_graph_vertex_count(const struct EsGraph *g);

/**
 * Edge count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t es_graph_edge_count(const struct EsGraph *g);

/**
 * # Safety
 * `g` must be a live handle and `out` valid. Free the result with
 * `es_string_free`.
 */
enum EsStatus es_graph_to_graph6(const struct EsGraph *g, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void es_string_free(char *s);

/**
 * Order of the automorphism group as a decimal string.
 *
 * # Safety
 * `g` must be a live handle and `out` valid.
 */
enum EsStatus es_aut_order(const struct EsGraph *g, char **out);

/**
 * Canonical certificate as lowercase hex. Equal strings for graphs with
 * the same vertex count mean isomorphic graphs.
 *
 * # Safety
 * `g` must be a live handle and `out` valid.
 */
enum EsStatus es_canonical_form(const struct EsGraph *g, char **out);

/**
 * # Safety
 * `a` and `b` must be live handles and `out` valid.
 */
enum EsStatus es_is_isomorphic(const struct EsGraph *a, const struct EsGraph *b, bool *out);

/**
 * Size of the orbit of a pair set under the graph's automorphism group.
 *
 * # Safety
 * `pairs` must point to `2 * pair_count` values and `out` must be valid.
 */
enum EsStatus es_edge_set_orbit_size(const struct EsGraph *g,
                                     const size_t *pairs,
                                     size_t pair_count,
                                     size_t *out);

/**
 * Checks the symmetry ratio identity for deleting `pair_count` edges.
 * Returns `ES_STATUS_OVERFLOW` when a group order exceeds 64 bits; use
 * `es_verify_ratio_identity_json` for exact values.
 *
 * # Safety
 * `pairs` must point to `2 * pair_count` values and `out` must be valid.
 */
enum EsStatus es_verify_ratio_identity(const struct EsGraph *g,
                                       const size_t *pairs,
                                       size_t pair_count,
                                       struct EsRatioReport *out);

/**
 * Same check, reported as JSON with exact decimal strings.
 *
 * # Safety
 * `pairs` must point to `2 * pair_count` values and `out` must be valid.
 */
enum EsStatus es_verify_ratio_identity_json(const struct EsGraph *g,
                                            const size_t *pairs,
                                            size_t pair_count,
                                            char **out);

/**
 * Exact probability that a uniform graph with the same vertex and edge
 * counts is isomorphic to `g`, as a reduced fraction of decimal strings.
 *
 * # Safety
 * `g` must be a live handle; `numerator` and `denominator` must be valid.
 */
enum EsStatus es_er_prob_isomorphic(const struct EsGraph *g, char **numerator, char **denominator);

/**
 * Message for the last failed call on this thread, empty after a success.
 * The pointer stays valid until the next call into the library on the same
 * thread.
 */
const char *es_last_error(void);

/**
 * Library version as a static string.
 */
const char *es_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EDGESYM_H */
