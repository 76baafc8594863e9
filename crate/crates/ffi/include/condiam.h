#ifndef CONDIAM_H
#define CONDIAM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result code of every fallible call.
 */
typedef enum CondiamStatus {
  CONDIAM_STATUS_OK = 0,
  CONDIAM_STATUS_NULL_POINTER = 1,
  CONDIAM_STATUS_INVALID_ARGUMENT = 2,
  CONDIAM_STATUS_PARSE = 3,
  CONDIAM_STATUS_DISCONNECTED = 4,
  CONDIAM_STATUS_HYPOTHESIS = 5,
  CONDIAM_STATUS_INTERNAL = 6,
} CondiamStatus;

/**
 * Outcome of an extremal-claim audit.
 */
typedef enum CondiamAuditStatus {
  CONDIAM_AUDIT_STATUS_MATCH_UNIQUE = 0,
  CONDIAM_AUDIT_STATUS_TIE = 1,
  CONDIAM_AUDIT_STATUS_MISMATCH = 2,
  CONDIAM_AUDIT_STATUS_EMPTY_CLASS = 3,
} CondiamAuditStatus;

/**
 * Opaque graph handle.
 */
typedef struct CondiamGraph CondiamGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. Owned by the library.
 */
const char *condiam_last_error_message(void);

/**
 * Parses a NUL-terminated graph6 record (optional `>>graph6<<` header and trailing newline).
 *
 * # Safety
 * `text` must be NULL or a valid C string; `out` must be NULL or writable.
 */
enum CondiamStatus condiam_graph_from_graph6(const char *text, struct CondiamGraph **out);

/**
 * Builds a graph on `n` vertices from `m` edges given as `2 * m` consecutive endpoint ids.
 *
 * # Safety
 * `edges` must point to `2 * m` readable values (it may be NULL when `m == 0`).
 */
enum CondiamStatus condiam_graph_from_edges(uintptr_t n,
                                            const uintptr_t *edges,
                                            uintptr_t m,
                                            struct CondiamGraph **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `g` must be NULL or a handle returned by this library that has not been freed.
 */
void condiam_graph_free(struct CondiamGraph *g);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or a string returned by this library that has not been freed.
 */
void condiam_string_free(char *s);

/**
 * Number of vertices.
 *
 * # Safety
 * `g` must be NULL or a live handle; `out` must be NULL or writable.
 */
enum CondiamStatus condiam_graph_order(const struct CondiamGraph *g, uintptr_t *out);

/**
 * Number of edges.
 *
 * # Safety
 * `g` must be NULL or a live handle; `out` must be NULL or writable.
 */
enum CondiamStatus condiam_graph_size(const struct CondiamGraph *g, uintptr_t *out);

/**
 * Wiener index of a connected graph.
 *
 * # Safety
 * `g` must be NULL or a live handle; `out` must be NULL or writable.
 */
enum CondiamStatus condiam_wiener(const struct CondiamGraph *g, uint64_t *out);

/**
 * Diameter of a connected graph.
 *
 * # Safety
 * `g` must be NULL or a live handle; `out` must be NULL or writable.
 */
enum CondiamStatus condiam_diameter(const struct CondiamGraph *g, uint32_t *out);

/**
 * Sum of distances from `u` to every other vertex.
 *
 * # Safety
 * `g` must be NULL or a live handle; `out` must be NULL or writable.
 */
enum CondiamStatus condiam_transmission(const struct CondiamGraph *g, uintptr_t u, uint64_t *out);

/**
 * Conditional diameter `D(G;s)`. When `v1` and `v2` are both non-NULL they receive the
 * lexicographically least witness pair (`s` ids each) and `*has_witness` is set; no witness
 * exists when `n < 2s`.
 *
 * # Safety
 * `g` must be NULL or a live handle; `value` must be writable; `v1`/`v2` must be NULL or
 * point to `s` writable values; `has_witness` must be NULL or writable.
 */
enum CondiamStatus condiam_conditional_diameter(const struct CondiamGraph *g,
                                                uintptr_t s,
                                                uint32_t *value,
                                                uintptr_t *v1,
                                                uintptr_t *v2,
                                                bool *has_witness);

/**
 * graph6 encoding without header or newline.
 *
 * # Safety
 * `g` must be NULL or a live handle; `out` must be NULL or writable.
 */
enum CondiamStatus condiam_graph_to_graph6(const struct CondiamGraph *g, char **out);

/**
 * Isomorphism-invariant key; equal keys mean isomorphic graphs.
 *
 * # Safety
 * `g` must be NULL or a live handle; `out` must be NULL or writable.
 */
enum CondiamStatus condiam_canonical_key(const struct CondiamGraph *g, char **out);

/**
 * Family member by name: `path`, `cycle`, `single`, `double` or `tail2`.
 *
 * # Safety
 * `kind` must be NULL or a valid C string; `out` must be NULL or writable.
 */
enum CondiamStatus condiam_family(const char *kind,
                                  uintptr_t n,
                                  uintptr_t i,
                                  uintptr_t j,
                                  struct CondiamGraph **out);

/**
 * Graph claimed to maximise the Wiener index among trees with `D(G;s) = n - 2s + c`.
 *
 * # Safety
 * `out` must be NULL or writable.
 */
enum CondiamStatus condiam_claimed_extremal(int32_t c,
                                            uintptr_t s,
                                            uintptr_t n,
                                            struct CondiamGraph **out);

/**
 * Audits one `(c, s, n)` claim against every tree on `n` vertices. The certificate is written
 * as JSON to `*json` (may be NULL to skip) and its outcome to `*status`.
 *
 * # Safety
 * `status` must be writable; `json` must be NULL or writable.
 */
enum CondiamStatus condiam_verify_claim_trees(int32_t c,
                                              uintptr_t s,
                                              uintptr_t n,
                                              uintptr_t threads,
                                              enum CondiamAuditStatus *status,
                                              char **json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CONDIAM_H */
