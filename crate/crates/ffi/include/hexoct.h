/* C ABI for the hexoct toolkit.
 *
 * Generated from crates/ffi/src/lib.rs (see cbindgen.toml); kept in sync by
 * hand where cbindgen is unavailable. All fallible functions return a
 * status code; string results are freed with hexoct_string_free. Context
 * handles are not thread-safe.
 */

#ifndef HEXOCT_H
#define HEXOCT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes returned by every fallible function. */
#define HEXOCT_OK 0
#define HEXOCT_ERR_NULL_ARGUMENT 1
#define HEXOCT_ERR_INVALID_UTF8 2
#define HEXOCT_ERR_BAD_NAME 3
#define HEXOCT_ERR_PARSE 4
#define HEXOCT_ERR_COMPUTE 5
#define HEXOCT_ERR_CLAIMS_FAILED 6

/* Opaque toolkit context: owns the computed classification and analyzed
 * graphs, plus the last error message. */
typedef struct HexoctContext HexoctContext;

/* Creates a fresh context. Returns NULL only on allocation failure.
 * Free with hexoct_context_free. */
HexoctContext *hexoct_context_new(void);

/* Frees a context created by hexoct_context_new. NULL is ignored. */
void hexoct_context_free(HexoctContext *ctx);

/* The message of the most recent failure on this context. The pointer is
 * owned by the context and valid until the next call on it. */
const char *hexoct_last_error(const HexoctContext *ctx);

/* Frees a string returned by this library. NULL is ignored. */
void hexoct_string_free(char *s);

/* Order of the full signed-permutation group (46,080). */
int hexoct_group_order(uint64_t *out);

/* Number of crystallographic representations (computes the classification
 * on first use). */
int hexoct_crystallographic_count(HexoctContext *ctx, uint64_t *out);

/* Sizes of the two rotation-subgroup classes. */
int hexoct_rotation_split(HexoctContext *ctx, uint64_t *out_a, uint64_t *out_b);

/* Regular degree of the named intersection graph
 * (T, D10, D6, D4, C5, C3, C2, or e). */
int hexoct_graph_degree(HexoctContext *ctx, const char *name, uint64_t *out);

/* Full analysis of the named graph as a JSON document (adjacency rows,
 * exact spectrum, components, flags). Caller frees via
 * hexoct_string_free. */
int hexoct_graph_json(HexoctContext *ctx, const char *name, char **out);

/* Runs the full claim checklist. Returns HEXOCT_OK when every claim
 * passes, HEXOCT_ERR_CLAIMS_FAILED (with the first failing claim in the
 * last-error message) otherwise. The report markdown is returned through
 * out_report when non-NULL; caller frees it. */
int hexoct_verify(HexoctContext *ctx, char **out_report);

/* Multiplies two elements given in bracket notation
 * (e.g. "[000001|(1 2)]"); writes the product in the same notation.
 * Stateless. Caller frees the result. */
int hexoct_element_multiply(const char *a, const char *b, char **out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HEXOCT_H */
