/*
 * superhypergraph.h — C interface to the shx library.
 *
 * Graphs, matrices and decision trees are opaque handles. Every function
 * returns an shx_status; on failure shx_last_error() holds a one-line
 * message for the calling thread. Strings returned through char** are
 * heap-allocated and must be released with shx_string_free().
 *
 * Graph documents use the canonical JSON format:
 *   {
 *     "format_version": 1,
 *     "base_vertices": ["x1", "x2"],
 *     "level": 1,
 *     "supervertices": [["x1"], ["x2"]],          // string = leaf, array = set
 *     "superedges": [{"id": 0, "members": [["x1"], ["x2"]], "weight": 1.0}],
 *     "annotations": {...},                        // optional
 *     "fuzzy_hypergraph": {"edges": [...]}         // optional
 *   }
 *
 * Matrices travel as headerless CSV (one row per line, 17-significant-digit
 * reals). Randomized entry points take an explicit 64-bit seed and are
 * bit-reproducible for a fixed seed.
 */

#ifndef SHX_SUPERHYPERGRAPH_H
#define SHX_SUPERHYPERGRAPH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct shx_graph shx_graph;
typedef struct shx_matrix shx_matrix;
typedef struct shx_tree shx_tree;

typedef enum {
  SHX_OK = 0,
  SHX_ERR_USAGE = 1,
  SHX_ERR_PARSE = 2,
  SHX_ERR_INVALID = 3,
  SHX_ERR_SHAPE = 4,
  SHX_ERR_DOMAIN = 5,
  SHX_ERR_IO = 6,
  SHX_ERR_LIMIT = 7,
} shx_status;

/* Last error message of the calling thread; valid until the next failing
 * call on the same thread. */
const char* shx_last_error(void);
void shx_string_free(char* s);

/* ---- graph documents ------------------------------------------------- */

shx_status shx_graph_parse(const char* json_text, int strict,
                           shx_graph** out);
shx_status shx_graph_load(const char* path, int strict, shx_graph** out);
shx_status shx_graph_to_json(const shx_graph* g, char** out_json);
shx_status shx_graph_save(const shx_graph* g, const char* path);
void shx_graph_free(shx_graph* g);

/* Parses without failing on invariant violations; the report lists one
 * violation per line ("<json-pointer>: <message>"), empty when valid.
 * Warnings about unknown fields are appended after violations with a
 * "warning: " prefix. */
shx_status shx_graph_validate(const char* json_text, int strict,
                              char** out_report, int* out_violations);

/* Expanded hypergraph as a level-0 document. */
shx_status shx_graph_expand(const shx_graph* g, shx_graph** out);

/* ---- dense matrices --------------------------------------------------- */

shx_status shx_matrix_create(size_t rows, size_t cols, const double* values,
                             shx_matrix** out);
shx_status shx_matrix_parse_csv(const char* text, shx_matrix** out);
shx_status shx_matrix_load_csv(const char* path, shx_matrix** out);
shx_status shx_matrix_to_csv(const shx_matrix* m, char** out_text);
size_t shx_matrix_rows(const shx_matrix* m);
size_t shx_matrix_cols(const shx_matrix* m);
const double* shx_matrix_data(const shx_matrix* m);
void shx_matrix_free(shx_matrix* m);

/* ---- spectral operators ----------------------------------------------- */

shx_status shx_laplacian(const shx_graph* g, shx_matrix** out);
shx_status shx_propagator(const shx_graph* g, shx_matrix** out);

/* ---- convolution networks --------------------------------------------- */

/* activation: "relu", "leaky_relu" (with slope) or "identity". */
shx_status shx_convolve(const shx_graph* g, const shx_matrix* features,
                        const shx_matrix* theta, const char* activation,
                        double slope, shx_matrix** out);

/* network_json either lists explicit layers
 *   {"layers": [{"theta": [[...]], "activation": "relu"}], "readout": "softmax"}
 * or asks for seed-generated parameters
 *   {"dims": [4, 3], "activation": "relu", "readout": "softmax"}
 * (thetas drawn uniformly from [-1, 1); has_seed must then be nonzero). */
shx_status shx_forward(const shx_graph* g, const shx_matrix* features,
                       const char* network_json, uint64_t seed, int has_seed,
                       shx_matrix** out);

/* attention is a 1 x 2*cols(theta) row vector. The coefficient dump is
 * "vertex,edge,value" lines over incident pairs. */
shx_status shx_attention_coefficients(const shx_graph* g,
                                      const shx_matrix* features,
                                      const shx_matrix* theta,
                                      const shx_matrix* attention,
                                      double slope, char** out_coo);
shx_status shx_attention_convolve(const shx_graph* g,
                                  const shx_matrix* features,
                                  const shx_matrix* theta,
                                  const shx_matrix* attention, double slope,
                                  shx_matrix** out);

/* config_json: {"layers": [{"s": 2, "t": 1, "kmeans_iters": 100,
 *   "theta": [[...]] | "theta_cols": c, "activation": "relu"}]}
 * Per-layer construction seeds derive from the global seed via a
 * splitmix64 stream; generated thetas are uniform [-1, 1). */
shx_status shx_dshgnn(const shx_matrix* features, const char* config_json,
                      uint64_t seed, shx_matrix** out);

/* kind: "fgnn", "ngnn" or "pgnn"; the graph document must carry matching
 * annotations. config_json either lists explicit rule maps
 *   {"rules": [{"edges": [0, 1]}], "layers": [{"maps": [{"self": [[...]],
 *    "msg": [[...]], "bias": [...]}], "activation": "relu"}]}
 * or asks for generated parameters {"rule_count": K, "layer_count": L}
 * (has_seed required). Omitting "rules" installs one rule over every edge. */
shx_status shx_uncertain_forward(const shx_graph* g,
                                 const shx_matrix* features, const char* kind,
                                 const char* config_json, uint64_t seed,
                                 int has_seed, shx_matrix** out);

/* fuzzy hypergraph convolution over the document's fuzzy_hypergraph block */
shx_status shx_fhgnn(const shx_graph* g, const shx_matrix* features,
                     const shx_matrix* theta, const char* activation,
                     double slope, shx_matrix** out);

shx_status shx_ccut(const shx_graph* g, double level, shx_graph** out);
shx_status shx_fuzzy_height(const shx_graph* g, double* out);

/* ---- random walks ------------------------------------------------------ */

/* States are supervertices (canonical element text) unless on_expanded is
 * nonzero, then base vertices of the expansion. selection: "uniform" or
 * "weighted" (per-edge selection_weights in the document, missing entries
 * default to 1). dangling: "error" or "lazy" (self loop). The walk output
 * is one state name per line. */
shx_status shx_walk(const shx_graph* g, const char* start, uint64_t steps,
                    uint64_t seed, int on_expanded, const char* selection,
                    const char* dangling, char** out_lines);

/* Stationary distribution as "state,probability" lines. */
shx_status shx_stationary(const shx_graph* g, double tolerance,
                          int on_expanded, const char* selection,
                          const char* dangling, char** out_csv);

/* ---- partitioning, clustering, centrality ----------------------------- */

/* objective: "cut" or "soed". Output: "vertex,part" lines over the base
 * vertices of the expansion. */
shx_status shx_partition(const shx_graph* g, int k, double imbalance,
                         uint64_t seed, const char* objective,
                         char** out_csv);
shx_status shx_cluster(const shx_graph* g, int k, uint64_t seed,
                       char** out_csv);
shx_status shx_centrality(const shx_graph* g, char** out_csv);

/* ---- extremal oracles and decision trees ------------------------------ */

/* host/pattern are level-0 r-uniform documents. out_is_free reports
 * whether the host contains no copy of the pattern. */
shx_status shx_ffree(const shx_graph* host, const shx_graph* pattern,
                     int* out_is_free);

/* Exact Turan number by exhaustive branch and bound (guarded desk scale);
 * the witness maximizer is returned as a level-0 document. */
shx_status shx_turan(size_t vertex_count, size_t r, const shx_graph* pattern,
                     size_t* out_max_edges, char** out_witness_json);

/* "n,ex,ratio" lines for n in [n_min, n_max]. */
shx_status shx_turan_density(size_t r, const shx_graph* pattern, size_t n_min,
                             size_t n_max, char** out_csv);

/* table_json: JSON array of 2^m values (or {"values": [...]});
 * order_csv: comma-separated variable names, first variable is the most
 * significant truth-table bit. */
shx_status shx_bdtree_build(const char* table_json, const char* order_csv,
                            shx_tree** out);
/* bits: one '0'/'1' character per variable in order. */
shx_status shx_bdtree_evaluate(const shx_tree* t, const char* bits,
                               int* out_value);
shx_status shx_bdtree_to_json(const shx_tree* t, char** out_json);
void shx_tree_free(shx_tree* t);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SHX_SUPERHYPERGRAPH_H */
