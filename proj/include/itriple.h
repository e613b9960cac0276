/* C API for the index-realizability decision library.
 *
 * All functionality is reached through an it_context, which owns the
 * configuration and the last error message. Functions return IT_OK (0) on
 * success or a nonzero error code; the message for the most recent failure on
 * a context is available via it_context_last_error. Strings returned through
 * char** out-parameters are heap-allocated and must be released with
 * it_string_free; handles are released with their matching *_free function.
 */
#ifndef ITRIPLE_H
#define ITRIPLE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define IT_OK 0
#define IT_ERR_INVALID_ARGUMENT 1
#define IT_ERR_PARSE 2
#define IT_ERR_CAP_EXCEEDED 3
#define IT_ERR_BUDGET_EXCEEDED 4
#define IT_ERR_NO_WITNESS 5
#define IT_ERR_INTERNAL 6

#define IT_OUTCOME_REALIZABLE 0
#define IT_OUTCOME_NOT_REALIZABLE 1
#define IT_OUTCOME_UNKNOWN 2

typedef struct it_context it_context;
typedef struct it_result it_result;
typedef struct it_graph it_graph;

it_context *it_context_new(void);
void it_context_free(it_context *ctx);
const char *it_context_last_error(const it_context *ctx);

/* Options: group_cap, search_budget, oracle_max_candidates, max_graph_side,
 * product_depth, oracle_enabled (0/1), jobs. Unknown keys are rejected. */
int it_context_set_option(it_context *ctx, const char *key, long long value);

/* Full decision pipeline: rules, product decomposition, oracle fallback. */
int it_decide(it_context *ctx, unsigned long long a, unsigned long long b,
              unsigned long long c, it_result **out);

/* Exhaustive graph-enumeration oracle only (no rules). */
int it_oracle(it_context *ctx, unsigned long long a, unsigned long long b,
              unsigned long long c, it_result **out);

int it_result_outcome(const it_result *r);
/* Verdict as a JSON document: {"triple":[a,b,c],"outcome":...,"certificate":{...}}. */
int it_result_json(const it_result *r, char **json_out);
/* 1 if the result's certificate records a completed exhaustive run, 0 otherwise. */
int it_result_oracle_completed(const it_result *r);
/* Replays the certificate to an explicit witness graph, oriented to the
 * original (a, b, c). Fails with IT_ERR_NO_WITNESS for non-realizable or
 * unknown results. */
int it_result_witness(it_context *ctx, const it_result *r, it_graph **out);
void it_result_free(it_result *r);

/* Classification over a box: JSON array of verdicts, ascending (a, b, c). */
int it_classify_json(it_context *ctx, unsigned a_max, unsigned b_max, char **json_out);

/* Built-in verification checklist. `only` selects a single check by name
 * (NULL or "" runs all). Returns a JSON array of {name, pass, detail}. */
int it_verify_paper_json(it_context *ctx, const char *only, char **json_out);

/* Bipartite graph handles (text format: "bipartite a b" header plus
 * "e i j" lines). */
int it_graph_parse(it_context *ctx, const char *text, it_graph **out);
int it_graph_serialize(const it_graph *g, char **text_out);
int it_graph_to_dot(const it_graph *g, char **dot_out);
int it_graph_complement(it_context *ctx, const it_graph *g, it_graph **out);
unsigned it_graph_eta_size(const it_graph *g);
unsigned it_graph_kappa_size(const it_graph *g);
unsigned long long it_graph_edge_count(const it_graph *g);
int it_graph_aut_order(it_context *ctx, const it_graph *g, unsigned long long *out);
int it_graph_edge_orbit_count(it_context *ctx, const it_graph *g,
                              unsigned long long *out);
int it_graph_is_edge_transitive(it_context *ctx, const it_graph *g, int *out);
int it_graph_canonical_digest(it_context *ctx, const it_graph *g, char **hex_out);
void it_graph_free(it_graph *g);

void it_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* ITRIPLE_H */
