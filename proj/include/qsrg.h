/*
 * C interface to the q-ary strongly regular graph library.
 *
 * All functions return a qsrg_status; outputs are written through out
 * parameters. Strings returned through char** are owned by the library and
 * must be released with qsrg_string_free. Graph handles are opaque and must
 * be released with qsrg_graph_free. On any non-OK status a thread-local
 * message is available from qsrg_last_error().
 */
#ifndef QSRG_H
#define QSRG_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qsrg_status {
    QSRG_OK = 0,
    QSRG_ERR_INVALID_ARGUMENT = 1,
    QSRG_ERR_INVALID_EDGE = 2,
    QSRG_ERR_DUPLICATE_EDGE = 3,
    QSRG_ERR_NOT_DIVISIBLE = 4,
    QSRG_ERR_ODD_DIMENSION = 5,
    QSRG_ERR_NOT_STRONGLY_REGULAR = 6,
    QSRG_ERR_WRONG_PARAMETER_SHAPE = 7,
    QSRG_ERR_NOT_POLARITY = 8,
    QSRG_ERR_NOT_SYMPLECTIC = 9,
    QSRG_ERR_BUDGET_EXCEEDED = 10,
    QSRG_ERR_OVERFLOW = 11,
    QSRG_ERR_INTERNAL = 12
} qsrg_status;

typedef struct qsrg_graph qsrg_graph;

const char* qsrg_version(void);
const char* qsrg_last_error(void);
void qsrg_string_free(char* s);
void qsrg_graph_free(qsrg_graph* g);

/*
 * type is one of "complete", "spread", "symplectic". t is the spread member
 * dimension (ignored by the other constructions; pass 0).
 */
qsrg_status qsrg_construct(const char* type, int v, int q, int t, qsrg_graph** out);

/* Parses and fully validates a graph JSON document. */
qsrg_status qsrg_graph_from_json(const char* json_text, qsrg_graph** out);
qsrg_status qsrg_graph_to_json(const qsrg_graph* g, char** out_json);

/*
 * Verification report JSON with fields valid, regular, k, srg, lambda, mu
 * (null when undefined) and the parameter-identity cross-check.
 */
qsrg_status qsrg_verify(const qsrg_graph* g, char** out_report_json);

/* Neighborhood-design artifact JSON plus its verification verdict JSON. */
qsrg_status qsrg_design(const qsrg_graph* g, char** out_design_json,
                        char** out_verdict_json);

/* Classical collapse artifact JSON plus its srg/component verdict JSON. */
qsrg_status qsrg_collapse(const qsrg_graph* g, char** out_graph_json,
                          char** out_verdict_json);

/* Parameter identity and projective decomposition report (q >= 1). */
qsrg_status qsrg_params(int v, int k, long long lambda, long long mu, long long q,
                        char** out_json);

typedef struct qsrg_classify_options {
    int has_k; /* 0: every k in 1..v-1 over the admissible tuples */
    int k;
    int has_lambda; /* lambda and mu restrict a single-k run to one tuple */
    long long lambda;
    int has_mu;
    long long mu;
    uint64_t node_budget; /* 0 = default */
    int workers;          /* <= 0 = 1 */
    int fix_symmetry;
} qsrg_classify_options;

/*
 * Classification report JSON. For a single-tuple run (has_k, has_lambda,
 * has_mu all set) and a non-NULL out_graphs_jsonl, also returns the
 * enumerated graphs as line-delimited graph JSON. An exhausted budget is not
 * an error: the affected tuples carry "complete": false in the report.
 */
qsrg_status qsrg_classify(int v, int q, const qsrg_classify_options* options,
                          char** out_report_json, char** out_graphs_jsonl);

#ifdef __cplusplus
}
#endif

#endif /* QSRG_H */
