/* C interface to the balanced covering library.
 *
 * All functions returning balcov_status set a thread-local message readable
 * via balcov_last_error() on failure. Strings returned through char** are
 * heap-allocated JSON or plain text; release them with balcov_string_free().
 * Instances are opaque; release them with balcov_instance_free().
 */
#ifndef BALCOV_H
#define BALCOV_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum balcov_status {
    BALCOV_OK = 0,
    BALCOV_ERR_INVALID_SUBSET,
    BALCOV_ERR_PRECONDITION,
    BALCOV_ERR_UNIFORMITY,
    BALCOV_ERR_ARITY,
    BALCOV_ERR_DIMENSION,
    BALCOV_ERR_SIZE,
    BALCOV_ERR_PARAMETER,
    BALCOV_ERR_INFEASIBLE,
    BALCOV_ERR_GENERATION,
    BALCOV_ERR_REDUCTION,
    BALCOV_ERR_PARSE,
    BALCOV_ERR_VALIDATION,
    BALCOV_ERR_BOUND,
    BALCOV_ERR_INTERNAL
} balcov_status;

typedef struct balcov_instance balcov_instance;

const char* balcov_version(void);

/* Message for the most recent failing call on this thread; empty after a
 * success. The pointer stays valid until the next library call. */
const char* balcov_last_error(void);

void balcov_string_free(char* s);

/* Instance files: {"kind": "family" | "graph" | "vectors", ...}. */
balcov_status balcov_instance_parse(const char* json, balcov_instance** out);
void balcov_instance_free(balcov_instance* inst);
balcov_status balcov_instance_serialize(const balcov_instance* inst, char** out_json);

/* "family", "graph", or "vectors"; NULL on a null argument. Static storage. */
const char* balcov_instance_kind(const balcov_instance* inst);

/* Sizes plus cover slack (families, graphs) or norm summary (vectors). */
balcov_status balcov_instance_info(const balcov_instance* inst, char** out_json);

/* Builds a balanced chain on a family or graph instance. algo is "greedy",
 * "two", or "steinitz"; NULL picks "two" when k = 2, else "greedy". Graph
 * instances additionally get the mapped left-side growth chain, per-step
 * block coverage, and the half-cover certificate. */
balcov_status balcov_chain(const balcov_instance* inst, const char* algo, char** out_json);

/* Splits the ground set of a family instance. algo is "tucker" or
 * "pairwise". cap <= 0 uses the default exact-search limit; above it the
 * tucker route degrades to an uncertified local search seeded by seed. */
balcov_status balcov_partition(const balcov_instance* inst, const char* algo, int cap,
                               unsigned long long seed, char** out_json);

/* Orders a sum-zero vectors instance so every prefix sum has infinity-norm
 * at most d times the largest input norm. */
balcov_status balcov_order_vectors(const balcov_instance* inst, char** out_json);

/* "graph" multiplies weights by the common denominator times scale (0 means
 * 1) to materialize right-vertex copies; "family" divides back out. */
balcov_status balcov_convert(const balcov_instance* inst, const char* to,
                             unsigned long long scale, balcov_instance** out);

/* params: {"kind": "random" | "almost-regular" | "hadamard" | "reduction",
 * ...}. random: n, k, c, seed plus r (uniform) or max_card (mixed).
 * almost-regular: c, eps, r, m, seed, optional retry_budget/iid; the output
 * is a report document, success=false when the budget runs out. hadamard: k
 * a power of two. reduction: c, theta, and an embedded vectors instance.
 * Other kinds emit an instance document. */
balcov_status balcov_generate(const char* params_json, char** out_json);

/* Exhaustive reference results, exact but exponential: which is "chain",
 * "partition" (family instances), or "ordering" (vectors). cap <= 0 uses the
 * per-oracle default; sizes beyond cap are refused, never approximated. */
balcov_status balcov_oracle(const balcov_instance* inst, const char* which, int cap,
                            char** out_json);

/* Recomputes every claim in an artifact document against the instance.
 * Returns BALCOV_OK with *out_ok = 0 when the artifact is well-formed but
 * fails a bound; the report lists each violation. */
balcov_status balcov_verify(const balcov_instance* inst, const char* artifact_json, int* out_ok,
                            char** out_report_json);

/* Exact cover slack of a family or graph instance as a rational string. */
balcov_status balcov_cover_slack(const balcov_instance* inst, char** out_value);

#ifdef __cplusplus
}
#endif

#endif /* BALCOV_H */
