#ifndef RANK2SEP_H
#define RANK2SEP_H

/*
 * C interface to the rank-two separability library.
 *
 * Conventions:
 *  - Complex arrays are interleaved doubles [re0, im0, re1, im1, ...].
 *  - Pure-state amplitudes are in row-major multi-index order with party 0
 *    slowest; density matrices are row-major over that same flat index.
 *  - Every function returns an r2s_status; on failure r2s_last_error() gives
 *    a thread-local message valid until the next failing call on the thread.
 *  - Out-parameters are written only on R2S_OK. Handles are freed with the
 *    matching *_free function; freeing NULL is a no-op.
 *  - Tolerance arguments <= 0 select the library default for that check.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum r2s_status {
  R2S_OK = 0,
  R2S_ERR_INVALID_ARGUMENT = 1,
  R2S_ERR_SHAPE_MISMATCH = 2,
  R2S_ERR_UNNORMALIZED = 3,
  R2S_ERR_NOT_DENSITY_MATRIX = 4,
  R2S_ERR_NOT_RANK_TWO = 5,
  R2S_ERR_NOT_SEPARABLE = 6,
  R2S_ERR_NOT_ORTHOGONAL_TO_GHZ = 7,
  R2S_ERR_E2_SEPARABLE = 8,
  R2S_ERR_INCONSISTENT_ROOTS = 9,
  R2S_ERR_COMPLEX_INPUT = 10,
  R2S_ERR_INTERNAL = 11
} r2s_status;

typedef enum r2s_decision {
  R2S_SEPARABLE = 0,
  R2S_ENTANGLED = 1,
  R2S_BOTH_EIGENVECTORS_SEPARABLE = 2
} r2s_decision;

typedef struct r2s_pure r2s_pure;
typedef struct r2s_density r2s_density;
typedef struct r2s_rank2 r2s_rank2;
typedef struct r2s_verdict r2s_verdict;
typedef struct r2s_factorization r2s_factorization;
typedef struct r2s_ppt_report r2s_ppt_report;

const char* r2s_version(void);
const char* r2s_status_name(r2s_status status);
const char* r2s_last_error(void);

/* Canonical bipartitions of num_parties positions: position 0 always stays
 * on the S side, so there are 2^(num_parties-1) - 1 of them, indexed in a
 * fixed enumeration order shared by every per-bipartition result. */
r2s_status r2s_cut_count(int num_parties, size_t* out);
/* label receives e.g. "T={1,2}", truncated to cap-1 chars, NUL-terminated. */
r2s_status r2s_cut_label(int num_parties, size_t index, char* label,
                         size_t cap);

/* ---- pure states ------------------------------------------------------ */

/* len must be 2 * local_dim^num_parties. With normalize nonzero the vector
 * is rescaled to unit norm; otherwise it must already be normalized within
 * norm_tol. Tolerance arguments <= 0 select the library default. */
r2s_status r2s_pure_create(int num_parties, int local_dim,
                           const double* amplitudes, size_t len, int normalize,
                           double norm_tol, r2s_pure** out);

r2s_status r2s_pure_ghz(int num_parties, int local_dim, r2s_pure** out);

/* factors holds num_parties blocks of local_dim interleaved entries; each
 * block is normalized before the tensor product is formed. */
r2s_status r2s_pure_product(int num_parties, int local_dim,
                            const double* factors, r2s_pure** out);

void r2s_pure_free(r2s_pure* state);

r2s_status r2s_pure_dims(const r2s_pure* state, int* num_parties,
                         int* local_dim);

/* out must hold 2 * local_dim^num_parties doubles. */
r2s_status r2s_pure_amplitudes(const r2s_pure* state, double* out);

r2s_status r2s_pure_inner_product(const r2s_pure* a, const r2s_pure* b,
                                  double* re, double* im);

/* factors holds num_parties row-major local_dim x local_dim unitary blocks,
 * interleaved; block k acts on party k. */
r2s_status r2s_pure_apply_local_unitary(const r2s_pure* state,
                                        const double* factors,
                                        r2s_pure** out);

/* ---- invariants and pure-state separability --------------------------- */

r2s_status r2s_concurrence(const r2s_pure* state, double* out);

/* Writes i0 and up to cap biquadratics (one per canonical bipartition, in
 * enumeration order); *count receives the full number available. */
r2s_status r2s_invariants(const r2s_pure* state, double* i0,
                          double* biquadratics, size_t cap, size_t* count);

r2s_status r2s_is_pure_separable(const r2s_pure* state, double tolerance,
                                 int* out);

/* Independent rank-one oracle: second singular value of every single-party
 * matricization below tolerance (relative to the first). */
r2s_status r2s_pure_product_oracle(const r2s_pure* state, double tolerance,
                                   int* out);

r2s_status r2s_factorize(const r2s_pure* state, double tolerance,
                         r2s_factorization** out);
void r2s_factorization_free(r2s_factorization* f);
/* out must hold 2 * local_dim doubles. */
r2s_status r2s_factorization_factor(const r2s_factorization* f, int party,
                                    double* out);
r2s_status r2s_factorization_global_phase(const r2s_factorization* f,
                                          double* re, double* im);

/* ---- density matrices -------------------------------------------------- */

/* entries is row-major over the flat index, 2 * dim * dim doubles.
 * Tolerance arguments <= 0 select the library defaults. */
r2s_status r2s_density_create(int num_parties, int local_dim,
                              const double* entries, size_t len,
                              double herm_tol, double trace_tol,
                              double psd_tol, r2s_density** out);
void r2s_density_free(r2s_density* rho);
r2s_status r2s_density_dims(const r2s_density* rho, int* num_parties,
                            int* local_dim);
/* out must hold 2 * dim * dim doubles. */
r2s_status r2s_density_entries(const r2s_density* rho, double* out);

r2s_status r2s_reconstruct(double p_prime, const r2s_pure* e1p,
                           const r2s_pure* e2p, r2s_density** out);

r2s_status r2s_density_max_abs_diff(const r2s_density* a,
                                    const r2s_density* b, double* out);

r2s_status r2s_ppt_check(const r2s_density* rho, double tolerance,
                         r2s_ppt_report** out);
void r2s_ppt_report_free(r2s_ppt_report* report);
r2s_status r2s_ppt_report_passed(const r2s_ppt_report* report, int* out);
r2s_status r2s_ppt_report_count(const r2s_ppt_report* report, size_t* out);
/* label receives a cut description such as "T={1,2}", truncated to cap-1
 * characters and NUL-terminated. */
r2s_status r2s_ppt_report_entry(const r2s_ppt_report* report, size_t index,
                                char* label, size_t cap,
                                double* min_eigenvalue);

/* ---- rank-two mixtures ------------------------------------------------- */

/* orth_tol <= 0 selects the library default. */
r2s_status r2s_rank2_create(double p, const r2s_pure* e1, const r2s_pure* e2,
                            double orth_tol, r2s_rank2** out);
r2s_status r2s_rank2_extract(const r2s_density* rho, double tolerance,
                             r2s_rank2** out);
void r2s_rank2_free(r2s_rank2* state);
r2s_status r2s_rank2_p(const r2s_rank2* state, double* out);
/* which is 1 or 2. */
r2s_status r2s_rank2_eigenvector(const r2s_rank2* state, int which,
                                 r2s_pure** out);
r2s_status r2s_rank2_assemble(const r2s_rank2* state, r2s_density** out);

r2s_status r2s_concurrence_ratio(const r2s_rank2* state, double tolerance,
                                 double* out);

r2s_status r2s_corollary_bound_check(const r2s_pure* e1, double p,
                                     double orth_tol, int* out);

/* ---- separability decision --------------------------------------------- */

r2s_status r2s_decide(const r2s_rank2* state, double tolerance,
                      r2s_verdict** out);
/* Fails with R2S_ERR_COMPLEX_INPUT when amplitudes are not real. */
r2s_status r2s_decide_real(const r2s_rank2* state, double tolerance,
                           r2s_verdict** out);
void r2s_verdict_free(r2s_verdict* verdict);

r2s_status r2s_verdict_decision(const r2s_verdict* verdict,
                                r2s_decision* out);
/* Empty string when no criterion condition failed. */
r2s_status r2s_verdict_failed_condition(const r2s_verdict* verdict, char* buf,
                                        size_t cap);
r2s_status r2s_verdict_residual_count(const r2s_verdict* verdict,
                                      size_t* out);
r2s_status r2s_verdict_residual(const r2s_verdict* verdict, size_t index,
                                char* name, size_t name_cap, double* value);
/* *present is 0 when the decision was reached before the root solve. */
r2s_status r2s_verdict_roots(const r2s_verdict* verdict, int* present,
                             double* mu1_re, double* mu1_im, double* mu2_re,
                             double* mu2_im, double* theta);
r2s_status r2s_verdict_has_decomposition(const r2s_verdict* verdict,
                                         int* out);
r2s_status r2s_verdict_p_prime(const r2s_verdict* verdict, double* out);
/* which is 1 or 2. */
r2s_status r2s_verdict_component(const r2s_verdict* verdict, int which,
                                 r2s_pure** out);
r2s_status r2s_verdict_component_factorization(const r2s_verdict* verdict,
                                               int which,
                                               r2s_factorization** out);

#ifdef __cplusplus
}
#endif

#endif /* RANK2SEP_H */
