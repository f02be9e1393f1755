/*
 * codebounds — exact upper bounds on the size of error-correcting codes.
 *
 * C interface to the bound calculators, the A_q(n,d) estimate oracle and the
 * comparison sweep harness. All big values cross the boundary as decimal
 * strings; every function reports a cb_status and leaves a human-readable
 * message retrievable via cb_context_last_error().
 */
#ifndef CODEBOUNDS_H
#define CODEBOUNDS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cb_context cb_context;

typedef enum cb_status {
    CB_OK = 0,
    CB_EINVAL = 1,         /* invalid parameters */
    CB_ENOTAPPLICABLE = 2, /* bound not applicable at these parameters */
    CB_EGUARD = 3,         /* brute-force size guard exceeded */
    CB_EIO = 4,            /* file not readable */
    CB_EPARSE = 5,         /* malformed input file */
    CB_ENOSPC = 6,         /* output buffer too small */
    CB_EINTERNAL = 7
} cb_status;

/* Bound selection bits for sweeps and comparison rows. */
#define CB_BOUND_B (1u << 0)
#define CB_BOUND_JOHNSON (1u << 1)
#define CB_BOUND_HAMMING (1u << 2)
#define CB_BOUND_GRIESMER (1u << 3)
#define CB_BOUND_ELIAS (1u << 4)
#define CB_BOUND_SINGLETON (1u << 5)
#define CB_BOUND_PLOTKIN (1u << 6)
/* The comparison set of the statistics tables (everything except Plotkin). */
#define CB_BOUNDS_DEFAULT 0x3Fu

/* Enough for any decimal value arising from q <= 29, n <= 100. */
#define CB_VALUE_BUFSIZE 256

const char* cb_version(void);
const char* cb_status_str(cb_status status);

cb_context* cb_context_new(void);
void cb_context_free(cb_context* ctx);
const char* cb_context_last_error(const cb_context* ctx);

/* mode is "floor" (default) or "exact". */
cb_status cb_context_set_delta_mode(cb_context* ctx, const char* mode);
/* Loads a q,n,d,A[,source] CSV of known A_q(n,d) values. */
cb_status cb_context_load_known_values(cb_context* ctx, const char* path);
int cb_context_known_count(const cb_context* ctx);

/*
 * Single-bound evaluation. name is one of: singleton, hamming, plotkin,
 * griesmer, johnson, elias, boundB, weakBoundB. Writes the size bound as a
 * decimal string and the dimension form floor(log_q(size)) to *k_out.
 * Plotkin outside its range returns CB_ENOTAPPLICABLE.
 */
cb_status cb_bound_size(cb_context* ctx, const char* name, int q, int n, int d, char* size_buf,
                        size_t size_cap, int* k_out);

/* floor(A_q(n,d) - |B(eps,n)|/|B(d-1,n)|) for codes of minimum weight d+eps. */
cb_status cb_restricted_code_bound(cb_context* ctx, int q, int n, int d, int epsilon,
                                   char* size_buf, size_t size_cap);
/* floor(q^t A_q(n-t,d-2r) / |B(r,t)|). */
cb_status cb_litsyn_laihonen(cb_context* ctx, int q, int n, int d, int t, int r, char* size_buf,
                             size_t size_cap);
/* The sharpened puncturing bound; *clamped_out set when the inner term went negative. */
cb_status cb_bound_a(cb_context* ctx, int q, int n, int d, int t, int r, char* size_buf,
                     size_t size_cap, int* clamped_out);

cb_status cb_bound_b(cb_context* ctx, int q, int n, int d, int* k_out);
/* Per-r audit trail of the accepted k, as a JSON document (cb_string_free). */
cb_status cb_bound_b_witness(cb_context* ctx, int q, int n, int d, char** json_out);
cb_status cb_weak_bound_b(cb_context* ctx, int q, int n, int d, int* k_out);
/* Largest k with q^(n-k) >= (q-1)n + 1 (the d = 3 closed form). */
cb_status cb_d3_closed_form(cb_context* ctx, int q, int n, int* k_out);

/* Best available upper estimate of A_q(n,d) plus the winning bound name. */
cb_status cb_aq_upper(cb_context* ctx, int q, int n, int d, char* value_buf, size_t value_cap,
                      char* source_buf, size_t source_cap, int* plotkin_used_out);
/* Exact A_q(n,d) by exhaustive search; guarded by q^n <= 2^20. */
cb_status cb_aq_exact(cb_context* ctx, int q, int n, int d, char* value_buf, size_t value_cap);
/* Largest systematic dimension by exhaustive search; guarded by q^n <= 2^16. */
cb_status cb_max_systematic_k(cb_context* ctx, int q, int n, int d, int* k_out);

/* One comparison cell as a JSON object (cb_string_free). */
cb_status cb_comparison_row(cb_context* ctx, int q, int n, int d, unsigned bounds_mask,
                            char** json_out);

/*
 * Comparison sweep over q in q_values, n in [n_min,n_max], d in [3,n-1].
 * format is "csv" or "json"; rows are emitted in (q,n,d) order and the
 * output is byte-identical for any worker count. Free with cb_string_free.
 */
cb_status cb_sweep(cb_context* ctx, const int* q_values, size_t q_count, int n_min, int n_max,
                   unsigned bounds_mask, const char* format, int workers, char** out);
/* Winner statistics of the same sweep (percentages with two decimals). */
cb_status cb_stats(cb_context* ctx, const int* q_values, size_t q_count, int n_min, int n_max,
                   unsigned bounds_mask, const char* format, int workers, char** out);

/*
 * Recomputes the twelve showcase rows and diffs them against the shipped
 * reference (B, G, S, H exact; J, E within +/-1). *mismatches_out receives
 * the number of offending rows; the report is free-form text.
 */
cb_status cb_table3(cb_context* ctx, char** report_out, int* mismatches_out);

void cb_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* CODEBOUNDS_H */
