/*
 * avgfid — average gate fidelity of noisy quantum operations on qudits.
 *
 * C interface to the avgfid core. Handles are opaque; every fallible call
 * returns an avgfid_status and leaves a human-readable message readable
 * through avgfid_last_error() (thread-local). Complex matrices cross the
 * boundary as row-major interleaved doubles [re0, im0, re1, im1, ...]; a
 * d x d matrix is 2*d*d doubles.
 */

#ifndef AVGFID_H
#define AVGFID_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum avgfid_status {
    AVGFID_OK = 0,
    /* semantic violation: bad dimensions, non-trace-preserving Kraus set,
       parameter out of range, non-unitary gate, ... */
    AVGFID_ERROR_VALIDATION = 1,
    /* malformed document: not JSON or structure does not match the schema */
    AVGFID_ERROR_PARSE = 2,
    AVGFID_ERROR_INVALID_ARGUMENT = 3,
    AVGFID_ERROR_INTERNAL = 4
} avgfid_status;

/* Trace-preserving quantum operation in Kraus form. */
typedef struct avgfid_channel avgfid_channel;
/* Orthogonal unitary operator basis (d^2 elements). */
typedef struct avgfid_basis avgfid_basis;

typedef struct avgfid_estimate {
    double mean;
    double std_error;
    uint64_t n_samples;
    uint64_t seed;
} avgfid_estimate;

const char* avgfid_version(void);

/* Message for the most recent failing call on this thread ("" if none). */
const char* avgfid_last_error(void);

/* ---- channels ---------------------------------------------------------- */

/* Parse a channel spec document, e.g.
 * {"dim":2,"channel":{"type":"depolarizing","p":0.1}}. */
avgfid_status avgfid_channel_from_json(const char* text, avgfid_channel** out);

avgfid_status avgfid_channel_depolarizing(int dim, double p, avgfid_channel** out);
avgfid_status avgfid_channel_unitary(int dim, const double* matrix, avgfid_channel** out);
avgfid_status avgfid_channel_kraus(int dim, int count, const double* operators, avgfid_channel** out);
avgfid_status avgfid_channel_compose(const avgfid_channel* first, const avgfid_channel* then,
                                     avgfid_channel** out);
avgfid_status avgfid_channel_random(int dim, int kraus_rank, uint64_t seed, avgfid_channel** out);
void avgfid_channel_free(avgfid_channel* ch);

int avgfid_channel_dim(const avgfid_channel* ch);
int avgfid_channel_kraus_count(const avgfid_channel* ch);

/* rho and out are d x d interleaved buffers; out receives sum_i K_i rho K_i^dag. */
avgfid_status avgfid_channel_apply(const avgfid_channel* ch, const double* rho, double* out);

/* out receives the d^2 x d^2 Choi state (I kron E)(phi phi^dag). */
avgfid_status avgfid_channel_choi(const avgfid_channel* ch, double* out);

/* Depolarizing parameter of the exact Haar twirl. */
avgfid_status avgfid_channel_exact_twirl(const avgfid_channel* ch, double* p_out);

/* ---- operator bases ---------------------------------------------------- */

avgfid_status avgfid_basis_shift_clock(int dim, avgfid_basis** out);

/* elements: dim*dim matrices of dim x dim, concatenated. */
avgfid_status avgfid_basis_from_elements(int dim, const double* elements, avgfid_basis** out);
void avgfid_basis_free(avgfid_basis* basis);

/* 1 if the d^2 elements are unitary and Hilbert-Schmidt orthogonal at tol. */
int avgfid_basis_is_valid(const avgfid_basis* basis, double tol);
avgfid_status avgfid_basis_element(const avgfid_basis* basis, int index, double* out);

/* ---- fidelities -------------------------------------------------------- */

/* Entanglement fidelity <phi|(I kron E)(phi phi^dag)|phi> (Choi route). */
avgfid_status avgfid_entanglement_fidelity(const avgfid_channel* ch, double* out);

/* Basis-sum route sum_j tr(U_j^dag E(U_j))/d^3. */
avgfid_status avgfid_entanglement_fidelity_basis_sum(const avgfid_channel* ch, const avgfid_basis* basis,
                                                     double* out);

/* Average fidelity (d F_e + 1)/(d + 1). */
avgfid_status avgfid_average_fidelity(const avgfid_channel* ch, double* out);

/* Closed-form average gate fidelity
 * [sum_j tr(U U_j^dag U^dag E(U_j)) + d^2] / [d^2 (d+1)]. */
avgfid_status avgfid_average_gate_fidelity(const avgfid_channel* ch, const double* gate,
                                           const avgfid_basis* basis, double* out);

/* Qubit closed form 1/2 + (1/12) sum_j tr(U sigma_j U^dag E(sigma_j)). */
avgfid_status avgfid_average_gate_fidelity_qubit(const avgfid_channel* ch, const double* gate, double* out);

/* Haar Monte Carlo estimate of the average gate fidelity. Deterministic in
 * (n_samples, seed). */
avgfid_status avgfid_mc_average_gate_fidelity(const avgfid_channel* ch, const double* gate,
                                              uint64_t n_samples, uint64_t seed, avgfid_estimate* out);

/* Frobenius distance between the empirical-twirl Choi state (n_unitaries Haar
 * samples) and the exact depolarizing Choi state. */
avgfid_status avgfid_mc_twirl_distance(const avgfid_channel* ch, uint64_t n_unitaries, uint64_t seed,
                                       double* out);

/* Simulated-experiment estimate: finite-shot state tomography of the channel
 * outputs on the standard preparation basis, plugged into the state-basis
 * fidelity formula. shots == 0 selects the exact-probability limit. */
avgfid_status avgfid_experiment_fidelity(const avgfid_channel* ch, const double* gate, uint64_t shots,
                                         uint64_t seed, uint32_t repeats, avgfid_estimate* out);

/* ---- report-level entry points (the CLI backend) ------------------------ */

typedef struct avgfid_compute_options {
    const char* method; /* "exact" | "mc" | "experiment" */
    const char* basis;  /* NULL means "shiftclock" */
    uint64_t samples;   /* mc */
    uint64_t shots;     /* experiment; 0 = exact-probability mode */
    uint32_t repeats;   /* experiment */
    int has_samples;
    int has_shots;
    int has_repeats;
    int has_seed;
    uint64_t seed;
} avgfid_compute_options;

/* Builds the canonical JSON report for a compute run. *report_out is
 * malloc-backed; release it with avgfid_string_free. duration_ms_out may be
 * NULL. Reports are byte-identical for identical inputs, method and seed. */
avgfid_status avgfid_report_compute(const char* channel_json, const char* gate_json,
                                    const avgfid_compute_options* options, char** report_out,
                                    double* duration_ms_out);

/* Twirl report; n_unitaries == 0 means exact twirl only (seed unused). */
avgfid_status avgfid_report_twirl(const char* channel_json, uint64_t n_unitaries, int has_seed,
                                  uint64_t seed, char** report_out, double* duration_ms_out);

/* Parse and validate a channel document; on success *summary_out holds a
 * one-line summary JSON. */
avgfid_status avgfid_validate_channel(const char* channel_json, char** summary_out);

void avgfid_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* AVGFID_H */
