/*
 * fslab C API.
 *
 * Fekete-Szego bounds, explicit class members, and a numerical oracle for the
 * close-to-convex class K_{lambda,delta}(alpha, beta). Every function returns
 * an fslab_status; on failure fslab_last_error() gives a message that stays
 * valid until the next call on the same thread. Handles are opaque and owned
 * by the caller (release with the matching *_destroy).
 */
#ifndef FSLAB_H
#define FSLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FSLAB_BUILDING)
#    define FSLAB_API __declspec(dllexport)
#  else
#    define FSLAB_API __declspec(dllimport)
#  endif
#else
#  define FSLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fslab_status {
    FSLAB_OK = 0,
    FSLAB_ERR_DOMAIN = 1,        /* invalid parameters, measures, or arguments */
    FSLAB_ERR_NEAR_SINGULAR = 2, /* series division by a vanishing constant term */
    FSLAB_ERR_CASE_RANGE = 3,    /* extremal case requested outside its mu-interval */
    FSLAB_ERR_VIOLATION = 4,     /* a sampled member exceeded the bound */
    FSLAB_ERR_NULL = 5,          /* required pointer argument was NULL */
    FSLAB_ERR_INTERNAL = 6
} fslab_status;

typedef struct fslab_params fslab_params;
typedef struct fslab_member fslab_member;

typedef struct fslab_atom {
    double weight;
    double angle;
} fslab_atom;

typedef struct fslab_bound_report {
    double mu;
    int case_id;
    double breakpoints[3];
    double scaled_value;
    double value;
    double psi_beta;
    double psi_alpha;
    double psi_zero;
} fslab_bound_report;

typedef struct fslab_sharpness {
    int case_id;
    double bound;
    double attained_value;
    double residual;
} fslab_sharpness;

typedef struct fslab_budget {
    uint64_t n_samples;
    uint32_t n_refine;
    uint32_t max_atoms;
    uint64_t seed;
    uint32_t threads; /* 0: one per hardware thread */
} fslab_budget;

typedef struct fslab_verify_report {
    double mu_re;
    double mu_im;
    double bound;
    double best_value;
    double margin;
    int attained;
    uint64_t evaluations;
} fslab_verify_report;

typedef enum fslab_sequence {
    FSLAB_SEQ_A = 0,      /* f */
    FSLAB_SEQ_B = 1,      /* g */
    FSLAB_SEQ_C = 2,      /* p */
    FSLAB_SEQ_Q = 3,      /* q */
    FSLAB_SEQ_D = 4,      /* D_k, imaginary part zero */
    FSLAB_SEQ_LIBERA = 5  /* A_k of the Libera-type transform */
} fslab_sequence;

typedef enum fslab_preset {
    FSLAB_PRESET_KEOGH_MERKES = 0,
    FSLAB_PRESET_DARUS_THOMAS = 1,
    FSLAB_PRESET_AL_ABBADI_DARUS = 2,
    FSLAB_PRESET_AD2 = 3
} fslab_preset;

FSLAB_API const char* fslab_last_error(void);
FSLAB_API const char* fslab_version(void);

/* Defaults: 10000 samples, 3 refinement passes, 3 atoms, seed 42, auto threads. */
FSLAB_API void fslab_budget_default(fslab_budget* out);

FSLAB_API fslab_status fslab_params_create(double lambda, double delta, double alpha, double beta,
                                           fslab_params** out);
FSLAB_API void fslab_params_destroy(fslab_params* params);
FSLAB_API fslab_status fslab_params_get(const fslab_params* params, double* lambda, double* delta,
                                        double* alpha, double* beta, double* tau, double* sigma);

/* Bounds */
FSLAB_API fslab_status fslab_bound_real(const fslab_params* params, double mu, fslab_bound_report* out);
FSLAB_API fslab_status fslab_bound_complex(const fslab_params* params, double mu_re, double mu_im,
                                           double* value, double* scaled_value);
FSLAB_API fslab_status fslab_coeff_bounds(const fslab_params* params, double* a2_max, double* a3_max);
FSLAB_API fslab_status fslab_caratheodory_bound(double nu_re, double nu_im, double* out);
FSLAB_API fslab_status fslab_starlike_fs_bound(double beta, double mu, double* out);
FSLAB_API fslab_status fslab_classical_s_bound(double mu, double* out);
FSLAB_API fslab_status fslab_preset_from_name(const char* name, fslab_preset* out);
FSLAB_API fslab_status fslab_reduction_bound(fslab_preset preset, double lambda, double alpha,
                                             double beta, double mu, double* out);

/* Members */
FSLAB_API fslab_status fslab_member_create(const fslab_params* params, const fslab_atom* p_atoms,
                                           size_t n_p, const fslab_atom* q_atoms, size_t n_q,
                                           size_t order, fslab_member** out);
FSLAB_API fslab_status fslab_member_extremal(const fslab_params* params, double mu, int case_id,
                                             fslab_member** out);
FSLAB_API void fslab_member_destroy(fslab_member* member);
FSLAB_API size_t fslab_member_order(const fslab_member* member);
/* Copies indices 0..min(len-1, order) of the chosen sequence. */
FSLAB_API fslab_status fslab_member_sequence(const fslab_member* member, fslab_sequence which,
                                             double* re, double* im, size_t len);
/* which: 0 for the p-measure, 1 for the q-measure. *count receives the atom count. */
FSLAB_API fslab_status fslab_member_atoms(const fslab_member* member, int which, fslab_atom* out,
                                          size_t capacity, size_t* count);
FSLAB_API fslab_status fslab_member_fs(const fslab_member* member, double mu_re, double mu_im,
                                       double* re, double* im);
FSLAB_API fslab_status fslab_member_spotcheck(const fslab_member* member, double radius, size_t grid,
                                              int* passed);

/* Sharpness and search */
FSLAB_API fslab_status fslab_sharpness_check(const fslab_params* params, double mu, fslab_sharpness* out);
/* On FSLAB_ERR_VIOLATION the report is still filled. best may be NULL. */
FSLAB_API fslab_status fslab_verify(const fslab_params* params, double mu_re, double mu_im,
                                    const fslab_budget* budget, fslab_verify_report* out,
                                    fslab_member** best);

#ifdef __cplusplus
}
#endif

#endif /* FSLAB_H */
