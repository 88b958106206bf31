// Copyright 2026 The qeilab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to qeilab. Every function returns a qei_status; on failure the
 * message is available from qei_last_error() on the calling thread. Handles
 * are opaque, immutable once created and safe to share between threads. */

#ifndef QEILAB_H_
#define QEILAB_H_

#include <stddef.h>

#if defined(_WIN32)
#if defined(QEILAB_BUILDING)
#define QEI_API __declspec(dllexport)
#else
#define QEI_API __declspec(dllimport)
#endif
#else
#define QEI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  QEI_OK = 0,
  QEI_ERR_INVALID_ARGUMENT = 1,
  QEI_ERR_DOMAIN = 2,
  QEI_ERR_NUMERICAL = 3,
  QEI_ERR_IO = 4,
  QEI_ERR_INTERNAL = 5
} qei_status;

QEI_API const char* qei_version(void);
/* Message of the last failed call on this thread; empty after success. */
QEI_API const char* qei_last_error(void);
/* Achieved error estimate attached to the last QEI_ERR_NUMERICAL. */
QEI_API double qei_last_error_estimate(void);
QEI_API const char* qei_status_name(qei_status s);

typedef enum { QEI_CONVENTION_PLAIN = 0, QEI_CONVENTION_NORMALIZED = 1 } qei_convention;

/* ---- test functions ---------------------------------------------------- */

typedef struct qei_testfn qei_testfn;

QEI_API qei_status qei_testfn_gaussian(double sigma, double center, qei_testfn** out);
QEI_API qei_status qei_testfn_bump(double sigma, double center, qei_testfn** out);
QEI_API qei_status qei_testfn_tabulated(const double* samples, size_t count, double t_start,
                                        double spacing, qei_testfn** out);
QEI_API qei_status qei_testfn_from_csv(const char* path, qei_testfn** out);
QEI_API qei_status qei_testfn_scaled(const qei_testfn* g, double s, qei_testfn** out);
QEI_API void qei_testfn_free(qei_testfn* g);

QEI_API qei_status qei_testfn_eval(const qei_testfn* g, double t, double* value);
QEI_API qei_status qei_testfn_fourier(const qei_testfn* g, double omega, qei_convention c,
                                      double* re, double* im, double* error);
QEI_API qei_status qei_testfn_fourier_squared(const qei_testfn* g, double k, qei_convention c,
                                              double* re, double* im, double* error);
/* 1 for bump and tabulated kinds. */
QEI_API int qei_testfn_compact(const qei_testfn* g);
/* Strings are copied into buf (truncated, NUL-terminated); *needed receives
 * the full size including the terminator. Either may be NULL. */
QEI_API qei_status qei_testfn_describe(const qei_testfn* g, char* buf, size_t cap, size_t* needed);

/* ---- models ------------------------------------------------------------- */

typedef enum {
  QEI_MODEL_FREE = 0,
  QEI_MODEL_ISING = 1,
  QEI_MODEL_SINH_GORDON = 2,
  QEI_MODEL_CUSTOM = 3
} qei_model_kind;

typedef enum {
  QEI_ASYMPTOTE_FINITE = 0,
  QEI_ASYMPTOTE_INFINITE = 1,
  QEI_ASYMPTOTE_INCONCLUSIVE = 2
} qei_asymptote_kind;

typedef struct qei_model qei_model;

/* Evaluates F_min(theta + i pi); returns 0 on success. Must be pure and
 * callable from several threads at once. */
typedef int (*qei_fmin_callback)(double theta, double* re, double* im, void* user);

/* coupling is read only for QEI_MODEL_SINH_GORDON; name may be NULL. */
QEI_API qei_status qei_model_create(qei_model_kind kind, double mass, double coupling,
                                    const char* name, qei_model** out);
QEI_API qei_status qei_model_custom(const char* name, double mass, qei_fmin_callback fmin,
                                    void* user, int has_asymptote, double asymptote,
                                    qei_model** out);
/* CSV columns theta, Re, Im on a uniform grid. */
QEI_API qei_status qei_model_from_table_csv(const char* name, double mass, const char* path,
                                            int has_asymptote, double asymptote,
                                            qei_model** out);
QEI_API void qei_model_free(qei_model* m);

QEI_API qei_model_kind qei_model_get_kind(const qei_model* m);
QEI_API double qei_model_mass(const qei_model* m);
QEI_API qei_status qei_model_name(const qei_model* m, char* buf, size_t cap, size_t* needed);
QEI_API qei_status qei_model_fmin_shifted(const qei_model* m, double theta, double* re, double* im);
QEI_API qei_status qei_model_s2(const qei_model* m, double theta, double* re, double* im);
QEI_API qei_status qei_model_asymptote(const qei_model* m, qei_asymptote_kind* kind,
                                       double* value);

/* ---- polynomial P ------------------------------------------------------- */

typedef struct qei_poly qei_poly;

/* Coefficients lowest degree first; P(1) must equal 1 to 1e-12. */
QEI_API qei_status qei_poly_create(const double* coefficients, size_t count, qei_poly** out);
/* P(x) = (1 - alpha) + alpha x. */
QEI_API qei_status qei_poly_linear(double alpha, qei_poly** out);
QEI_API void qei_poly_free(qei_poly* p);
QEI_API int qei_poly_degree(const qei_poly* p);
/* Copies up to cap coefficients; *count receives the total. */
QEI_API qei_status qei_poly_coefficients(const qei_poly* p, double* out, size_t cap, size_t* count);
QEI_API qei_status qei_poly_describe(const qei_poly* p, char* buf, size_t cap, size_t* needed);

/* P(cosh theta) F_min(theta + i pi). */
QEI_API qei_status qei_f_p(const qei_model* m, const qei_poly* p, double theta, double* re,
                           double* im);

/* ---- grids and kernels -------------------------------------------------- */

typedef enum { QEI_GRID_GAUSS_LEGENDRE = 0, QEI_GRID_COMPOSITE = 1 } qei_grid_kind;

typedef struct {
  qei_grid_kind kind;
  double core_cutoff;
  double core_fraction;
} qei_grid_options;

QEI_API void qei_grid_options_default(qei_grid_options* o);

typedef struct qei_grid qei_grid;

/* options may be NULL for a single Gauss-Legendre panel. */
QEI_API qei_status qei_grid_create(double cutoff, size_t n, const qei_grid_options* options,
                                   qei_grid** out);
QEI_API void qei_grid_free(qei_grid* g);
QEI_API size_t qei_grid_size(const qei_grid* g);
/* Either output may be NULL; each must hold qei_grid_size entries. */
QEI_API qei_status qei_grid_nodes(const qei_grid* g, double* nodes, double* weights);

typedef struct qei_kernel qei_kernel;

QEI_API qei_status qei_kernel_assemble(const qei_model* m, const qei_poly* p, const qei_testfn* g,
                                       const qei_grid* grid, qei_convention c, qei_kernel** out);
QEI_API void qei_kernel_free(qei_kernel* k);
QEI_API size_t qei_kernel_size(const qei_kernel* k);
QEI_API double qei_kernel_norm(const qei_kernel* k);
/* Relative asymmetry measured before Hermitian averaging. */
QEI_API double qei_kernel_asymmetry(const qei_kernel* k);
QEI_API double qei_kernel_hermiticity_defect(const qei_kernel* k);
QEI_API qei_status qei_kernel_entry(const qei_kernel* k, size_t i, size_t j, double* re, double* im);
/* Writes path (i,j,Re,Im) and path + ".json" with the provenance record. */
QEI_API qei_status qei_kernel_write_csv(const qei_kernel* k, const char* path);
QEI_API qei_status qei_kernel_provenance_json(const qei_kernel* k, char* buf, size_t cap,
                                              size_t* needed);
/* phi^* M phi for coefficients phi_i = phi(theta_i) sqrt(w_i). */
QEI_API qei_status qei_kernel_quadratic_form(const qei_kernel* k, const double* re,
                                             const double* im, size_t count, double* value);

typedef struct {
  double value;
  double residual;
  double raw_value;
  int refinement_steps;
  int degenerate;
  size_t multiplicity;
} qei_eigen_info;

/* vec_re / vec_im may be NULL; otherwise they receive qei_kernel_size entries. */
QEI_API qei_status qei_kernel_min_eigenpair(const qei_kernel* k, qei_eigen_info* info,
                                            double* vec_re, double* vec_im);

/* ---- best constant ------------------------------------------------------ */

typedef struct {
  double cutoff;
  size_t n;
} qei_ladder_stage;

typedef struct {
  double tolerance;
  qei_convention convention;
  qei_grid_options grid;
  double boundary_mass_limit;
  double cutoff_step;
  int max_cutoff_extensions;
} qei_minimize_options;

QEI_API void qei_minimize_options_default(qei_minimize_options* o);

typedef struct {
  double cutoff;
  size_t n;
  double lambda;
  double boundary_mass;
  double hermiticity_defect;
  double norm;
  int extension;
} qei_ladder_entry;

typedef struct {
  double lambda_min;
  double error_estimate; /* infinity for a single stage */
  int converged;
  int degenerate;
  double residual;
  size_t ladder_size;
  size_t witness_size;
} qei_converged_info;

typedef struct qei_converged qei_converged;

QEI_API qei_status qei_best_constant(const qei_model* m, const qei_poly* p, const qei_testfn* g,
                                     const qei_ladder_stage* ladder, size_t stages,
                                     const qei_minimize_options* options, qei_converged** out);
QEI_API void qei_converged_free(qei_converged* b);
QEI_API qei_status qei_converged_summary(const qei_converged* b, qei_converged_info* info);
QEI_API qei_status qei_converged_ladder(const qei_converged* b, size_t index, qei_ladder_entry* e);
/* Witness function values phi(theta_i) on the final grid; each array holds
 * witness_size entries, any may be NULL. */
QEI_API qei_status qei_converged_witness(const qei_converged* b, double* theta, double* re,
                                         double* im);
/* CSV theta, Re phi, Im phi. */
QEI_API qei_status qei_converged_write_witness_csv(const qei_converged* b, const char* path);

/* ---- criteria ----------------------------------------------------------- */

typedef struct {
  double theta_max;
  size_t samples;
  double epsilon;
} qei_scan_options;

QEI_API void qei_scan_options_default(qei_scan_options* o);

typedef struct {
  int found;
  double theta;
  double magnitude;
  int has_state; /* a negative-energy minimizer was attached */
  double energy;
} qei_witness_info;

/* bound may be NULL; when given and its lambda_min < 0 it is attached. */
QEI_API qei_status qei_negativity_scan(const qei_model* m, const qei_poly* p,
                                       const qei_scan_options* options,
                                       const qei_converged* bound, qei_witness_info* out);
/* |F_P| on samples uniform points of [0, theta_max]; arrays hold samples entries. */
QEI_API qei_status qei_scan_profile(const qei_model* m, const qei_poly* p, double theta_max,
                                    size_t samples, double* theta, double* magnitude);
QEI_API qei_status qei_admissible_alpha_bound(const qei_model* m, int* finite, double* bound);

typedef enum {
  QEI_VERDICT_HOLDS = 0,
  QEI_VERDICT_NOGO = 1,
  QEI_VERDICT_INCONCLUSIVE = 2
} qei_verdict;

typedef struct {
  double theta_max;
  double margin;
  size_t samples;
} qei_classify_options;

QEI_API void qei_classify_options_default(qei_classify_options* o);

typedef struct {
  qei_verdict verdict;
  double c;
  int divergent;
  int by_degree;
  double theta_max;
  double margin;
  double pointwise_sup_ratio;
  double real_part_ratio;
  qei_asymptote_kind asymptote_kind;
  double asymptote;
  int has_alpha_bound;
  double alpha_bound;
  int alpha_admissible; /* -1 when not applicable */
  char reason[128];
} qei_classification;

QEI_API const char* qei_verdict_name(qei_verdict v);
/* Full pipeline: degree shortcut for finite asymptotes, growth test, alpha window. */
QEI_API qei_status qei_classify(const qei_model* m, const qei_poly* p,
                                const qei_classify_options* options, qei_classification* out);
/* Growth test alone. */
QEI_API qei_status qei_classify_qei(const qei_model* m, const qei_poly* p,
                                    const qei_classify_options* options, qei_classification* out);

/* ---- Ising bound -------------------------------------------------------- */

QEI_API qei_status qei_q_function(double u, double* value);
QEI_API qei_status qei_write_q_csv(const char* path, double u_max, size_t count);

typedef struct {
  qei_convention convention;
  double tail_tolerance;
  double initial_cutoff; /* 0: automatic */
  int max_doublings;
} qei_ising_bound_options;

QEI_API void qei_ising_bound_options_default(qei_ising_bound_options* o);

typedef struct {
  double value;
  double error;
  double omega_cutoff;
  int extrapolated; /* g is not compactly supported */
} qei_bound_result;

QEI_API qei_status qei_ising_bound(const qei_testfn* g, double mass,
                                   const qei_ising_bound_options* options, qei_bound_result* out);

#ifdef __cplusplus
}
#endif

#endif /* QEILAB_H_ */
