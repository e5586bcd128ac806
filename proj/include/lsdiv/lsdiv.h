/*
 * lsdiv: entropies, cross-entropies and f-divergences between densities of
 * location-scale families.
 *
 * C interface. Objects are opaque handles created and released by the
 * library. Every fallible call returns an lsdiv_status; on failure a
 * description of the most recent error on the calling thread is available
 * from lsdiv_last_error(). Handles are immutable after creation and may be
 * shared between threads.
 */
#ifndef LSDIV_H
#define LSDIV_H

#include <stddef.h>
#include <stdint.h>

#if defined(LSDIV_BUILDING)
#define LSDIV_API __attribute__((visibility("default")))
#else
#define LSDIV_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lsdiv_status {
  LSDIV_OK = 0,
  LSDIV_E_INVALID_ARGUMENT = 1, /* bad parameter, malformed spec, null pointer */
  LSDIV_E_UNKNOWN_NAME = 2,     /* unknown family, generator or suite */
  LSDIV_E_NUMERIC = 3,          /* integrand produced NaN */
  LSDIV_E_INTERNAL = 4
} lsdiv_status;

typedef enum lsdiv_method {
  LSDIV_METHOD_CLOSED_FORM = 0,
  LSDIV_METHOD_QUADRATURE = 1
} lsdiv_method;

typedef enum lsdiv_side { LSDIV_SIDE_RIGHT = 0, LSDIV_SIDE_LEFT = 1 } lsdiv_side;

/* Flag for the evaluation calls: also integrate numerically when a closed
 * form is used, and report the agreement. */
#define LSDIV_VERIFY 1u

typedef struct lsdiv_density lsdiv_density;
typedef struct lsdiv_generator lsdiv_generator;
typedef struct lsdiv_config lsdiv_config;
typedef struct lsdiv_check_report lsdiv_check_report;

typedef struct lsdiv_result {
  double value; /* may be +INFINITY */
  lsdiv_method method;
  double error_estimate;
  int converged;
  double raw_value; /* before clamping tiny negative quadrature noise */
  int clamped;
  int verified; /* remaining fields valid only when nonzero */
  double verify_value;
  double verify_error;
  double verify_difference;
  int verify_agrees;
} lsdiv_result;

typedef struct lsdiv_projection {
  double reduced_l;
  double reduced_s;
  double optimum_l;
  double optimum_s;
  double min_value; /* +INFINITY when every start was infeasible */
  size_t evaluations;
  int converged;
  size_t starts_used;
  int location_pinned;
} lsdiv_projection;

typedef struct lsdiv_symmetry {
  double value;
  double error_estimate;
  int converged;
  int comparable; /* 0 when either direction is infinite */
  double forward;
  double backward;
} lsdiv_symmetry;

typedef struct lsdiv_check_item {
  const char* suite; /* owned by the report */
  const char* name;
  size_t trials;
  size_t failures;
  size_t infinite;
  double max_defect;
  double tolerance;
  int passed;
} lsdiv_check_item;

LSDIV_API const char* lsdiv_version(void);
LSDIV_API const char* lsdiv_last_error(void);

/* Densities */
LSDIV_API lsdiv_status lsdiv_density_create(const char* family, double location, double scale,
                                            lsdiv_density** out);
/* "<family>:<loc>,<scale>", e.g. "cauchy:0,1" */
LSDIV_API lsdiv_status lsdiv_density_parse(const char* spec, lsdiv_density** out);
LSDIV_API void lsdiv_density_destroy(lsdiv_density* d);
LSDIV_API const char* lsdiv_density_family(const lsdiv_density* d);
LSDIV_API lsdiv_status lsdiv_density_params(const lsdiv_density* d, double* location,
                                            double* scale);
LSDIV_API lsdiv_status lsdiv_density_pdf(const lsdiv_density* d, double x, double* out);

/* Generators: kl, reverse-kl, hellinger2, tv, chi2 */
LSDIV_API lsdiv_status lsdiv_generator_create(const char* name, lsdiv_generator** out);
LSDIV_API lsdiv_status lsdiv_generator_adjoint(const lsdiv_generator* gen, lsdiv_generator** out);
LSDIV_API void lsdiv_generator_destroy(lsdiv_generator* gen);
LSDIV_API const char* lsdiv_generator_name(const lsdiv_generator* gen);
LSDIV_API lsdiv_status lsdiv_generator_eval(const lsdiv_generator* gen, double u, double* out);

/* Quadrature configuration. A null config means the defaults. */
LSDIV_API lsdiv_status lsdiv_config_create(lsdiv_config** out);
LSDIV_API void lsdiv_config_destroy(lsdiv_config* cfg);
LSDIV_API lsdiv_status lsdiv_config_set_abs_tol(lsdiv_config* cfg, double v);
LSDIV_API lsdiv_status lsdiv_config_set_rel_tol(lsdiv_config* cfg, double v);
LSDIV_API lsdiv_status lsdiv_config_set_max_depth(lsdiv_config* cfg, int v);

/* Evaluation. flags: 0 or LSDIV_VERIFY. */
LSDIV_API lsdiv_status lsdiv_entropy(const lsdiv_density* p, const lsdiv_config* cfg,
                                     unsigned flags, lsdiv_result* out);
LSDIV_API lsdiv_status lsdiv_cross_entropy(const lsdiv_density* p, const lsdiv_density* q,
                                           const lsdiv_config* cfg, unsigned flags,
                                           lsdiv_result* out);
LSDIV_API lsdiv_status lsdiv_kl(const lsdiv_density* p, const lsdiv_density* q,
                                const lsdiv_config* cfg, unsigned flags, lsdiv_result* out);
LSDIV_API lsdiv_status lsdiv_fdiv(const lsdiv_generator* gen, const lsdiv_density* p,
                                  const lsdiv_density* q, const lsdiv_config* cfg, unsigned flags,
                                  lsdiv_result* out);

/* Reduced parameters: right = ((l2-l1)/s1, s2/s1), left = ((l1-l2)/s2, s1/s2). */
LSDIV_API lsdiv_status lsdiv_reduce(const lsdiv_density* p, const lsdiv_density* q,
                                    double right[2], double left[2]);

/* Projection of `query` onto the location-scale family `family`. With
 * LSDIV_SIDE_RIGHT the family member is the second argument of the
 * divergence, with LSDIV_SIDE_LEFT the first. gen may be null for KL. */
LSDIV_API lsdiv_status lsdiv_project(const lsdiv_density* query, const char* family,
                                     const lsdiv_generator* gen, lsdiv_side side,
                                     const lsdiv_config* cfg, lsdiv_projection* out);

/* Symmetry conditions */
LSDIV_API lsdiv_status lsdiv_location_symmetry_defect(const char* family, double l,
                                                      const lsdiv_config* cfg, double* out);
LSDIV_API lsdiv_status lsdiv_scale_symmetry_defect(const char* family, double s,
                                                   const lsdiv_config* cfg, double* out);
LSDIV_API lsdiv_status lsdiv_fdiv_symmetry_defect(const lsdiv_generator* gen,
                                                  const lsdiv_density* p, const lsdiv_density* q,
                                                  const lsdiv_config* cfg, lsdiv_symmetry* out);

/* Closed forms */
LSDIV_API lsdiv_status lsdiv_cauchy_kl(double l1, double s1, double l2, double s2, double* out);
LSDIV_API lsdiv_status lsdiv_cauchy_scale_cross_entropy(double s1, double s2, double* out);
LSDIV_API lsdiv_status lsdiv_cauchy_scale_kl(double s1, double s2, double* out);
LSDIV_API lsdiv_status lsdiv_halfnormal_exp_kl(double s1, double s2, double* out);
LSDIV_API lsdiv_status lsdiv_log_integral_a(double a, double b, double* out);

/* Verification batteries: suite is identities, symmetry, closed-forms,
 * projection or all. */
LSDIV_API lsdiv_status lsdiv_check_run(const char* suite, size_t trials, uint64_t seed,
                                       const lsdiv_config* cfg, lsdiv_check_report** out);
LSDIV_API void lsdiv_check_report_destroy(lsdiv_check_report* report);
LSDIV_API size_t lsdiv_check_report_size(const lsdiv_check_report* report);
LSDIV_API lsdiv_status lsdiv_check_report_item(const lsdiv_check_report* report, size_t index,
                                               lsdiv_check_item* out);
LSDIV_API int lsdiv_check_report_passed(const lsdiv_check_report* report);

#ifdef __cplusplus
}
#endif

#endif /* LSDIV_H */
