/* condex - conditional-expectation function approximation over max-product
 * kernel densities, with an infinite square-well eigenstate toolkit.
 *
 * All entry points return a cx_status; outputs travel through pointers.
 * Handles are opaque and freed with their matching cx_*_free call (NULL is
 * accepted). On failure cx_last_error() describes the problem for the
 * calling thread.
 */
#ifndef CONDEX_CONDEX_H
#define CONDEX_CONDEX_H

#include <stddef.h>

#if defined(_WIN32)
#  define CONDEX_API __declspec(dllexport)
#else
#  define CONDEX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cx_status {
  CX_OK = 0,
  CX_ERROR_INVALID_ARGUMENT = 1, /* bad handle, range, size or mode */
  CX_ERROR_DOMAIN = 2,           /* point outside the defined domain */
  CX_ERROR_PARSE = 3,            /* malformed expression source */
  CX_ERROR_NUMERIC = 4           /* degenerate construction or evaluation */
} cx_status;

CONDEX_API const char* cx_status_name(cx_status status);

/* Message for the most recent failure on this thread; empty if none. */
CONDEX_API const char* cx_last_error(void);

/* ------------------------------------------------------------------ */
/* Scalar functions                                                   */
/* ------------------------------------------------------------------ */

typedef struct cx_function cx_function;

typedef double (*cx_real_fn)(double x, void* user);

CONDEX_API cx_status cx_function_from_callback(cx_real_fn fn, void* user, cx_function** out);

/* Grammar: literals, x, + - * / ^ (right associative), parentheses,
 * sin, cos, exp, sqrt, pi. Parse failures report the byte offset. */
CONDEX_API cx_status cx_function_from_expression(const char* source, cx_function** out);

/* coeffs[0] + coeffs[1] x + ... + coeffs[count-1] x^(count-1) */
CONDEX_API cx_status cx_function_polynomial(const double* coeffs, size_t count, cx_function** out);

/* Launch trajectory x tan(alpha) - g / (2 v0^2 cos^2 alpha) x^2. */
CONDEX_API cx_status cx_function_projectile(double alpha, double v0, double g, cx_function** out);

CONDEX_API cx_status cx_function_constant(double value, cx_function** out);
CONDEX_API cx_status cx_function_identity(cx_function** out);

CONDEX_API cx_status cx_function_eval(const cx_function* f, double x, double* out);
CONDEX_API void cx_function_free(cx_function* f);

/* ------------------------------------------------------------------ */
/* Approximants                                                       */
/* ------------------------------------------------------------------ */

typedef enum cx_family {
  CX_FAMILY_TRIANGULAR = 0, /* piecewise-linear base functions */
  CX_FAMILY_TRIG = 1        /* raised-trigonometric base functions, 2n cells */
} cx_family;

typedef enum cx_mode {
  CX_MODE_DEFAULT = 0,     /* triangular -> closed form, trig -> quadrature */
  CX_MODE_QUADRATURE = 1,  /* ratio of Y-slice integrals of the kernel */
  CX_MODE_CLOSED_FORM = 2, /* normalized interpolation weights (triangular) */
  CX_MODE_CONSTANT = 3     /* reported when every sampled value is equal */
} cx_mode;

typedef struct cx_approximant cx_approximant;

/* Builds the order-n approximant of f on [lo, hi]. For the trig family the
 * grid carries 2n cells (n is the quantum number). panels_per_cell must be
 * even and >= 2; 64 is the recommended default. */
CONDEX_API cx_status cx_approximant_build(const cx_function* f, double lo, double hi, unsigned n,
                                          cx_family family, cx_mode mode, unsigned panels_per_cell,
                                          cx_approximant** out);

CONDEX_API cx_status cx_approximant_eval(const cx_approximant* appx, double x, double* out);

typedef struct cx_approximant_info {
  unsigned n;           /* build parameter */
  unsigned cells;       /* grid cells: n (triangular) or 2n (trig) */
  cx_family family;
  cx_mode mode;         /* resolved mode, never CX_MODE_DEFAULT */
  double lo, hi;        /* X interval */
  double y_min, y_max;  /* sampled value range */
  double normalization; /* H; NaN unless quadrature mode */
  double beta;          /* constant level; NaN unless constant mode */
} cx_approximant_info;

CONDEX_API cx_status cx_approximant_get_info(const cx_approximant* appx, cx_approximant_info* out);

typedef struct cx_error_report {
  unsigned n;
  double sup_error;         /* sup |f_n - f| over the probe grid */
  double bound_3dy;         /* 3 * max sorted gap of the node values */
  unsigned probe_count;
  double max_node_residual; /* max |f_n(x_i) - y_i| over the grid nodes */
} cx_error_report;

CONDEX_API cx_status cx_approximant_error_report(const cx_approximant* appx, const cx_function* f,
                                                 unsigned probes, cx_error_report* out);

/* sup |E(y|x) - f(x)|; requires quadrature mode or the constant path. */
CONDEX_API cx_status cx_approximant_residual_sup(const cx_approximant* appx, const cx_function* f,
                                                 unsigned probes, double* out);

/* Kernel surface R(x, y); quadrature mode only. */
CONDEX_API cx_status cx_approximant_kernel_value(const cx_approximant* appx, double x, double y, double* out);

/* Density p(x, y) = R / H inside the support, 0 outside; quadrature mode. */
CONDEX_API cx_status cx_approximant_density_value(const cx_approximant* appx, double x, double y, double* out);

/* Samples p at the centers of a res_x-by-res_y cover of X x [y_min, y_max].
 * out receives res_x * res_y values, row-major with rows following x. */
CONDEX_API cx_status cx_approximant_density_grid(const cx_approximant* appx, size_t res_x, size_t res_y,
                                                 double* out);

CONDEX_API void cx_approximant_free(cx_approximant* appx);

typedef struct cx_study_row {
  unsigned n;
  double sup_error;
  double bound_3dy;
  double residual_sup;
} cx_study_row;

/* One row per entry of ns, all rows sharing the probe resolution. */
CONDEX_API cx_status cx_convergence_study(const cx_function* f, double lo, double hi, const unsigned* ns,
                                          size_t count, cx_family family, cx_mode mode,
                                          unsigned panels_per_cell, unsigned probes, cx_study_row* rows);

/* ------------------------------------------------------------------ */
/* Node ordering diagnostics                                          */
/* ------------------------------------------------------------------ */

/* d = max adjacent gap after sorting, e = max adjacent |difference| in the
 * given order; d <= e always holds. Needs count >= 2. */
CONDEX_API cx_status cx_gap_report(const double* values, size_t count, double* d, double* e);

/* ------------------------------------------------------------------ */
/* Infinite square-well toolkit                                       */
/* ------------------------------------------------------------------ */

CONDEX_API cx_status cx_well_adam(unsigned n, double x, double* out);   /* sqrt(2) sin(n pi x) */
CONDEX_API cx_status cx_well_eve(unsigned n, double x, double* out);    /* sqrt(2) cos(n pi x) */
CONDEX_API cx_status cx_well_complex(unsigned n, double x, double* re, double* im);
CONDEX_API cx_status cx_well_energy(unsigned n, double scale, double* out); /* n^2 * scale */
CONDEX_API cx_status cx_well_duality(unsigned n, double* nu, double* lambda, double* product);
CONDEX_API cx_status cx_well_local_ground(double lo, double hi, double y, double* adam_sq, double* eve_sq);

#ifdef __cplusplus
}
#endif

#endif /* CONDEX_CONDEX_H */
