#ifndef WVLAB_H
#define WVLAB_H

#include <stddef.h>

#if defined(WVLAB_BUILDING)
#define WVLAB_API __attribute__((visibility("default")))
#else
#define WVLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wv_status {
    WV_OK = 0,
    WV_ERR_INVALID_TRUNCATION = 1,
    WV_ERR_TRUNCATION_RISK = 2,
    WV_ERR_DOMAIN = 3,
    WV_ERR_DIMENSION = 4,
    WV_ERR_DEGENERATE_SELECTION = 5,
    WV_ERR_ORTHOGONAL_SELECTION = 6,
    WV_ERR_CONFIG = 7,
    WV_ERR_NULL_ARGUMENT = 8,
    WV_ERR_IO = 9,
    WV_ERR_INTERNAL = 10
} wv_status;

typedef struct wv_context wv_context;
typedef struct wv_grid wv_grid;
typedef struct wv_audit wv_audit;

typedef struct wv_spssv_params {
    double alpha, delta, s, r, theta;
} wv_spssv_params;

typedef struct wv_tmsv_params {
    double alpha, delta, s, eta, zeta;
} wv_tmsv_params;

typedef struct wv_metric {
    double closed_re, closed_im;
    double oracle_re, oracle_im;
    double abs_diff, rel_diff;
    int flag;
} wv_metric;

typedef struct wv_shifts {
    double dX_over_g, dP_sigma2_over_g;
    double closed_dX_over_g, closed_dP_sigma2_over_g;
    double weak_dX, weak_dP, strong_dX, strong_dP;
} wv_shifts;

typedef enum wv_engine { WV_ENGINE_ORACLE = 0, WV_ENGINE_CLOSED = 1 } wv_engine;

/* Coordinates: 0 Re mu1, 1 Im mu1, 2 Re mu2, 3 Im mu2. */
typedef struct wv_slice {
    int x_axis, y_axis;
    double pinned_first, pinned_second;
} wv_slice;

typedef struct wv_region {
    double x_min, x_max, y_min, y_max;
} wv_region;

WVLAB_API const char* wv_status_string(wv_status status);

/* Context: truncation per mode, displacement guard override, worker threads. */
WVLAB_API wv_status wv_context_create(wv_context** out);
WVLAB_API void wv_context_destroy(wv_context* ctx);
WVLAB_API wv_status wv_context_set_truncation(wv_context* ctx, int single_mode, int two_mode);
WVLAB_API wv_status wv_context_set_force(wv_context* ctx, int force);
WVLAB_API wv_status wv_context_set_threads(wv_context* ctx, unsigned threads);
/* With the oracle disabled, metrics carry NaN oracle fields and flag 0.
   AS squeezing and the audit need the oracle and return WV_ERR_CONFIG. */
WVLAB_API wv_status wv_context_set_oracle(wv_context* ctx, int enabled);
WVLAB_API const char* wv_context_last_error(const wv_context* ctx);

WVLAB_API wv_status wv_weak_value(double alpha, double delta, double* re, double* im);
WVLAB_API double wv_abl_conditional(double alpha, double delta);

WVLAB_API wv_status wv_success_prob_spssv(wv_context* ctx, const wv_spssv_params* p, wv_metric* out);
WVLAB_API wv_status wv_success_prob_tmsv(wv_context* ctx, const wv_tmsv_params* p, wv_metric* out);
WVLAB_API wv_status wv_transition_spssv(wv_context* ctx, const wv_spssv_params* p, wv_metric* out);
WVLAB_API wv_status wv_transition_tmsv(wv_context* ctx, const wv_tmsv_params* p, wv_metric* out);

WVLAB_API wv_status wv_skew_spssv(wv_context* ctx, const wv_spssv_params* p, wv_metric* out);
WVLAB_API wv_status wv_as_squeezing_spssv(wv_context* ctx, const wv_spssv_params* p, wv_metric* out);
WVLAB_API wv_status wv_sum_squeezing_tmsv(wv_context* ctx, const wv_tmsv_params* p, double big_theta,
                                          wv_metric* out);
/* Fills n_max + 1 entries of each non-null output array. */
WVLAB_API wv_status wv_photon_dist_spssv(wv_context* ctx, const wv_spssv_params* p, int n_max, double* oracle,
                                         double* closed);

WVLAB_API wv_status wv_shifts_spssv(wv_context* ctx, const wv_spssv_params* p, wv_shifts* out);
WVLAB_API wv_status wv_shifts_tmsv(wv_context* ctx, const wv_tmsv_params* p, wv_shifts* out);

WVLAB_API wv_status wv_q_single(wv_context* ctx, const wv_spssv_params* p, double mu_re, double mu_im,
                                wv_metric* out);
WVLAB_API wv_status wv_q_grid_single(wv_context* ctx, const wv_spssv_params* p, const wv_region* region,
                                     int resolution, wv_engine engine, wv_grid** out);
WVLAB_API wv_status wv_q_grid_two(wv_context* ctx, const wv_tmsv_params* p, const wv_slice* slice,
                                  const wv_region* region, int resolution, wv_engine engine, wv_grid** out);
WVLAB_API void wv_grid_destroy(wv_grid* grid);
WVLAB_API wv_status wv_grid_shape(const wv_grid* grid, int* nx, int* ny);
WVLAB_API const double* wv_grid_values(const wv_grid* grid);
WVLAB_API wv_status wv_grid_point(const wv_grid* grid, int i, int j, double* x, double* y);
WVLAB_API double wv_grid_integral(const wv_grid* grid);
WVLAB_API wv_status wv_grid_split(const wv_grid* grid, int* n_peaks, double* separation);
WVLAB_API wv_status wv_grid_write_csv(const wv_grid* grid, const char* path);
WVLAB_API wv_status wv_grid_write_binary(const wv_grid* grid, const char* path);

/* Closed-form vs oracle audit over alpha x s x squeeze at fixed delta.
   A null axis selects its default: alpha {pi/3, 2pi/3, 8pi/9}, s {0.3, 0.7, 1.5}, squeeze {0.1, 0.5, 1}. */
WVLAB_API wv_status wv_audit_run(wv_context* ctx, const double* alpha, size_t n_alpha, const double* s,
                                 size_t n_s, const double* squeeze, size_t n_squeeze, double delta,
                                 wv_audit** out);
WVLAB_API void wv_audit_destroy(wv_audit* audit);
WVLAB_API size_t wv_audit_count(const wv_audit* audit);
WVLAB_API size_t wv_audit_flag_count(const wv_audit* audit);
/* name points into the audit and stays valid until wv_audit_destroy. params receives alpha, delta, s, squeeze. */
WVLAB_API wv_status wv_audit_entry(const wv_audit* audit, size_t index, const char** name, double params[4],
                                   wv_metric* out);

#ifdef __cplusplus
}
#endif

#endif
