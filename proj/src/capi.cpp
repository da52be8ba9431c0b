#include "wvlab.h"

#include <fstream>
#include <limits>
#include <string>

#include "wvlab/audit.hpp"
#include "wvlab/husimi.hpp"
#include "wvlab/nonclassicality.hpp"
#include "wvlab/shifts.hpp"

struct wv_context {
    wvlab::OracleOptions single{80, false};
    wvlab::OracleOptions two{40, false};
    unsigned threads = 0;
    bool oracle = true;
    std::string last_error;
};

struct wv_grid {
    wvlab::PhaseGrid grid;
};

struct wv_audit {
    std::vector<wvlab::AuditEntry> entries;
};

namespace {

wv_status to_status(wvlab::Errc code) {
    switch (code) {
        case wvlab::Errc::invalid_truncation: return WV_ERR_INVALID_TRUNCATION;
        case wvlab::Errc::truncation_risk: return WV_ERR_TRUNCATION_RISK;
        case wvlab::Errc::domain: return WV_ERR_DOMAIN;
        case wvlab::Errc::dimension: return WV_ERR_DIMENSION;
        case wvlab::Errc::degenerate_selection: return WV_ERR_DEGENERATE_SELECTION;
        case wvlab::Errc::orthogonal_selection: return WV_ERR_ORTHOGONAL_SELECTION;
        case wvlab::Errc::config: return WV_ERR_CONFIG;
    }
    return WV_ERR_INTERNAL;
}

template <class Fn>
wv_status guarded(wv_context* ctx, Fn&& fn) {
    try {
        fn();
        if (ctx) ctx->last_error.clear();
        return WV_OK;
    } catch (const wvlab::Error& e) {
        if (ctx) ctx->last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        if (ctx) ctx->last_error = e.what();
        return WV_ERR_INTERNAL;
    }
}

wvlab::SpssvConfig spssv_of(const wv_spssv_params& p) { return {{p.alpha, p.delta}, p.s, {p.r, p.theta}}; }
wvlab::TmsvConfig tmsv_of(const wv_tmsv_params& p) { return {{p.alpha, p.delta}, p.s, {p.eta, p.zeta}}; }

void fill(const wvlab::MetricReport& r, wv_metric* out) {
    *out = {r.closed_form.real(), r.closed_form.imag(), r.oracle.real(), r.oracle.imag(),
            r.abs_diff,           r.rel_diff,           r.flag ? 1 : 0};
}

void fill(const wvlab::ShiftReport& r, wv_shifts* out) {
    *out = {r.dX_over_g,          r.dP_sigma2_over_g,         r.closed_dX_over_g,
            r.closed_dP_sigma2_over_g, r.regime_limits.weak_dX, r.regime_limits.weak_dP,
            r.regime_limits.strong_dX, r.regime_limits.strong_dP};
}

void fill_closed(std::complex<double> closed, wv_metric* out) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    *out = {closed.real(), closed.imag(), nan, nan, nan, nan, 0};
}

void require_oracle(const wv_context* ctx, const char* what) {
    if (!ctx->oracle) throw wvlab::Error(wvlab::Errc::config, std::string(what) + " needs the oracle");
}

wvlab::Region region_of(const wv_region* r) {
    return r ? wvlab::Region{r->x_min, r->x_max, r->y_min, r->y_max} : wvlab::Region{};
}

}  // namespace

extern "C" {

const char* wv_status_string(wv_status status) {
    switch (status) {
        case WV_OK: return "ok";
        case WV_ERR_INVALID_TRUNCATION: return "invalid truncation";
        case WV_ERR_TRUNCATION_RISK: return "truncation risk";
        case WV_ERR_DOMAIN: return "domain error";
        case WV_ERR_DIMENSION: return "dimension mismatch";
        case WV_ERR_DEGENERATE_SELECTION: return "degenerate post-selection";
        case WV_ERR_ORTHOGONAL_SELECTION: return "post-selection orthogonal to pre-selection";
        case WV_ERR_CONFIG: return "configuration error";
        case WV_ERR_NULL_ARGUMENT: return "null argument";
        case WV_ERR_IO: return "i/o error";
        case WV_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

wv_status wv_context_create(wv_context** out) {
    if (!out) return WV_ERR_NULL_ARGUMENT;
    *out = new (std::nothrow) wv_context{};
    return *out ? WV_OK : WV_ERR_INTERNAL;
}

void wv_context_destroy(wv_context* ctx) { delete ctx; }

wv_status wv_context_set_truncation(wv_context* ctx, int single_mode, int two_mode) {
    if (!ctx) return WV_ERR_NULL_ARGUMENT;
    if (single_mode < 4 || two_mode < 4) {
        ctx->last_error = "truncation must be at least 4 per mode";
        return WV_ERR_INVALID_TRUNCATION;
    }
    ctx->single.truncation = single_mode;
    ctx->two.truncation = two_mode;
    return WV_OK;
}

wv_status wv_context_set_force(wv_context* ctx, int force) {
    if (!ctx) return WV_ERR_NULL_ARGUMENT;
    ctx->single.force = ctx->two.force = force != 0;
    return WV_OK;
}

wv_status wv_context_set_threads(wv_context* ctx, unsigned threads) {
    if (!ctx) return WV_ERR_NULL_ARGUMENT;
    ctx->threads = threads;
    return WV_OK;
}

wv_status wv_context_set_oracle(wv_context* ctx, int enabled) {
    if (!ctx) return WV_ERR_NULL_ARGUMENT;
    ctx->oracle = enabled != 0;
    return WV_OK;
}

const char* wv_context_last_error(const wv_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

wv_status wv_weak_value(double alpha, double delta, double* re, double* im) {
    if (!re || !im) return WV_ERR_NULL_ARGUMENT;
    return guarded(nullptr, [&] {
        const auto w = wvlab::weak_value({alpha, delta});
        *re = w.real();
        *im = w.imag();
    });
}

double wv_abl_conditional(double alpha, double delta) { return wvlab::abl_conditional({alpha, delta}); }

wv_status wv_success_prob_spssv(wv_context* ctx, const wv_spssv_params* p, wv_metric* out) {
    if (!ctx || !p || !out) return WV_ERR_NULL_ARGUMENT;
    return guarded(ctx, [&] {
        const auto c = spssv_of(*p);
        if (!ctx->oracle) return fill_closed(wvlab::success_prob_spssv_closed(c), out);
        fill(wvlab::success_prob_spssv(c, ctx->single), out);
    });
}

wv_status wv_success_prob_tmsv(wv_context* ctx, const wv_tmsv_params* p, wv_metric* out) {
    if (!ctx || !p || !out) return WV_ERR_NULL_ARGUMENT;
    return guarded(ctx, [&] {
        const auto c = tmsv_of(*p);
        if (!ctx->oracle) return fill_closed(wvlab::success_prob_tmsv_closed(c), out);
        fill(wvlab::success_prob_tmsv(c, ctx->two), out);
    });
}

wv_status wv_transition_spssv(wv_context* ctx, const wv_spssv_params* p, wv_metric* out) {
    if (!ctx || !p || !out) return WV_ERR_NULL_ARGUMENT;
    return guarded(ctx, [&] {
        const auto c = spssv_of(*p);
        if (!ctx->oracle) return fill_closed(wvlab::transition_value_spssv(c), out);
        fill(wvlab::make_report(wvlab::transition_value_spssv(c), wvlab::transition_value_spssv_oracle(c, ctx->single)),
             out);
    });
}

wv_status wv_transition_tmsv(wv_context* ctx, const wv_tmsv_params* p, wv_metric* out) {
    if (!ctx || !p || !out) return WV_ERR_NULL_ARGUMENT;
    return guarded(ctx, [&] {
        const auto c = tmsv_of(*p);
        if (!ctx->oracle) return fill_closed(wvlab::transition_value_tmsv(c), out);
        fill(wvlab::make_report(wvlab::transition_value_tmsv(c), wvlab::transition_value_tmsv_oracle(c, ctx->two)),
             out);
    });
}

wv_status wv_skew_spssv(wv_context* ctx, const wv_spssv_params* p, wv_metric* out) {
    if (!ctx || !p || !out) return WV_ERR_NULL_ARGUMENT;
    return guarded(ctx, [&] {
        const auto c = spssv_of(*p);
        if (!ctx->oracle) return fill_closed(wvlab::skew_from(wvlab::expectations_closed_spssv(c)), out);
        fill(wvlab::skew_closed_spssv(c, ctx->single), out);
    });
}

wv_status wv_as_squeezing_spssv(wv_context* ctx, const wv_spssv_params* p, wv_metric* out) {
    if (!ctx || !p || !out) return WV_ERR_NULL_ARGUMENT;
    return guarded(ctx, [&] {
        require_oracle(ctx, "AS squeezing");
        fill(wvlab::as_squeezing_report(spssv_of(*p), ctx->single), out);
    });
}

wv_status wv_sum_squeezing_tmsv(wv_context* ctx, const wv_tmsv_params* p, double big_theta, wv_metric* out) {
    if (!ctx || !p || !out) return WV_ERR_NULL_ARGUMENT;
    return guarded(ctx, [&] {
        const auto c = tmsv_of(*p);
        if (!ctx->oracle)
            return fill_closed(wvlab::sum_squeezing_from(wvlab::expectations_closed_tmsv(c), big_theta), out);
        fill(wvlab::sum_closed(c, big_theta, ctx->two), out);
    });
}

wv_status wv_photon_dist_spssv(wv_context* ctx, const wv_spssv_params* p, int n_max, double* oracle,
                               double* closed) {
    if (!ctx || !p) return WV_ERR_NULL_ARGUMENT;
    if (n_max < 0) return WV_ERR_DOMAIN;
    return guarded(ctx, [&] {
        const auto c = spssv_of(*p);
        if (oracle && !ctx->oracle) {
            for (int n = 0; n <= n_max; ++n) oracle[n] = std::numeric_limits<double>::quiet_NaN();
        } else if (oracle) {
            const auto dist = wvlab::photon_dist_oracle(wvlab::final_pointer_spssv(c, ctx->single));
            for (int n = 0; n <= n_max; ++n) oracle[n] = n < static_cast<int>(dist.size()) ? dist[n] : 0.0;
        }
        if (closed) {
            const auto dist = wvlab::photon_dist_closed(c, n_max);
            for (int n = 0; n <= n_max; ++n) closed[n] = dist[n];
        }
    });
}

wv_status wv_shifts_spssv(wv_context* ctx, const wv_spssv_params* p, wv_shifts* out) {
    if (!ctx || !p || !out) return WV_ERR_NULL_ARGUMENT;
    return guarded(ctx, [&] {
        const auto c = spssv_of(*p);
        fill(ctx->oracle ? wvlab::pointer_shifts_spssv(c, ctx->single) : wvlab::pointer_shifts_spssv_closed(c), out);
    });
}

wv_status wv_shifts_tmsv(wv_context* ctx, const wv_tmsv_params* p, wv_shifts* out) {
    if (!ctx || !p || !out) return WV_ERR_NULL_ARGUMENT;
    return guarded(ctx, [&] {
        const auto c = tmsv_of(*p);
        fill(ctx->oracle ? wvlab::pointer_shifts_tmsv(c, ctx->two) : wvlab::pointer_shifts_tmsv_closed(c), out);
    });
}

wv_status wv_q_single(wv_context* ctx, const wv_spssv_params* p, double mu_re, double mu_im, wv_metric* out) {
    if (!ctx || !p || !out) return WV_ERR_NULL_ARGUMENT;
    return guarded(ctx, [&] {
        const auto c = spssv_of(*p);
        if (!ctx->oracle) return fill_closed(wvlab::q_single_closed(c, {mu_re, mu_im}), out);
        fill(wvlab::q_single(c, {mu_re, mu_im}, ctx->single), out);
    });
}

wv_status wv_q_grid_single(wv_context* ctx, const wv_spssv_params* p, const wv_region* region, int resolution,
                           wv_engine engine, wv_grid** out) {
    if (!ctx || !p || !out) return WV_ERR_NULL_ARGUMENT;
    *out = nullptr;
    return guarded(ctx, [&] {
        const auto e = engine == WV_ENGINE_CLOSED ? wvlab::Engine::closed : wvlab::Engine::oracle;
        *out = new wv_grid{
            wvlab::q_single_grid(spssv_of(*p), region_of(region), resolution, e, ctx->single, ctx->threads)};
    });
}

wv_status wv_q_grid_two(wv_context* ctx, const wv_tmsv_params* p, const wv_slice* slice, const wv_region* region,
                        int resolution, wv_engine engine, wv_grid** out) {
    if (!ctx || !p || !slice || !out) return WV_ERR_NULL_ARGUMENT;
    *out = nullptr;
    if (slice->x_axis < 0 || slice->x_axis > 3 || slice->y_axis < 0 || slice->y_axis > 3) return WV_ERR_CONFIG;
    return guarded(ctx, [&] {
        const wvlab::SliceSpec spec{static_cast<wvlab::Coord>(slice->x_axis), static_cast<wvlab::Coord>(slice->y_axis),
                                    slice->pinned_first, slice->pinned_second};
        const auto e = engine == WV_ENGINE_CLOSED ? wvlab::Engine::closed : wvlab::Engine::oracle;
        *out = new wv_grid{
            wvlab::q_two_slice(tmsv_of(*p), spec, region_of(region), resolution, e, ctx->two, ctx->threads)};
    });
}

void wv_grid_destroy(wv_grid* grid) { delete grid; }

wv_status wv_grid_shape(const wv_grid* grid, int* nx, int* ny) {
    if (!grid || !nx || !ny) return WV_ERR_NULL_ARGUMENT;
    *nx = grid->grid.nx;
    *ny = grid->grid.ny;
    return WV_OK;
}

const double* wv_grid_values(const wv_grid* grid) { return grid ? grid->grid.values.data() : nullptr; }

wv_status wv_grid_point(const wv_grid* grid, int i, int j, double* x, double* y) {
    if (!grid || !x || !y) return WV_ERR_NULL_ARGUMENT;
    if (i < 0 || j < 0 || i >= grid->grid.nx || j >= grid->grid.ny) return WV_ERR_DOMAIN;
    *x = grid->grid.x(i);
    *y = grid->grid.y(j);
    return WV_OK;
}

double wv_grid_integral(const wv_grid* grid) { return grid ? grid->grid.integral() : 0.0; }

wv_status wv_grid_split(const wv_grid* grid, int* n_peaks, double* separation) {
    if (!grid || !n_peaks || !separation) return WV_ERR_NULL_ARGUMENT;
    const auto r = wvlab::split_detector(grid->grid);
    *n_peaks = r.n_peaks;
    *separation = r.separation;
    return WV_OK;
}

wv_status wv_grid_write_csv(const wv_grid* grid, const char* path) {
    if (!grid || !path) return WV_ERR_NULL_ARGUMENT;
    std::ofstream f(path, std::ios::binary);
    if (!f) return WV_ERR_IO;
    wvlab::write_csv(grid->grid, f);
    return f ? WV_OK : WV_ERR_IO;
}

wv_status wv_grid_write_binary(const wv_grid* grid, const char* path) {
    if (!grid || !path) return WV_ERR_NULL_ARGUMENT;
    std::ofstream f(path, std::ios::binary);
    if (!f) return WV_ERR_IO;
    wvlab::write_binary(grid->grid, f);
    return f ? WV_OK : WV_ERR_IO;
}

wv_status wv_audit_run(wv_context* ctx, const double* alpha, size_t n_alpha, const double* s, size_t n_s,
                       const double* squeeze, size_t n_squeeze, double delta, wv_audit** out) {
    if (!ctx || !out) return WV_ERR_NULL_ARGUMENT;
    *out = nullptr;
    return guarded(ctx, [&] {
        require_oracle(ctx, "the audit");
        wvlab::AuditGrid g = wvlab::default_audit_grid();
        if (alpha) g.alpha.assign(alpha, alpha + n_alpha);
        if (s) g.s.assign(s, s + n_s);
        if (squeeze) g.squeeze.assign(squeeze, squeeze + n_squeeze);
        g.delta = delta;
        *out = new wv_audit{wvlab::run_audit(g, ctx->single, ctx->two, ctx->threads)};
    });
}

void wv_audit_destroy(wv_audit* audit) { delete audit; }

size_t wv_audit_count(const wv_audit* audit) { return audit ? audit->entries.size() : 0; }

size_t wv_audit_flag_count(const wv_audit* audit) {
    if (!audit) return 0;
    size_t n = 0;
    for (const auto& e : audit->entries) n += e.report.flag ? 1 : 0;
    return n;
}

wv_status wv_audit_entry(const wv_audit* audit, size_t index, const char** name, double params[4], wv_metric* out) {
    if (!audit || !name || !params || !out) return WV_ERR_NULL_ARGUMENT;
    if (index >= audit->entries.size()) return WV_ERR_DOMAIN;
    const auto& e = audit->entries[index];
    *name = e.quantity.c_str();
    params[0] = e.alpha;
    params[1] = e.delta;
    params[2] = e.s;
    params[3] = e.squeeze;
    fill(e.report, out);
    return WV_OK;
}

}  // extern "C"
