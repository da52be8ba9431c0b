#include "wvlab/shifts.hpp"

#include <cmath>
#include <limits>

#include "wvlab/nonclassicality.hpp"
#include "wvlab/parallel.hpp"

namespace wvlab {

namespace {

double probe(double s) { return s > 0.0 ? s : kWeakProbe; }

RegimeLimits spssv_limits(const SpssvConfig& c) {
    const cplx w = weak_value(c.sel);
    const double r = c.sq.r, th = c.sq.theta;
    RegimeLimits l;
    l.weak_dX = w.real() + 1.5 * std::sin(th) * std::sinh(2.0 * r) * w.imag();
    l.weak_dP = 1.5 * (std::cosh(2.0 * r) - std::cos(th) * std::sinh(2.0 * r)) * w.imag();
    l.strong_dX = abl_conditional(c.sel);
    return l;
}

RegimeLimits tmsv_limits(const TmsvConfig& c) {
    const cplx w = weak_value(c.sel);
    const double eta = c.sq.eta;
    RegimeLimits l;
    l.weak_dX = 0.5 * w.real();
    l.weak_dP = -std::exp(eta) * std::sinh(eta) * w.imag();
    l.strong_dX = abl_conditional(c.sel);
    return l;
}

}  // namespace

cplx h1_weak_closed(double s, SqueezeParams p) {
    const double ch = std::cosh(p.r);
    return 3.0 * s * (0.5 * (1.0 + std::polar(std::sinh(2.0 * p.r), p.theta)) - ch * ch);
}

ShiftReport pointer_shifts_spssv_closed(const SpssvConfig& c) {
    SpssvConfig q = c;
    q.s = probe(c.s);
    const cplx a = expectations_closed_spssv(q).a;
    ShiftReport rep;
    rep.dX_over_g = rep.dP_sigma2_over_g = std::numeric_limits<double>::quiet_NaN();
    rep.closed_dX_over_g = 2.0 * a.real() / q.s;
    rep.closed_dP_sigma2_over_g = a.imag() / q.s;
    rep.regime_limits = spssv_limits(c);
    return rep;
}

ShiftReport pointer_shifts_spssv(const SpssvConfig& c, OracleOptions opt) {
    ShiftReport rep = pointer_shifts_spssv_closed(c);
    SpssvConfig q = c;
    q.s = probe(c.s);
    const cplx a = expectations_oracle(final_pointer_spssv(q, opt)).a;
    rep.dX_over_g = 2.0 * a.real() / q.s;
    rep.dP_sigma2_over_g = a.imag() / q.s;
    return rep;
}

std::pair<cplx, cplx> lambda12(const TmsvConfig& c) {
    const cplx w = weak_value(c.sel);
    const double k = overlap_K(c.s, c.sq);
    const double kk = std::pow(kappa_closed(c), 2);
    const double eta = c.sq.eta;
    const cplx l1 = 0.5 * c.s * kk * cplx(w.real(), -w.imag() * std::cosh(2.0 * eta) * k);
    const cplx l2 = 0.5 * c.s * kk * cplx(w.real(), -w.imag() * (std::sinh(2.0 * eta) - 1.0) * k);
    return {l1, l2};
}

std::pair<cplx, cplx> lambda12_oracle(const TmsvConfig& c, OracleOptions opt) {
    const CMatrix m = final_pointer_tmsv(c, opt).as_matrix();
    const CMatrix a = annihilation_matrix(opt.truncation).m;
    const CMatrix id = CMatrix::Identity(opt.truncation, opt.truncation);
    return {expectation_two(m, a, id), expectation_two(m, id, a)};
}

ShiftReport pointer_shifts_tmsv_closed(const TmsvConfig& c) {
    TmsvConfig q = c;
    q.s = probe(c.s);
    const auto [l1, l2] = lambda12(q);
    ShiftReport rep;
    rep.dX_over_g = rep.dP_sigma2_over_g = std::numeric_limits<double>::quiet_NaN();
    rep.closed_dX_over_g = 2.0 * (l1 + l2).real() / q.s;
    rep.closed_dP_sigma2_over_g = (l1 + l2).imag() / q.s;
    rep.regime_limits = tmsv_limits(c);
    return rep;
}

ShiftReport pointer_shifts_tmsv(const TmsvConfig& c, OracleOptions opt) {
    ShiftReport rep = pointer_shifts_tmsv_closed(c);
    TmsvConfig q = c;
    q.s = probe(c.s);
    const auto [a, b] = lambda12_oracle(q, opt);
    rep.dX_over_g = 2.0 * (a + b).real() / q.s;
    rep.dP_sigma2_over_g = (a + b).imag() / q.s;
    return rep;
}

std::vector<SweepRow> transition_sweep(const std::vector<Selection>& sels, const std::vector<double>& s_grid,
                                       SqueezeParams p, OracleOptions opt, unsigned threads) {
    if (sels.empty() || s_grid.empty()) throw Error(Errc::config, "sweep grids must be non-empty");
    std::vector<SweepRow> rows(sels.size() * s_grid.size());
    parallel_for(rows.size(), threads ? threads : default_threads(), [&](std::size_t i) {
        const SpssvConfig c{sels[i / s_grid.size()], s_grid[i % s_grid.size()], p};
        const ShiftReport sh = pointer_shifts_spssv(c, opt);
        rows[i] = {c.sel.alpha, c.sel.delta,          c.s, sh.dX_over_g, sh.dP_sigma2_over_g,
                   transition_value_spssv(c), success_prob_spssv_closed(c)};
    });
    return rows;
}

std::vector<SweepRow> transition_sweep_tmsv(const std::vector<Selection>& sels, const std::vector<double>& s_grid,
                                            TwoModeSqueezeParams p, OracleOptions opt, unsigned threads) {
    if (sels.empty() || s_grid.empty()) throw Error(Errc::config, "sweep grids must be non-empty");
    std::vector<SweepRow> rows(sels.size() * s_grid.size());
    parallel_for(rows.size(), threads ? threads : default_threads(), [&](std::size_t i) {
        const TmsvConfig c{sels[i / s_grid.size()], s_grid[i % s_grid.size()], p};
        const ShiftReport sh = pointer_shifts_tmsv(c, opt);
        rows[i] = {c.sel.alpha, c.sel.delta,          c.s, sh.dX_over_g, sh.dP_sigma2_over_g,
                   transition_value_tmsv(c), success_prob_tmsv_closed(c)};
    });
    return rows;
}

}  // namespace wvlab
