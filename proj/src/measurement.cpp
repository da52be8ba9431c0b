#include "wvlab/measurement.hpp"

#include <cmath>

namespace wvlab {

namespace {

void validate(Selection sel) {
    if (std::abs(std::cos(0.5 * sel.alpha)) < 1e-12)
        throw Error(Errc::orthogonal_selection, "post-selection orthogonal to pre-selection");
}

void validate(double s) {
    if (!(s >= 0.0)) throw Error(Errc::domain, "coupling s must be non-negative");
}

double denom(cplx w, double overlap) {
    const double w2 = std::norm(w);
    return 1.0 + w2 + (1.0 - w2) * overlap;
}

Operator half_shift(double s, OracleOptions opt) {
    return displacement_matrix(0.5 * s, opt.truncation, {opt.force});
}

cplx sigma_closed(cplx w, double overlap) {
    return 2.0 * cplx(w.real(), w.imag() * overlap) / denom(w, overlap);
}

}  // namespace

cplx weak_value(Selection sel) {
    validate(sel);
    return std::polar(std::tan(0.5 * sel.alpha), sel.delta);
}

double abl_conditional(Selection sel) { return std::cos(sel.delta) * std::sin(sel.alpha); }

double overlap_P(double s, SqueezeParams p) {
    const cplx beta = -s * (std::cosh(p.r) - std::polar(std::sinh(p.r), p.theta));
    const double b2 = std::norm(beta);
    return (1.0 - b2) * std::exp(-0.5 * b2);
}

double overlap_K(double s, TwoModeSqueezeParams p) {
    return std::exp(-0.5 * s * s * std::cosh(2.0 * p.eta));
}

cplx overlap_P_oracle(double s, SqueezeParams p, OracleOptions opt) {
    const StateVector phi = spssv(p, opt.truncation);
    return expectation(phi, displacement_matrix(s, opt.truncation, {opt.force}));
}

cplx overlap_K_oracle(double s, TwoModeSqueezeParams p, OracleOptions opt) {
    const CMatrix psi = tmsv_matrix(p, opt.truncation);
    const CMatrix d = displacement_matrix(s, opt.truncation, {opt.force}).m;
    return (psi.conjugate().cwiseProduct(d * psi)).sum();
}

double lambda_closed(const SpssvConfig& c) {
    return std::sqrt(0.5 / denom(weak_value(c.sel), overlap_P(c.s, c.sq)));
}

double kappa_closed(const TmsvConfig& c) {
    return std::sqrt(2.0 / denom(weak_value(c.sel), overlap_K(c.s, c.sq)));
}

CVector pointer_bracket_spssv(const SpssvConfig& c, OracleOptions opt) {
    validate(c.s);
    const cplx w = weak_value(c.sel);
    const CVector phi = spssv(c.sq, opt.truncation).amplitudes();
    const CMatrix d = half_shift(c.s, opt).m;
    return (1.0 + w) * (d * phi) + (1.0 - w) * (d.adjoint() * phi);
}

CMatrix pointer_bracket_tmsv(const TmsvConfig& c, OracleOptions opt) {
    validate(c.s);
    const cplx w = weak_value(c.sel);
    const CMatrix psi = tmsv_matrix(c.sq, opt.truncation);
    const CMatrix d = half_shift(c.s, opt).m;
    return (1.0 + w) * (d * psi) + (1.0 - w) * (d.adjoint() * psi);
}

StateVector final_pointer_spssv(const SpssvConfig& c, OracleOptions opt) {
    const CVector b = pointer_bracket_spssv(c, opt);
    if (b.norm() < 1e-14) throw Error(Errc::degenerate_selection, "post-selection annihilates the pointer");
    return StateVector(1, opt.truncation, b / b.norm());
}

StateVector final_pointer_tmsv(const TmsvConfig& c, OracleOptions opt) {
    const CMatrix b = pointer_bracket_tmsv(c, opt);
    if (b.norm() < 1e-14) throw Error(Errc::degenerate_selection, "post-selection annihilates the pointer");
    return StateVector::from_matrix(b / b.norm());
}

double success_prob_spssv_closed(const SpssvConfig& c) {
    const double c2 = std::pow(std::cos(0.5 * c.sel.alpha), 2);
    return 0.5 * c2 * denom(weak_value(c.sel), overlap_P(c.s, c.sq));
}

double success_prob_tmsv_closed(const TmsvConfig& c) {
    const double c2 = std::pow(std::cos(0.5 * c.sel.alpha), 2);
    return 0.5 * c2 * denom(weak_value(c.sel), overlap_K(c.s, c.sq));
}

MetricReport success_prob_spssv(const SpssvConfig& c, OracleOptions opt) {
    const double c2 = std::pow(std::cos(0.5 * c.sel.alpha), 2);
    const double oracle = 0.25 * c2 * pointer_bracket_spssv(c, opt).squaredNorm();
    return make_report(success_prob_spssv_closed(c), oracle);
}

MetricReport success_prob_tmsv(const TmsvConfig& c, OracleOptions opt) {
    const double c2 = std::pow(std::cos(0.5 * c.sel.alpha), 2);
    const double oracle = 0.25 * c2 * pointer_bracket_tmsv(c, opt).squaredNorm();
    return make_report(success_prob_tmsv_closed(c), oracle);
}

MetricReport lambda_report(const SpssvConfig& c, OracleOptions opt) {
    return make_report(lambda_closed(c), 1.0 / pointer_bracket_spssv(c, opt).norm());
}

MetricReport kappa_report(const TmsvConfig& c, OracleOptions opt) {
    return make_report(kappa_closed(c), 2.0 / pointer_bracket_tmsv(c, opt).norm());
}

cplx transition_value_spssv(const SpssvConfig& c) {
    validate(c.s);
    return sigma_closed(weak_value(c.sel), overlap_P(c.s, c.sq));
}

cplx transition_value_tmsv(const TmsvConfig& c) {
    validate(c.s);
    return sigma_closed(weak_value(c.sel), overlap_K(c.s, c.sq));
}

cplx transition_value_tmsv_uncorrected(const TmsvConfig& c) {
    const cplx w = weak_value(c.sel);
    const double k = overlap_K(c.s, c.sq);
    return 2.0 * w * k / denom(w, k);
}

cplx transition_value_spssv_oracle(const SpssvConfig& c, OracleOptions opt) {
    validate(c.s);
    const cplx w = weak_value(c.sel);
    const CVector phi = spssv(c.sq, opt.truncation).amplitudes();
    const CMatrix d = half_shift(c.s, opt).m;
    const CVector plus = d * phi;
    const CVector minus = d.adjoint() * phi;
    const CVector tilde = (1.0 + w) * plus + (1.0 - w) * minus;
    const CVector prime = (1.0 + w) * plus - (1.0 - w) * minus;
    return tilde.dot(prime) / tilde.squaredNorm();
}

cplx transition_value_tmsv_oracle(const TmsvConfig& c, OracleOptions opt) {
    validate(c.s);
    const cplx w = weak_value(c.sel);
    const CMatrix psi = tmsv_matrix(c.sq, opt.truncation);
    const CMatrix d = half_shift(c.s, opt).m;
    const CMatrix plus = d * psi;
    const CMatrix minus = d.adjoint() * psi;
    const CMatrix tilde = (1.0 + w) * plus + (1.0 - w) * minus;
    const CMatrix prime = (1.0 + w) * plus - (1.0 - w) * minus;
    return (tilde.conjugate().cwiseProduct(prime)).sum() / tilde.squaredNorm();
}

}  // namespace wvlab
