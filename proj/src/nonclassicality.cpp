#include "wvlab/nonclassicality.hpp"

#include <cmath>

namespace wvlab {

namespace {

void require_single(const StateVector& psi) {
    if (psi.modes() != 1) throw Error(Errc::dimension, "single-mode state required");
}

void require_two(const StateVector& psi) {
    if (psi.modes() != 2) throw Error(Errc::dimension, "two-mode state required");
}

}  // namespace

SingleModeExpectations expectations_closed_spssv(const SpssvConfig& c) {
    if (c.sq.r < kRMin) throw Error(Errc::domain, "squeeze parameter r below r_min");
    const cplx w = weak_value(c.sel);
    const double w2 = std::norm(w);
    const double s = c.s;
    const double r = c.sq.r;
    const double th = c.sq.theta;
    const cplx e = std::polar(1.0, th);
    const cplx em = std::polar(1.0, -th);
    const double ch = std::cosh(r), sh = std::sinh(r), ct = 1.0 / std::tanh(r);
    const double s2r = std::sinh(2.0 * r);
    const cplx b = -s * (ch - e * sh);
    const double bb = std::norm(b);
    const double ex = std::exp(-0.5 * bb);
    const double p = (1.0 - bb) * ex;
    const double lam2 = 0.5 / (1.0 + w2 + (1.0 - w2) * p);
    const cplx b2 = b * b, b3 = b2 * b, b4 = b2 * b2, b5 = b4 * b;
    const cplx em2 = em * em, em3 = em2 * em;

    const cplx h1 = (b * ch * (b2 * em * ct + 3.0) + 0.5 * s * (2.0 * b2 * em * ct - bb + 3.0)) * ex;
    const cplx h2 = (b2 * ch * ch * (b2 * em * ct + 6.0) + 1.5 * e * s2r -
                     2.0 * s * b * ch * (b2 * em * ct + 3.0) +
                     0.25 * s * s * (2.0 * b2 * em * ct - bb + 3.0)) *
                    ex;
    const cplx h3 =
        (b2 * em * (ct * ch * ch + 2.5 * s2r + b2 * em * ch * ch) + 1.0 + 3.0 * sh * sh +
         1.5 * s * b * em * ((ct + b2 * em) * ch + 3.0 * sh) + 0.5 * s * s * em * (ct + b2 * em) +
         0.5 * s * b * ch * (em * b2 * ct + 3.0) + 0.25 * s * s * (2.0 * b2 * em * ct - bb + 3.0)) *
        ex;
    const double h4 = (3.0 * sh * sh * (3.0 + 5.0 * sh * sh) +
                       0.5 * s * s * (1.5 * std::cos(th) * s2r + 2.0 * (1.0 + 3.0 * sh * sh)) +
                       std::pow(s, 4) / 16.0) *
                      ex;

    const cplx k1 = b2 * em * ch *
                        (b4 * em2 * sh * ch * ch + 3.0 * b2 * em * ch * (1.0 + 5.0 * sh * sh) +
                         9.0 * sh * (2.0 + 5.0 * sh * sh)) +
                    3.0 * sh * sh * (3.0 + 5.0 * sh * sh);
    const cplx k2 = b5 * em3 * sh * ch * ch + b3 * em2 * ch * (3.0 + 10.0 * sh * sh) +
                    3.0 * b * em * sh * (3.0 + 5.0 * sh * sh);
    const cplx k3 = em * (0.5 * b4 * em2 * s2r + 3.0 * b2 * em * std::cosh(2.0 * r) + 1.5 * s2r);
    const cplx k4 = b5 * em2 * ch * ch * ch + b3 * em * ch * ch * (ch * ct + 9.0 * sh) +
                    3.0 * b * ch * (ch * ch + 4.0 * sh * sh);
    const cplx k5 = b * em2 * (b2 * em * sh + 3.0 * ch);
    const cplx k6 = b * ch * (b2 * em * ct + 3.0);
    const cplx k7 = b2 * em * ct + 1.0;
    const cplx k8 = b2 * ch * ch * (b2 * em * ct + 6.0) + 1.5 * e * s2r;
    const cplx k9 = b2 * em * (ct * ch * ch + 5.0 * sh * ch + b2 * em * ch * ch) + 1.0 + 3.0 * sh * sh;
    const cplx k10 = b * em * (1.0 / sh + 3.0 * sh + b2 * em * ch);
    const cplx k11 = em * (ct + b2 * em);
    const cplx h5 = ((k1 + s * k2) + s * ((k2 + s * k3) + (k4 + s * k9)) +
                     0.25 * s * s * ((k3 + s * k5) + (k8 + s * k6) + 4.0 * (k9 + s * k10)) +
                     0.25 * s * s * s * ((k10 + s * k11) + (k6 + s * k7)) + std::pow(s, 4) / 16.0) *
                    ex;

    SingleModeExpectations out;
    out.a = 2.0 * lam2 * (w.real() * s - cplx(0.0, 1.0) * w.imag() * h1);
    out.a2 = 2.0 * lam2 * (0.5 * (1.0 + w2) * (3.0 * e * s2r + 0.5 * s * s) + (1.0 - w2) * h2.real());
    out.n = 2.0 * lam2 * ((1.0 + w2) * (1.0 + 3.0 * sh * sh + 0.25 * s * s) + (1.0 - w2) * h3.real());
    out.a2dag_a2 = 2.0 * lam2 * ((1.0 + w2) * h4 + 2.0 * (1.0 - w2) * h5.real());
    return out;
}

SingleModeExpectations expectations_oracle(const StateVector& psi) {
    require_single(psi);
    const CVector& v = psi.amplitudes();
    const CMatrix a = annihilation_matrix(psi.truncation()).m;
    const CVector av = a * v;
    const CVector a2v = a * av;
    SingleModeExpectations e;
    e.a = v.dot(av);
    e.a2 = v.dot(a2v);
    e.n = av.squaredNorm();
    e.a2dag_a2 = a2v.squaredNorm();
    return e;
}

cplx fourth_moment_oracle(const StateVector& psi) {
    require_single(psi);
    const CMatrix a = annihilation_matrix(psi.truncation()).m;
    const CVector& v = psi.amplitudes();
    return v.dot(a * (a * (a * (a * v))));
}

TwoModeExpectations expectations_closed_tmsv(const TmsvConfig& c) {
    const cplx w = weak_value(c.sel);
    const double w2 = std::norm(w);
    const double s = c.s, s2 = s * s, s4 = s2 * s2;
    const double eta = c.sq.eta;
    const double sh = std::sinh(eta), ch = std::cosh(eta), sh2 = std::sinh(2.0 * eta);
    const double c2e = std::cosh(2.0 * eta);
    const double k = overlap_K(s, c.sq);
    const double kk = 2.0 / (1.0 + w2 + (1.0 - w2) * k);

    TwoModeExpectations out;
    out.na = 0.5 * kk *
             ((1.0 + w2) * (sh * sh + 0.25 * s2) + (1.0 - w2) * (sh * sh * (1.0 - s2 * ch * ch) - 0.25 * s2) * k);
    out.nb = 0.5 * kk *
             ((1.0 + w2) * (sh * sh + 0.25 * s2) + (1.0 - w2) * (sh * sh * (1.0 - s2 * ch * ch) + 0.25 * s2) * k);
    out.ab = 0.25 * kk *
             ((1.0 - w2) * (sh2 * (1.0 - s2 * ch * ch) - s2 * (ch * ch - 0.5 * sh2 + 0.5)) * k +
              (1.0 + w2) * (sh2 + 0.5 * s2));

    const double j0 = sh * sh * c2e + s4 / 16.0 + 0.5 * s2 * sh * (sh + ch);
    const double j1 = sh * sh * c2e + 0.25 * s2 * sh2 * sh2 * (0.25 * s2 * sh2 * sh2 - 4.0 * sh * sh - 1.0);
    const double j2 = s * sh2 / 8.0 * (4.0 * c2e - s2 * sh2 * sh2);
    const double j3 = 0.5 * s * sh2 * sh * sh * (s2 * ch * ch - 2.0);
    const double j4 = sh * sh * (s2 * sh * sh * ch * ch - c2e);
    const double j5 = 0.25 * s * sh2 * sh2 * (2.0 - s2 * ch * ch);
    out.na_nb = 0.5 * kk *
                ((1.0 + w2) * j0 + (1.0 - w2) *
                                       (j1 - 0.5 * s * (j2 + j3 + j4 + j5) +
                                        0.25 * s2 * (2.0 * sh * sh * (1.0 - s2 * ch * ch) + sh2) - s4 / 16.0) *
                                       k);

    const double g0 = 0.25 * sh2 * sh2 * (s4 * std::pow(ch, 4) - 4.0 * s2 * ch * ch + 2.0) * k;
    const double g1 = 0.5 * s * sh2 * ch * ch * (2.0 - s2 * ch * ch) * k;
    const double g2 = k * s2 * std::pow(ch, 4);
    const double g3 = 0.25 * k * s2 * sh2 * sh2;
    const double g4 = 0.5 * sh2 * (1.0 - s2 * ch * ch) * k;
    out.a2b2 = 0.5 * kk *
               ((1.0 + w2) * 0.5 * (sh2 * (1.0 + s2) + s4 / 8.0) +
                (1.0 - w2) * (g0 - s * (g1 + j5) + 0.25 * s2 * (g2 + g3 + 4.0 * g4) -
                              0.25 * s4 * (ch * (ch - sh) + 0.25) * k));
    return out;
}

TwoModeExpectations expectations_oracle_two(const StateVector& psi) {
    require_two(psi);
    const int n = psi.truncation();
    const CMatrix m = psi.as_matrix();
    const CMatrix a = annihilation_matrix(n).m;
    const CMatrix num = number_matrix(n).m;
    const CMatrix id = CMatrix::Identity(n, n);
    TwoModeExpectations e;
    e.na = expectation_two(m, num, id).real();
    e.nb = expectation_two(m, id, num).real();
    e.ab = expectation_two(m, a, a);
    e.na_nb = expectation_two(m, num, num).real();
    e.a2b2 = expectation_two(m, a * a, a * a);
    return e;
}

double skew_from(const SingleModeExpectations& e) { return 0.5 + e.n - std::norm(e.a); }

double skew_information(const StateVector& psi) { return skew_from(expectations_oracle(psi)); }

double skew_closed_s0(SqueezeParams p) { return 3.0 * (0.5 + std::pow(std::sinh(p.r), 2)); }

MetricReport skew_closed_spssv(const SpssvConfig& c, OracleOptions opt) {
    return make_report(skew_from(expectations_closed_spssv(c)),
                       skew_information(final_pointer_spssv(c, opt)));
}

double as_squeezing(const SingleModeExpectations& e, cplx a4) {
    const double y_min = e.a2dag_a2 - std::norm(e.a2) - std::abs(a4 - e.a2 * e.a2);
    return y_min / (2.0 * e.n + 1.0);
}

double as_squeezing_state(const StateVector& psi) {
    return as_squeezing(expectations_oracle(psi), fourth_moment_oracle(psi));
}

double as_closed_s0(SqueezeParams p) {
    const double sh = std::sinh(p.r);
    return (sh * sh * (3.0 + 5.0 * sh * sh) -
            1.25 * std::exp(-2.0 * p.theta) * std::pow(std::sinh(2.0 * p.r), 2)) /
           std::cosh(2.0 * p.r);
}

MetricReport as_squeezing_report(const SpssvConfig& c, OracleOptions opt) {
    const StateVector phi = final_pointer_spssv(c, opt);
    const cplx a4 = fourth_moment_oracle(phi);
    return make_report(as_squeezing(expectations_closed_spssv(c), a4),
                       as_squeezing(expectations_oracle(phi), a4));
}

double sum_squeezing_from(const TwoModeExpectations& e, double big_theta) {
    const double cross = (std::polar(1.0, -big_theta) * e.ab).real();
    const double num = (std::polar(1.0, -2.0 * big_theta) * e.a2b2).real() - 2.0 * cross * cross + e.na_nb;
    return 2.0 * num / (e.na + e.nb + 1.0);
}

double sum_squeezing(const StateVector& psi2, double big_theta) {
    require_two(psi2);
    const int n = psi2.truncation();
    const CMatrix m = psi2.as_matrix();
    const CMatrix a = annihilation_matrix(n).m;
    const CMatrix num = number_matrix(n).m;
    const CMatrix id = CMatrix::Identity(n, n);
    // V = (e^{i Theta} a^dag b^dag + e^{-i Theta} a b) / 2 applied on the amplitude matrix.
    const CMatrix ab_psi = a * m * a.transpose();
    const CMatrix adbd_psi = a.adjoint() * m * a.adjoint().transpose();
    const CMatrix v_psi = 0.5 * (std::polar(1.0, big_theta) * adbd_psi + std::polar(1.0, -big_theta) * ab_psi);
    const double mean_v = (m.conjugate().cwiseProduct(v_psi)).sum().real();
    const double mean_v2 = v_psi.squaredNorm();
    const double n_sum = expectation_two(m, num, id).real() + expectation_two(m, id, num).real();
    return 4.0 * (mean_v2 - mean_v * mean_v) / (n_sum + 1.0) - 1.0;
}

double sum_closed_s0(TwoModeSqueezeParams p, double big_theta) {
    const double sh2 = std::pow(std::sinh(p.eta), 2);
    const double c = std::cos(big_theta);
    return std::pow(std::sinh(2.0 * p.eta), 2) * (std::cos(2.0 * big_theta) - c * c) / (1.0 + 2.0 * sh2) +
           2.0 * sh2;
}

MetricReport sum_closed(const TmsvConfig& c, double big_theta, OracleOptions opt) {
    return make_report(sum_squeezing_from(expectations_closed_tmsv(c), big_theta),
                       sum_squeezing(final_pointer_tmsv(c, opt), big_theta));
}

std::vector<double> photon_dist_oracle(const StateVector& psi) {
    require_single(psi);
    std::vector<double> p(static_cast<std::size_t>(psi.truncation()));
    for (int k = 0; k < psi.truncation(); ++k) p[k] = std::norm(psi[k]);
    return p;
}

std::vector<double> photon_dist_closed(const SpssvConfig& c, int n_max) {
    if (n_max < 0) throw Error(Errc::domain, "n_max must be non-negative");
    const cplx w = weak_value(c.sel);
    const double lam = lambda_closed(c);
    const double h = 0.5 * c.s;
    const double x = h * h;
    std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        const double base = std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(2.0 * n + 2.0)) - 0.5 * x) *
                            laguerre_assoc(n, n + 1, x);
        const double i_plus = base * std::pow(-h, n + 1);
        const double i_minus = base * std::pow(h, n + 1);
        out[n] = std::norm(lam * spssv_coefficient(c.sq, n) * ((1.0 + w) * i_plus + (1.0 - w) * i_minus));
    }
    return out;
}

}  // namespace wvlab
