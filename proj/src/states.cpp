#include "wvlab/states.hpp"

#include <cmath>

namespace wvlab {

namespace {

void require_r(double r) {
    if (!(r >= kRMin)) throw Error(Errc::domain, "squeeze parameter r below r_min");
}

}  // namespace

StateVector squeezed_vacuum(SqueezeParams p, int n) {
    if (p.r < 0.0) throw Error(Errc::domain, "squeeze parameter r must be non-negative");
    CVector v = CVector::Zero(n);
    const double t = std::tanh(p.r);
    const double lc = -0.5 * std::log(std::cosh(p.r));
    for (int m = 0; 2 * m < n; ++m) {
        if (m > 0 && t == 0.0) break;
        const double lmag = lc + 0.5 * std::lgamma(2.0 * m + 1.0) - m * std::log(2.0) -
                            std::lgamma(m + 1.0) + (m > 0 ? m * std::log(t) : 0.0);
        v[2 * m] = std::polar(std::exp(lmag), m * p.theta);
    }
    return StateVector(1, n, v / v.norm());
}

cplx spssv_coefficient(SqueezeParams p, int k) {
    require_r(p.r);
    const double lmag = k * std::log(std::tanh(p.r)) + 0.5 * std::lgamma(2.0 * k + 2.0) -
                        1.5 * std::log(std::cosh(p.r)) - std::lgamma(k + 1.0) - k * std::log(2.0);
    return std::polar(std::exp(lmag), (k + 1) * p.theta);
}

StateVector spssv(SqueezeParams p, int n) {
    require_r(p.r);
    CVector v = CVector::Zero(n);
    for (int k = 0; 2 * k + 1 < n; ++k) v[2 * k + 1] = spssv_coefficient(p, k);
    return StateVector(1, n, v / v.norm());
}

StateVector spssv_operator_route(SqueezeParams p, int n) {
    require_r(p.r);
    // One extra level so the lowered top amplitude is exact.
    const CVector sq = squeeze_single_matrix(p.r, p.theta, n + 1).m.col(0);
    const CVector lowered = annihilation_matrix(n + 1).m * sq;
    return normalize(StateVector(1, n, lowered.head(n)));
}

CMatrix tmsv_matrix(TwoModeSqueezeParams p, int n) {
    if (p.eta < 0.0) throw Error(Errc::domain, "eta must be non-negative");
    CMatrix psi = CMatrix::Zero(n, n);
    const cplx z = std::polar(std::tanh(p.eta), p.zeta);
    cplx c = 1.0 / std::cosh(p.eta);
    for (int k = 0; k < n; ++k) {
        psi(k, k) = c;
        c *= z;
    }
    return psi / psi.norm();
}

StateVector tmsv(TwoModeSqueezeParams p, int n) { return StateVector::from_matrix(tmsv_matrix(p, n)); }

}  // namespace wvlab
