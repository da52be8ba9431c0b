#include "wvlab/expm.hpp"

#include <array>
#include <cmath>

namespace wvlab {

namespace {

using M = Eigen::MatrixXcd;

constexpr std::array<double, 14> kB13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

struct LowOrder {
    int degree;
    double theta;
    std::array<double, 10> b;
};

constexpr std::array<LowOrder, 4> kLow = {{
    {3, 1.495585217958292e-2, {120.0, 60.0, 12.0, 1.0}},
    {5, 2.539398330063230e-1, {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0}},
    {7, 9.504178996162932e-1,
     {17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0}},
    {9, 2.097847961257068e0,
     {17643225600.0, 8821612800.0, 2075673600.0, 302702400.0, 30270240.0, 2162160.0, 110880.0,
      3960.0, 90.0, 1.0}},
}};

constexpr double kTheta13 = 5.371920351148152;

M solve_pade(const M& u, const M& v) {
    return (v - u).partialPivLu().solve(v + u);
}

M pade_low(const M& a, const LowOrder& p) {
    const auto n = a.rows();
    const M ident = M::Identity(n, n);
    const M a2 = a * a;
    M power = ident;
    M u_even = p.b[1] * ident;
    M v = p.b[0] * ident;
    for (int k = 2; k <= p.degree; k += 2) {
        power = power * a2;
        u_even += p.b[k + 1] * power;
        v += p.b[k] * power;
    }
    return solve_pade(a * u_even, v);
}

M pade13(const M& a) {
    const auto n = a.rows();
    const M ident = M::Identity(n, n);
    const M a2 = a * a;
    const M a4 = a2 * a2;
    const M a6 = a4 * a2;
    const auto& b = kB13;
    const M u_in = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 +
                   b[1] * ident;
    const M u = a * u_in;
    const M v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 +
                b[0] * ident;
    return solve_pade(u, v);
}

}  // namespace

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) {
    const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
    for (const auto& p : kLow) {
        if (norm1 <= p.theta) return pade_low(a, p);
    }
    int squarings = 0;
    if (norm1 > kTheta13) squarings = static_cast<int>(std::ceil(std::log2(norm1 / kTheta13)));
    M r = pade13(a / std::ldexp(1.0, squarings));
    for (int i = 0; i < squarings; ++i) r = r * r;
    return r;
}

}  // namespace wvlab
