#pragma once

// Independent reference routines used only by tests.

#include <cmath>
#include <complex>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace ref {

using cplx = std::complex<double>;

inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double b = 1.0;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

// L_n^m(x) = sum_k C(n+m, n-k) (-1)^k x^k / k!
inline double laguerre_sum(int n, int m, double x) {
    double s = 0.0;
    double term = 1.0;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) term *= -x / k;
        s += binomial(n + m, n - k) * term;
    }
    return s;
}

inline Eigen::MatrixXcd ladder(int n) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(double(k));
    return a;
}

inline Eigen::MatrixXcd displacement(cplx alpha, int n) {
    const Eigen::MatrixXcd a = ladder(n);
    const Eigen::MatrixXcd g = alpha * a.adjoint() - std::conj(alpha) * a;
    return g.exp();
}

inline Eigen::MatrixXcd squeeze(double r, double theta, int n) {
    const Eigen::MatrixXcd a = ladder(n);
    const cplx xi = std::polar(r, theta);
    const Eigen::MatrixXcd g = 0.5 * (xi * a.adjoint() * a.adjoint() - std::conj(xi) * a * a);
    return g.exp();
}

inline Eigen::VectorXcd spssv(double r, double theta, int n) {
    Eigen::VectorXcd v0 = Eigen::VectorXcd::Zero(n);
    v0[0] = 1.0;
    Eigen::VectorXcd v = ladder(n) * (squeeze(r, theta, n) * v0);
    return v / v.norm();
}

inline Eigen::MatrixXcd tmsv(double eta, int n) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 0; k < n; ++k) m(k, k) = std::pow(std::tanh(eta), k) / std::cosh(eta);
    return m / m.norm();
}

inline Eigen::VectorXcd coherent_row(cplx mu, int n) {
    Eigen::VectorXcd c(n);
    for (int k = 0; k < n; ++k)
        c[k] = std::exp(-0.5 * std::norm(mu)) * std::pow(std::conj(mu), k) / std::sqrt(std::tgamma(k + 1.0));
    return c;
}

}  // namespace ref
