#include "wvlab/fock.hpp"

#include <cmath>
#include <string>

#include "wvlab/expm.hpp"

namespace wvlab {

namespace {

void require_truncation(int n, int min_n) {
    if (n < min_n)
        throw Error(Errc::invalid_truncation,
                    "truncation " + std::to_string(n) + " below minimum " + std::to_string(min_n));
}

}  // namespace

StateVector::StateVector(int modes, int truncation, CVector amplitudes, double tail_tol)
    : modes_(modes), n_(truncation), amp_(std::move(amplitudes)) {
    if (modes != 1 && modes != 2) throw Error(Errc::dimension, "modes must be 1 or 2");
    require_truncation(truncation, 2);
    const Eigen::Index expect =
        modes == 1 ? truncation : static_cast<Eigen::Index>(truncation) * truncation;
    if (amp_.size() != expect) throw Error(Errc::dimension, "amplitude count does not match truncation");
    warning_ = tail_mass() >= tail_tol;
}

double StateVector::tail_mass() const {
    const int edge = std::max(0, n_ - 5);
    double tail = 0.0;
    if (modes_ == 1) {
        for (int k = edge; k < n_; ++k) tail += std::norm(amp_[k]);
        return tail;
    }
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (a >= edge || b >= edge) tail += std::norm(at(a, b));
    return tail;
}

CMatrix StateVector::as_matrix() const {
    if (modes_ != 2) throw Error(Errc::dimension, "as_matrix needs a two-mode state");
    CMatrix psi(n_, n_);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) psi(a, b) = at(a, b);
    return psi;
}

StateVector StateVector::from_matrix(const CMatrix& psi, double tail_tol) {
    const auto n = psi.rows();
    if (psi.cols() != n) throw Error(Errc::dimension, "two-mode amplitude matrix must be square");
    CVector v(n * n);
    for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = 0; b < n; ++b) v[a * n + b] = psi(a, b);
    return StateVector(2, static_cast<int>(n), std::move(v), tail_tol);
}

double laguerre_assoc(int n, int m, double x) {
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = 1.0 + m - x;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 + m - x) * cur - (k + m) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

Operator annihilation_matrix(int n) {
    require_truncation(n, 2);
    CMatrix a = CMatrix::Zero(n, n);
    for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
    return {a};
}

Operator creation_matrix(int n) { return {annihilation_matrix(n).m.adjoint()}; }

Operator number_matrix(int n) {
    require_truncation(n, 2);
    CMatrix m = CMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) m(k, k) = static_cast<double>(k);
    return {m};
}

Operator displacement_matrix(cplx alpha, int n, DisplacementOptions opt) {
    require_truncation(n, 2);
    const double x = std::norm(alpha);
    if (!opt.force && x >= n / 4.0)
        throw Error(Errc::truncation_risk, "|alpha|^2 must stay below N/4 for displacement accuracy");
    CMatrix d = CMatrix::Zero(n, n);
    const double damp = std::exp(-0.5 * x);
    if (x == 0.0) {
        d.setIdentity();
        return {d};
    }
    const double log_abs = 0.5 * std::log(x);
    const double arg = std::arg(alpha);
    const double arg_up = std::arg(-std::conj(alpha));
    for (int k = 0; k < n; ++k) {
        // L_j^k(x) for j = 0.. by upward recurrence along the k-th off-diagonal.
        double prev = 0.0;
        double cur = 1.0;
        for (int j = 0; j + k < n; ++j) {
            if (j == 1) {
                prev = 1.0;
                cur = 1.0 + k - x;
            } else if (j > 1) {
                const double next = ((2.0 * (j - 1) + 1.0 + k - x) * cur - (j - 1 + k) * prev) / j;
                prev = cur;
                cur = next;
            }
            const double mag =
                damp * std::exp(k * log_abs + 0.5 * (std::lgamma(j + 1.0) - std::lgamma(j + k + 1.0))) * cur;
            d(j + k, j) = std::polar(mag, k * arg);
            if (k > 0) d(j, j + k) = std::polar(mag, k * arg_up);
        }
    }
    return {d};
}

Operator displacement_expm(cplx alpha, int n) {
    const CMatrix a = annihilation_matrix(n).m;
    return {expm(alpha * a.adjoint() - std::conj(alpha) * a)};
}

Operator squeeze_single_matrix(double r, double theta, int n) {
    require_truncation(n, 4);
    if (r < 0.0) throw Error(Errc::domain, "squeeze parameter r must be non-negative");
    const double t = std::tanh(r);
    // Vacuum column reaches level 2m with weight ~ tanh(r)^(2m).
    if (std::pow(t, n - 5) > 1e-2)
        throw Error(Errc::truncation_risk, "squeezing too strong for truncation");
    // Exponentiate on a doubled basis so the returned block holds exact elements.
    const int m = 2 * n;
    const CMatrix a = annihilation_matrix(m).m;
    const CMatrix a2 = a * a;
    const cplx xi = std::polar(r, theta);
    const CMatrix full = expm(0.5 * (xi * a2.adjoint() - std::conj(xi) * a2));
    return {full.topLeftCorner(n, n)};
}

Operator squeeze_two_matrix(double eta, double zeta, int n) {
    require_truncation(n, 4);
    if (eta < 0.0) throw Error(Errc::domain, "squeeze parameter eta must be non-negative");
    if (std::pow(std::tanh(eta), n - 5) > 1e-2)
        throw Error(Errc::truncation_risk, "squeezing too strong for truncation");
    const cplx chi = std::polar(eta, zeta);
    const Eigen::Index dim = static_cast<Eigen::Index>(n) * n;
    CMatrix s = CMatrix::Zero(dim, dim);
    // The generator conserves n_a - n_b; exponentiate each sector separately.
    for (int d = -(n - 1); d <= n - 1; ++d) {
        const int a0 = std::max(d, 0);
        const int b0 = std::max(-d, 0);
        const int len = n - std::max(a0, b0);
        const int padded = len + n;
        CMatrix g = CMatrix::Zero(padded, padded);
        for (int k = 0; k + 1 < padded; ++k) {
            const double amp = std::sqrt((a0 + k + 1.0) * (b0 + k + 1.0));
            g(k + 1, k) = chi * amp;
            g(k, k + 1) = -std::conj(chi) * amp;
        }
        const CMatrix e = expm(g);
        for (int i = 0; i < len; ++i)
            for (int j = 0; j < len; ++j)
                s(static_cast<Eigen::Index>(a0 + i) * n + b0 + i,
                  static_cast<Eigen::Index>(a0 + j) * n + b0 + j) = e(i, j);
    }
    return {s};
}

StateVector fock_state(int k, int n) {
    require_truncation(n, 2);
    if (k < 0 || k >= n) throw Error(Errc::domain, "Fock index outside truncation");
    CVector v = CVector::Zero(n);
    v[k] = 1.0;
    return StateVector(1, n, std::move(v));
}

StateVector coherent_state(cplx mu, int n) {
    require_truncation(n, 2);
    if (std::norm(mu) >= n / 4.0)
        throw Error(Errc::truncation_risk, "|mu|^2 must stay below N/4 for a coherent state");
    CVector v(n);
    cplx term = std::exp(-0.5 * std::norm(mu));
    for (int k = 0; k < n; ++k) {
        if (k > 0) term *= mu / std::sqrt(static_cast<double>(k));
        v[k] = term;
    }
    return StateVector(1, n, std::move(v));
}

cplx coherent_overlap(cplx mu, std::span<const cplx> amplitudes) {
    const cplx mc = std::conj(mu);
    cplx term = 1.0;
    cplx sum = 0.0;
    for (std::size_t k = 0; k < amplitudes.size(); ++k) {
        if (k > 0) term *= mc / std::sqrt(static_cast<double>(k));
        sum += term * amplitudes[k];
    }
    return std::exp(-0.5 * std::norm(mu)) * sum;
}

cplx expectation(const StateVector& psi, const Operator& op) {
    if (op.dimension() != psi.amplitudes().size())
        throw Error(Errc::dimension, "operator and state dimensions differ");
    return psi.amplitudes().dot(op.m * psi.amplitudes());
}

cplx inner_product(const StateVector& bra, const StateVector& ket) {
    if (bra.amplitudes().size() != ket.amplitudes().size())
        throw Error(Errc::dimension, "state dimensions differ");
    return bra.amplitudes().dot(ket.amplitudes());
}

StateVector normalize(const StateVector& psi) {
    const double nrm = psi.norm();
    if (nrm < 1e-300) throw Error(Errc::degenerate_selection, "cannot normalize a null state");
    return StateVector(psi.modes(), psi.truncation(), psi.amplitudes() / nrm);
}

StateVector apply(const Operator& op, const StateVector& psi) {
    if (op.dimension() != psi.amplitudes().size())
        throw Error(Errc::dimension, "operator and state dimensions differ");
    return StateVector(psi.modes(), psi.truncation(), op.m * psi.amplitudes());
}

Operator tensor(const Operator& a, const Operator& b) {
    const auto na = a.m.rows();
    const auto nb = b.m.rows();
    CMatrix t(na * nb, na * nb);
    for (Eigen::Index i = 0; i < na; ++i)
        for (Eigen::Index j = 0; j < na; ++j) t.block(i * nb, j * nb, nb, nb) = a.m(i, j) * b.m;
    return {t};
}

Operator embed_mode_a(const Operator& op, int n) {
    if (op.dimension() != n) throw Error(Errc::dimension, "operator is not single-mode of size N");
    return tensor(op, {CMatrix::Identity(n, n)});
}

Operator embed_mode_b(const Operator& op, int n) {
    if (op.dimension() != n) throw Error(Errc::dimension, "operator is not single-mode of size N");
    return tensor({CMatrix::Identity(n, n)}, op);
}

cplx expectation_two(const CMatrix& psi, const CMatrix& op_a, const CMatrix& op_b) {
    return (psi.conjugate().cwiseProduct(op_a * psi * op_b.transpose())).sum();
}

CMatrix apply_mode_a(const CMatrix& op, const CMatrix& psi) { return op * psi; }

}  // namespace wvlab
