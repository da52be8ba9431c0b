#pragma once

#include <complex>
#include <span>

#include <Eigen/Dense>

#include "wvlab/error.hpp"

namespace wvlab {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

inline constexpr double kDefaultTailTol = 1e-12;

// Pure state on a truncated Fock basis. Two-mode amplitudes use index n_a*N + n_b.
class StateVector {
public:
    StateVector(int modes, int truncation, CVector amplitudes, double tail_tol = kDefaultTailTol);

    int modes() const noexcept { return modes_; }
    int truncation() const noexcept { return n_; }
    const CVector& amplitudes() const noexcept { return amp_; }
    cplx operator[](Eigen::Index i) const { return amp_[i]; }
    cplx at(int na, int nb) const { return amp_[static_cast<Eigen::Index>(na) * n_ + nb]; }

    double norm() const { return amp_.norm(); }
    // Mass on the last five levels of any mode.
    double tail_mass() const;
    bool truncation_warning() const noexcept { return warning_; }

    // Two-mode amplitudes as an N x N matrix, rows n_a, columns n_b.
    CMatrix as_matrix() const;
    static StateVector from_matrix(const CMatrix& psi, double tail_tol = kDefaultTailTol);

private:
    int modes_;
    int n_;
    CVector amp_;
    bool warning_ = false;
};

struct Operator {
    CMatrix m;
    Eigen::Index dimension() const { return m.rows(); }
};

struct DisplacementOptions {
    bool force = false;
};

double laguerre_assoc(int n, int m, double x);

Operator annihilation_matrix(int n);
Operator creation_matrix(int n);
Operator number_matrix(int n);
Operator displacement_matrix(cplx alpha, int n, DisplacementOptions opt = {});
// exp(alpha a^dagger - alpha* a) by matrix exponential, for cross-checks.
Operator displacement_expm(cplx alpha, int n);
Operator squeeze_single_matrix(double r, double theta, int n);
Operator squeeze_two_matrix(double eta, double zeta, int n);

StateVector fock_state(int k, int n);
StateVector coherent_state(cplx mu, int n);
// <mu|psi> summed over the truncated support of psi; no guard needed.
cplx coherent_overlap(cplx mu, std::span<const cplx> amplitudes);

cplx expectation(const StateVector& psi, const Operator& op);
cplx inner_product(const StateVector& bra, const StateVector& ket);
StateVector normalize(const StateVector& psi);
StateVector apply(const Operator& op, const StateVector& psi);
Operator tensor(const Operator& a, const Operator& b);
Operator embed_mode_a(const Operator& op, int n);
Operator embed_mode_b(const Operator& op, int n);

// Two-mode helpers that act on the N x N amplitude matrix instead of N^2 operators.
cplx expectation_two(const CMatrix& psi, const CMatrix& op_a, const CMatrix& op_b);
CMatrix apply_mode_a(const CMatrix& op, const CMatrix& psi);

}  // namespace wvlab
