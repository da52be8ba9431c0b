#include <cmath>
#include <random>
#include <tuple>

#include "doctest.h"
#include "reference.hpp"
#include "wvlab/expm.hpp"
#include "wvlab/fock.hpp"

using namespace wvlab;

namespace {

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

int displaced_interior(cplx alpha, int n) {
    const double e = std::sqrt(double(n)) - std::abs(alpha) - 1.5;
    return e > 0 ? static_cast<int>(e * e) : 0;
}

}  // namespace

TEST_CASE("annihilation matrix entries") {
    const auto a = annihilation_matrix(3).m;
    CHECK(a(0, 1) == cplx(1.0));
    CHECK(std::abs(a(1, 2) - std::sqrt(2.0)) < 1e-15);
    CHECK(a.cwiseAbs().sum() == doctest::Approx(1.0 + std::sqrt(2.0)));
    CHECK_THROWS_AS(annihilation_matrix(1), Error);
}

TEST_CASE("commutator is identity on the interior block") {
    const int n = 30;
    const auto a = annihilation_matrix(n).m;
    const CMatrix c = a * a.adjoint() - a.adjoint() * a;
    CHECK(max_abs(c.topLeftCorner(n - 5, n - 5) - CMatrix::Identity(n - 5, n - 5)) < 1e-12);
}

TEST_CASE("ladder action on Fock states") {
    const auto psi = apply(annihilation_matrix(10), fock_state(2, 10));
    CHECK(std::abs(psi[1] - std::sqrt(2.0)) < 1e-15);
    CHECK(psi.amplitudes().norm() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("laguerre recurrence") {
    CHECK(laguerre_assoc(0, 7, 3.3) == 1.0);
    for (double x : {0.0, 0.4, 2.5}) CHECK(laguerre_assoc(1, 1, x) == doctest::Approx(2.0 - x));
    CHECK(laguerre_assoc(3, 2, 1.5) == doctest::Approx(0.0625).epsilon(1e-14));
    CHECK(ref::laguerre_sum(3, 2, 1.5) == doctest::Approx(0.0625).epsilon(1e-14));
    for (int n : {0, 1, 4, 9, 15})
        for (int m : {0, 1, 3, 8})
            for (double x : {0.1, 1.0, 4.0})
                CHECK(laguerre_assoc(n, m, x) == doctest::Approx(ref::laguerre_sum(n, m, x)).epsilon(1e-10));
}

TEST_CASE("displacement matrix") {
    CHECK(max_abs(displacement_matrix(0.0, 12).m - CMatrix::Identity(12, 12)) == 0.0);
    CHECK(std::abs(displacement_matrix(0.5, 60).m(0, 0) - 0.8824969025845957) < 1e-15);

    const cplx alpha(0.3, 0.2);
    const auto d = displacement_matrix(alpha, 40).m;
    const auto dm = displacement_matrix(-alpha, 40).m;
    const int k = displaced_interior(alpha, 40);
    CHECK(max_abs((d * dm).topLeftCorner(k, k) - CMatrix::Identity(k, k)) < 1e-12);

    SUBCASE("agrees with the matrix exponential away from the edge") {
        for (cplx a : {cplx(0.5), cplx(0.3, -0.7), cplx(-1.2, 0.4)}) {
            const auto lag = displacement_matrix(a, 60).m;
            const auto ex = ref::displacement(a, 120);
            const int m = displaced_interior(a, 60);
            CHECK(max_abs(lag.topLeftCorner(m, m) - ex.topLeftCorner(m, m)) < 1e-10);
        }
        const auto own = displacement_expm({0.4, 0.1}, 50).m;
        CHECK(max_abs(own - ref::displacement({0.4, 0.1}, 50)) < 1e-12);
    }

    SUBCASE("accuracy guard") {
        CHECK_THROWS_AS(displacement_matrix(5.0, 80), Error);
        CHECK_NOTHROW(displacement_matrix(5.0, 80, {true}));
        CHECK_NOTHROW(displacement_matrix(5.0, 120));
    }
}

TEST_CASE("displacement unitarity and composition over random draws") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-2.1, 2.1);
    for (int trial = 0; trial < 20; ++trial) {
        const cplx a(u(rng), u(rng));
        if (std::abs(a) > 3.0) continue;
        for (int n : {60, 80}) {
            const auto d = displacement_matrix(a, n, {true}).m;
            const int k = displaced_interior(a, n);
            REQUIRE(k >= 3);
            CHECK(max_abs((d.adjoint() * d).topLeftCorner(k, k) - CMatrix::Identity(k, k)) < 1e-8);
            const cplx b(0.4, 0.3);
            const auto lhs = d * displacement_matrix(b, n).m;
            const auto rhs =
                std::exp(0.5 * (a * std::conj(b) - std::conj(a) * b)) * displacement_matrix(a + b, n, {true}).m;
            const int kc = displaced_interior(a + b, n);
            CHECK(max_abs((lhs - rhs).topLeftCorner(kc, kc)) < 1e-7);
        }
    }
}

TEST_CASE("pade exponential") {
    const CMatrix z = CMatrix::Zero(6, 6);
    CHECK(max_abs(expm(z) - CMatrix::Identity(6, 6)) == 0.0);
    std::mt19937 rng(3);
    std::normal_distribution<double> g;
    for (double scale : {1e-3, 0.1, 0.8, 2.0, 6.0, 40.0}) {
        CMatrix m(9, 9);
        for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = cplx(g(rng), g(rng)) * scale / 9.0;
        const CMatrix expect = m.exp();
        CHECK(max_abs(expm(m) - expect) / std::max(1.0, max_abs(expect)) < 1e-11);
    }
}

TEST_CASE("squeeze operators") {
    CHECK(max_abs(squeeze_single_matrix(0.0, 0.0, 10).m - CMatrix::Identity(10, 10)) < 1e-15);
    // Exact elements: unitary only on the columns whose support fits the basis.
    for (auto [r, n, k] : {std::tuple{0.3, 60, 20}, {0.8, 120, 12}, {1.2, 200, 7}}) {
        const auto s = squeeze_single_matrix(r, 0.4, n).m;
        CHECK(max_abs((s.adjoint() * s).topLeftCorner(k, k) - CMatrix::Identity(k, k)) < 1e-8);
    }
    CHECK(max_abs(squeeze_single_matrix(0.8, 0.4, 40).m - ref::squeeze(0.8, 0.4, 80).topLeftCorner(40, 40)) < 1e-12);
    {
        const auto a = annihilation_matrix(60).m;
        const cplx xi = std::polar(1.5, 0.4);
        const CMatrix u = expm(0.5 * (xi * (a * a).adjoint() - std::conj(xi) * a * a));
        CHECK(max_abs(u.adjoint() * u - CMatrix::Identity(60, 60)) < 1e-10);
    }
    const auto col = squeeze_single_matrix(1.5, 0.4, 60).m.col(0);
    for (int m = 0; 2 * m + 1 < 60; ++m) CHECK(std::abs(col[2 * m + 1]) == 0.0);
    CHECK_THROWS_AS(squeeze_single_matrix(3.0, 0.0, 20), Error);

    const auto s2 = squeeze_two_matrix(0.0, 0.0, 8).m;
    CHECK(max_abs(s2 - CMatrix::Identity(64, 64)) < 1e-15);

    SUBCASE("block construction equals the dense exponential") {
        const int n = 10, m = 2 * n;
        const auto a = annihilation_matrix(m).m;
        const CMatrix ab = tensor({a}, {a}).m;
        const cplx chi = std::polar(0.35, 0.6);
        const CMatrix gen = chi * ab.adjoint() - std::conj(chi) * ab;
        const CMatrix dense = gen.exp();
        const CMatrix own = squeeze_two_matrix(0.35, 0.6, n).m;
        double worst = 0.0;
        for (int i = 0; i < n * n; ++i)
            for (int j = 0; j < n * n; ++j)
                worst = std::max(worst, std::abs(own(i, j) - dense((i / n) * m + i % n, (j / n) * m + j % n)));
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("coherent states") {
    const auto vac = coherent_state(0.0, 12);
    CHECK(std::abs(vac[0] - 1.0) < 1e-15);
    CHECK(vac.amplitudes().tail(11).norm() == 0.0);

    const cplx mu(1.0, 0.5);
    const auto c = coherent_state(mu, 60);
    CHECK(std::abs(expectation(c, annihilation_matrix(60)) - mu) < 1e-12);

    const cplx nu(-0.4, 0.9);
    const auto d = coherent_state(nu, 60);
    const cplx closed = std::exp(-0.5 * (std::norm(mu) + std::norm(nu)) + std::conj(mu) * nu);
    CHECK(std::abs(inner_product(c, d) - closed) < 1e-12);
    const auto& amp = d.amplitudes();
    CHECK(std::abs(coherent_overlap(mu, {amp.data(), std::size_t(amp.size())}) - closed) < 1e-12);
    CHECK_THROWS_AS(coherent_state(3.0, 20), Error);
}

TEST_CASE("expectation and state plumbing") {
    const auto num = number_matrix(10);
    CHECK(expectation(fock_state(0, 10), num) == cplx(0.0));
    CHECK_THROWS_AS(expectation(fock_state(0, 10), number_matrix(11)), Error);

    const auto c = coherent_state({0.6, -0.2}, 40);
    const CMatrix x = annihilation_matrix(40).m + creation_matrix(40).m;
    CHECK(std::abs(expectation(c, {x}).imag()) < 1e-12);

    const StateVector raw(1, 5, CVector::Constant(5, cplx(2.0, 1.0)));
    CHECK(normalize(raw).norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(raw.truncation_warning());
    CHECK_THROWS_AS(StateVector(1, 5, CVector::Zero(4)), Error);
    CHECK_THROWS_AS(StateVector(3, 5, CVector::Zero(5)), Error);

    const auto t = tensor(annihilation_matrix(4), annihilation_matrix(5));
    CHECK(t.dimension() == 20);

    const int n = 6;
    const auto ea = embed_mode_a(annihilation_matrix(n), n);
    CVector v = CVector::Zero(n * n);
    v[3 * n + 2] = 1.0;
    const CVector out = ea.m * v;
    CHECK(std::abs(out[2 * n + 2] - std::sqrt(3.0)) < 1e-15);
    CHECK(std::abs(out.norm() - std::sqrt(3.0)) < 1e-15);
}

TEST_CASE("truncation error shrinks with the cutoff") {
    const cplx mu(1.4, 0.6);
    const double exact = std::norm(mu);
    double last = 1.0;
    for (int n : {12, 16, 20, 24, 32}) {
        const auto c = coherent_state(mu, n);
        const double err = std::abs(expectation(c, number_matrix(n)).real() - exact);
        CHECK(err <= last);
        last = err;
    }
    CHECK(last < 1e-10);
}
