#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "doctest.h"
#include "wvlab/husimi.hpp"

using namespace wvlab;
using std::numbers::pi;

namespace {

std::pair<int, int> argmax(const PhaseGrid& g) {
    int bi = 0, bj = 0;
    for (int i = 0; i < g.nx; ++i)
        for (int j = 0; j < g.ny; ++j)
            if (g.value(i, j) > g.value(bi, bj)) bi = i, bj = j;
    return {bi, bj};
}

}  // namespace

TEST_CASE("single-mode Q function points") {
    for (double r : {0.2, 1.0}) {
        const SpssvConfig c{{8 * pi / 9, 0.0}, 0.0, {r, 0.0}};
        CHECK(std::abs(q_single_closed(c, 0.0)) < 1e-15);
        CHECK(std::abs(q_single_oracle(c, 0.0)) < 1e-15);
    }
    CHECK(q_phi1_closed({1.0, 0.0}, 1.0) == doctest::Approx(0.06825679964764671).epsilon(1e-12));
    const SpssvConfig at_zero{{8 * pi / 9, 0.0}, 0.0, {1.0, 0.0}};
    CHECK(q_single_oracle(at_zero, 1.0, {160, false}) == doctest::Approx(0.06825679964764671).epsilon(1e-10));
    CHECK(q_single_closed(at_zero, 1.0) == doctest::Approx(0.06825679964764671).epsilon(1e-10));

    const auto rep = q_single({{8 * pi / 9, 0.0}, 3.0, {1.0, 0.0}}, {0.7, 0.3});
    CHECK_FALSE(rep.flag);
    CHECK(rep.oracle.real() == doctest::Approx(0.121309).epsilon(1e-5));

    SUBCASE("closed form tracks the oracle on random points") {
        std::mt19937 rng(17);
        std::uniform_real_distribution<double> u(-3.0, 3.0), ua(0.0, 8 * pi / 9), ud(0.0, 2 * pi), us(0.0, 3.0),
            ur(0.05, 1.0);
        for (int i = 0; i < 100; ++i) {
            const SpssvConfig c{{ua(rng), ud(rng)}, us(rng), {ur(rng), 0.0}};
            const cplx mu(u(rng), u(rng));
            const auto m = q_single(c, mu);
            CHECK(m.rel_diff < 1e-6);
            CHECK(m.oracle.real() >= -1e-14);
            CHECK(m.oracle.real() <= 1.0 / pi + 1e-12);
        }
    }
}

TEST_CASE("single-mode Q grids") {
    const Region region;
    const SpssvConfig s0{{8 * pi / 9, 0.0}, 0.0, {1.0, 0.0}};
    const auto g0 = q_single_grid(s0, region, 201);
    CHECK(g0.integral() == doctest::Approx(1.0).epsilon(1e-3));
    double asym = 0.0, low = 0.0, high = 0.0;
    for (int i = 0; i < g0.nx; ++i)
        for (int j = 0; j < g0.ny; ++j) {
            asym = std::max(asym, std::abs(g0.value(i, j) - g0.value(g0.nx - 1 - i, g0.ny - 1 - j)));
            low = std::min(low, g0.value(i, j));
            high = std::max(high, g0.value(i, j));
        }
    CHECK(asym < 1e-12);
    CHECK(low >= -1e-14);
    CHECK(high <= 1.0 / pi);
    const auto split0 = split_detector(g0);
    CHECK(split0.n_peaks == 2);
    CHECK(split0.separation == doctest::Approx(4.08).epsilon(1e-6));

    const SpssvConfig s3{{8 * pi / 9, 0.0}, 3.0, {1.0, 0.0}};
    const auto oracle3 = q_single_grid(s3, region, 121, Engine::oracle);
    const auto closed3 = q_single_grid(s3, region, 121, Engine::closed);
    CHECK(argmax(oracle3) == argmax(closed3));
    // The inner lobes of the two displaced copies meet at the origin.
    const auto [pi3, pj3] = argmax(oracle3);
    CHECK(oracle3.value(60, 60) > 0.9 * oracle3.value(pi3, pj3));

    SUBCASE("peak structure as measured") {
        std::vector<double> seps;
        for (double s : {0.5, 1.0, 2.0, 3.0}) {
            const auto split = split_detector(q_single_grid({{8 * pi / 9, 0.0}, s, {1.0, 0.0}}, region, 201));
            seps.push_back(split.separation);
            CHECK(split.n_peaks == (s < 1.5 ? 2 : 3));
        }
        CHECK(seps[0] == doctest::Approx(3.72).epsilon(1e-6));
        CHECK(seps[1] == doctest::Approx(3.66).epsilon(1e-6));
        CHECK(seps[3] > seps[2]);
        CHECK(seps[2] > seps[1]);
        CHECK(seps[1] < split0.separation);
    }
}

TEST_CASE("two-mode Q function") {
    const double eta = 1.0;
    const TmsvConfig zero{{8 * pi / 9, 0.0}, 0.0, {eta, 0.0}};
    const double origin = 1.0 / (pi * pi * std::pow(std::cosh(eta), 2));
    CHECK(q_phi2_closed({eta, 0.0}, 0.0, 0.0) == doctest::Approx(origin).epsilon(1e-12));
    CHECK(q_two_oracle(zero, 0.0, 0.0) == doctest::Approx(origin).epsilon(1e-10));
    CHECK(q_phi2_closed({eta, 0.0}, 0.5, -0.5) == doctest::Approx(0.01763590301714632).epsilon(1e-12));
    CHECK(q_two_oracle(zero, 0.5, -0.5) == doctest::Approx(0.01763590301714632).epsilon(1e-10));

    // Closed assembly of the post-selected state, as measured.
    CHECK(q_two(zero, 0.5, -0.5).flag);
    CHECK(q_two({{8 * pi / 9, 0.0}, 1.0, {eta, 0.0}}, {0.3, 0.2}, {-0.1, 0.4}).flag);

    CHECK(q_two_oracle(zero, 1.0, 1.0) > q_two_oracle(zero, 1.0, -1.0));
    CHECK(q_two_oracle(zero, {0, 1.0}, {0, 1.0}) < q_two_oracle(zero, {0, 1.0}, {0, -1.0}));

    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 20; ++i) {
        const double q = q_two_oracle({{2 * pi / 3, 0.5}, 1.2, {0.6, 0.0}}, {u(rng), u(rng)}, {u(rng), u(rng)});
        CHECK(q >= -1e-14);
        CHECK(q <= 1.0 / (pi * pi) + 1e-12);
    }
}

TEST_CASE("two-mode slices") {
    const Region region;
    const TmsvConfig zero{{8 * pi / 9, 0.0}, 0.0, {1.0, 0.0}};
    const auto real0 = q_two_slice(zero, SliceSpec::real_parts(), region, 61);
    CHECK(real0.slice == SliceCode::real_parts);
    const auto split = split_detector(real0);
    CHECK(split.n_peaks == 1);
    CHECK(argmax(real0) == std::pair{30, 30});

    const auto imag0 = q_two_slice(zero, SliceSpec::imag_parts(), region, 61);
    CHECK(imag0.value(40, 40) < imag0.value(40, 20));
    CHECK(real0.value(40, 40) > real0.value(40, 20));

    const auto real2 = q_two_slice({{8 * pi / 9, 0.0}, 2.0, {1.0, 0.0}}, SliceSpec::real_parts(), region, 61);
    CHECK(split_detector(real2).n_peaks == 2);

    CHECK_THROWS_AS(q_two_slice(zero, {Coord::re_mu1, Coord::re_mu1}, region, 11), Error);
    CHECK(q_two_slice(zero, {Coord::re_mu1, Coord::im_mu2}, region, 11).slice == SliceCode::other);
}

TEST_CASE("split detector on trivial grids") {
    PhaseGrid flat;
    flat.nx = flat.ny = 21;
    flat.values.assign(21 * 21, 0.3);
    CHECK(split_detector(flat).n_peaks == 0);
    CHECK(split_detector(flat).separation == 0.0);

    PhaseGrid one = flat;
    one.values.assign(21 * 21, 0.0);
    one.values[10 * 21 + 10] = 1.0;
    CHECK(split_detector(one).n_peaks == 1);
    CHECK(split_detector(one).separation == 0.0);
}

TEST_CASE("grid serialization") {
    const auto g = q_single_grid({{pi / 3, 0.2}, 1.0, {0.5, 0.0}}, {-3, 3, -2, 4}, 17, Engine::oracle, {}, 2);
    std::stringstream bin;
    write_binary(g, bin);
    CHECK(bin.str().size() == 8 * (8 + 17 * 17));
    const auto back = read_binary(bin);
    CHECK(back.nx == 17);
    CHECK(back.ny == 17);
    CHECK(back.region.y_max == 4.0);
    CHECK(back.values == g.values);

    std::ostringstream csv;
    write_csv(g, csv);
    const auto text = csv.str();
    CHECK(text.rfind("x,y,Q\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 17 * 17);

    std::stringstream bad("short");
    CHECK_THROWS(read_binary(bad));

    const auto serial = q_single_grid({{pi / 3, 0.2}, 1.0, {0.5, 0.0}}, {-3, 3, -2, 4}, 17, Engine::oracle, {}, 1);
    CHECK(serial.values == g.values);
}
