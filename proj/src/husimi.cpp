#include "wvlab/husimi.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <numbers>
#include <ostream>

#include "wvlab/parallel.hpp"

namespace wvlab {

namespace {

constexpr double kPi = std::numbers::pi;

// <1|D(g)S(xi)|0> and <0|D(g)S(xi)|0> in closed form.
cplx squeezed_one(SqueezeParams p, cplx g) {
    const double t = std::tanh(p.r);
    const cplx e = std::polar(1.0, p.theta);
    const cplx gauss = std::exp(0.5 * (std::conj(g) * std::conj(g) * e * t - std::norm(g)));
    return std::polar(1.0 / std::sqrt(std::cosh(p.r)), -0.25 * p.theta) * (g - e * t * std::conj(g)) * gauss;
}

cplx squeezed_zero(SqueezeParams p, cplx g) {
    const double t = std::tanh(p.r);
    const cplx e = std::polar(1.0, p.theta);
    return std::exp(0.5 * (std::conj(g) * std::conj(g) * e * t - std::norm(g))) / std::sqrt(std::cosh(p.r));
}

CVector coherent_row(cplx mu, int n) {
    CVector c(n);
    const cplx mc = std::conj(mu);
    cplx term = std::exp(-0.5 * std::norm(mu));
    for (int k = 0; k < n; ++k) {
        if (k > 0) term *= mc / std::sqrt(static_cast<double>(k));
        c[k] = term;
    }
    return c;
}

void require_resolution(int resolution) {
    if (resolution < 2) throw Error(Errc::config, "grid resolution must be at least 2");
}

SliceCode classify(SliceSpec s) {
    const auto lo = std::min(s.x_axis, s.y_axis);
    const auto hi = std::max(s.x_axis, s.y_axis);
    if (s.pinned_first == 0.0 && s.pinned_second == 0.0) {
        if (lo == Coord::re_mu1 && hi == Coord::re_mu2) return SliceCode::real_parts;
        if (lo == Coord::im_mu1 && hi == Coord::im_mu2) return SliceCode::imag_parts;
    }
    return SliceCode::other;
}

std::pair<cplx, cplx> slice_point(SliceSpec s, double x, double y) {
    std::array<double, 4> v{};
    std::array<bool, 4> swept{};
    v[static_cast<int>(s.x_axis)] = x;
    v[static_cast<int>(s.y_axis)] = y;
    swept[static_cast<int>(s.x_axis)] = swept[static_cast<int>(s.y_axis)] = true;
    bool first = true;
    for (int k = 0; k < 4; ++k) {
        if (swept[k]) continue;
        v[k] = first ? s.pinned_first : s.pinned_second;
        first = false;
    }
    return {cplx(v[0], v[1]), cplx(v[2], v[3])};
}

PhaseGrid blank(int modes, Region region, int resolution, SliceCode code) {
    require_resolution(resolution);
    PhaseGrid g;
    g.modes = modes;
    g.nx = g.ny = resolution;
    g.region = region;
    g.slice = code;
    g.values.assign(static_cast<std::size_t>(resolution) * resolution, 0.0);
    return g;
}

}  // namespace

double PhaseGrid::x(int i) const { return region.x_min + i * dx(); }
double PhaseGrid::y(int j) const { return region.y_min + j * dy(); }
double PhaseGrid::dx() const { return (region.x_max - region.x_min) / (nx - 1); }
double PhaseGrid::dy() const { return (region.y_max - region.y_min) / (ny - 1); }

double PhaseGrid::integral() const {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum * dx() * dy();
}

double q_single_closed(const SpssvConfig& c, cplx mu) {
    const cplx w = weak_value(c.sel);
    const double lam = lambda_closed(c);
    const double h = 0.5 * c.s;
    const double sh = std::sinh(c.sq.r);
    const cplx g_plus = h - mu;
    const cplx g_minus = -h - mu;
    const cplx r_plus = std::polar(1.0 / sh, -h * mu.imag()) *
                        (squeezed_one(c.sq, g_plus) + (mu - h) * squeezed_zero(c.sq, g_plus));
    const cplx r_minus = std::polar(1.0 / sh, h * mu.imag()) *
                         (squeezed_one(c.sq, g_minus) + (mu + h) * squeezed_zero(c.sq, g_minus));
    return lam * lam / kPi * std::norm((1.0 + w) * r_plus + (1.0 - w) * r_minus);
}

double q_single_oracle(const SpssvConfig& c, cplx mu, OracleOptions opt) {
    const StateVector phi = final_pointer_spssv(c, opt);
    const auto& v = phi.amplitudes();
    return std::norm(coherent_overlap(mu, {v.data(), static_cast<std::size_t>(v.size())})) / kPi;
}

MetricReport q_single(const SpssvConfig& c, cplx mu, OracleOptions opt) {
    return make_report(q_single_closed(c, mu), q_single_oracle(c, mu, opt));
}

double q_phi1_closed(SqueezeParams p, cplx mu) {
    const double t = std::tanh(p.r);
    const cplx e = std::polar(1.0, p.theta);
    const cplx mc = std::conj(mu);
    const double expo = (mc * mc * e * t).real() - std::norm(mu);
    const double sh = std::sinh(p.r);
    const cplx inner = std::polar(1.0, -0.25 * p.theta) * (e * t * mc - mu) + mu;
    return std::exp(expo) / (kPi * sh * sh * std::cosh(p.r)) * std::norm(inner);
}

double q_two_closed(const TmsvConfig& c, cplx mu1, cplx mu2) {
    const cplx w = weak_value(c.sel);
    const double kk = std::pow(kappa_closed(c), 2);
    const double t = std::tanh(c.sq.eta);
    const double ch2 = std::pow(std::cosh(c.sq.eta), 2);
    const double base = -std::norm(mu1) - std::norm(mu2);
    const cplx m12 = mu1 * mu2;
    const double rp2 = std::exp((2.0 * m12 * t + mu1 * c.s).real() + base) / ch2;
    const double rm2 = std::exp((2.0 * m12 * t - mu1 * c.s).real() + base) / ch2;
    const double cross = std::exp(2.0 * t * m12.real() + c.s * mu1.imag() + base) / ch2;
    const double w2 = std::norm(w);
    const double sum = (1.0 + 2.0 * w.real() + w2) * rp2 +
                       ((1.0 - std::conj(w) + w + w2) * cross).real() +
                       (1.0 - 2.0 * w.real() + w2) * rm2;
    return kk / (4.0 * kPi * kPi) * sum;
}

double q_phi2_closed(TwoModeSqueezeParams p, cplx mu1, cplx mu2) {
    const double t = std::tanh(p.eta);
    return std::exp(2.0 * t * (mu1 * mu2).real() - std::norm(mu1) - std::norm(mu2)) /
           (kPi * kPi * std::pow(std::cosh(p.eta), 2));
}

double q_two_oracle(const TmsvConfig& c, cplx mu1, cplx mu2, OracleOptions opt) {
    const CMatrix m = final_pointer_tmsv(c, opt).as_matrix();
    const int n = opt.truncation;
    const cplx ov = coherent_row(mu1, n).transpose() * m * coherent_row(mu2, n);
    return std::norm(ov) / (kPi * kPi);
}

MetricReport q_two(const TmsvConfig& c, cplx mu1, cplx mu2, OracleOptions opt) {
    return make_report(q_two_closed(c, mu1, mu2), q_two_oracle(c, mu1, mu2, opt));
}

PhaseGrid q_single_grid(const SpssvConfig& c, Region region, int resolution, Engine engine, OracleOptions opt,
                        unsigned threads) {
    PhaseGrid g = blank(1, region, resolution, SliceCode::single_mode);
    CVector amp;
    if (engine == Engine::oracle) amp = final_pointer_spssv(c, opt).amplitudes();
    const std::span<const cplx> view(amp.data(), static_cast<std::size_t>(amp.size()));
    parallel_for(static_cast<std::size_t>(g.nx), threads ? threads : default_threads(), [&](std::size_t i) {
        const int ii = static_cast<int>(i);
        for (int j = 0; j < g.ny; ++j) {
            const cplx mu(g.x(ii), g.y(j));
            g.values[i * g.ny + j] = engine == Engine::oracle ? std::norm(coherent_overlap(mu, view)) / kPi
                                                              : q_single_closed(c, mu);
        }
    });
    return g;
}

PhaseGrid q_two_slice(const TmsvConfig& c, SliceSpec slice, Region region, int resolution, Engine engine,
                      OracleOptions opt, unsigned threads) {
    if (slice.x_axis == slice.y_axis) throw Error(Errc::config, "slice must sweep two distinct coordinates");
    PhaseGrid g = blank(2, region, resolution, classify(slice));
    CMatrix m;
    if (engine == Engine::oracle) m = final_pointer_tmsv(c, opt).as_matrix();
    const int n = opt.truncation;
    parallel_for(static_cast<std::size_t>(g.nx), threads ? threads : default_threads(), [&](std::size_t i) {
        const int ii = static_cast<int>(i);
        for (int j = 0; j < g.ny; ++j) {
            const auto [mu1, mu2] = slice_point(slice, g.x(ii), g.y(j));
            double q;
            if (engine == Engine::oracle) {
                const cplx ov = coherent_row(mu1, n).transpose() * m * coherent_row(mu2, n);
                q = std::norm(ov) / (kPi * kPi);
            } else {
                q = q_two_closed(c, mu1, mu2);
            }
            g.values[i * g.ny + j] = q;
        }
    });
    return g;
}

SplitResult split_detector(const PhaseGrid& grid, double min_fraction, double min_cells) {
    struct Peak {
        double v;
        int i;
        int j;
    };
    SplitResult res;
    if (grid.values.empty()) return res;
    const double top = *std::max_element(grid.values.begin(), grid.values.end());
    if (!(top > 0.0)) return res;
    std::vector<Peak> cands;
    for (int i = 1; i + 1 < grid.nx; ++i) {
        for (int j = 1; j + 1 < grid.ny; ++j) {
            const double v = grid.value(i, j);
            if (v < min_fraction * top) continue;
            bool strict = true;
            for (int di = -1; di <= 1 && strict; ++di)
                for (int dj = -1; dj <= 1; ++dj)
                    if ((di || dj) && grid.value(i + di, j + dj) >= v) {
                        strict = false;
                        break;
                    }
            if (strict) cands.push_back({v, i, j});
        }
    }
    std::sort(cands.begin(), cands.end(), [](const Peak& a, const Peak& b) {
        if (a.v != b.v) return a.v > b.v;
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    std::vector<Peak> kept;
    for (const auto& p : cands) {
        const bool far = std::all_of(kept.begin(), kept.end(), [&](const Peak& k) {
            return std::hypot(p.i - k.i, p.j - k.j) >= min_cells;
        });
        if (far) kept.push_back(p);
    }
    res.n_peaks = static_cast<int>(kept.size());
    if (kept.size() >= 2)
        res.separation = std::hypot((kept[0].i - kept[1].i) * grid.dx(), (kept[0].j - kept[1].j) * grid.dy());
    return res;
}

void write_csv(const PhaseGrid& grid, std::ostream& out) {
    out << "x,y,Q\n";
    char buf[96];
    for (int i = 0; i < grid.nx; ++i)
        for (int j = 0; j < grid.ny; ++j) {
            std::snprintf(buf, sizeof buf, "%.12e,%.12e,%.12e\n", grid.x(i), grid.y(j), grid.value(i, j));
            out << buf;
        }
}

namespace {

void put_le(std::ostream& out, double v) {
    auto bits = std::bit_cast<std::uint64_t>(v);
    char bytes[8];
    for (int k = 0; k < 8; ++k) bytes[k] = static_cast<char>((bits >> (8 * k)) & 0xFF);
    out.write(bytes, 8);
}

double get_le(std::istream& in) {
    unsigned char bytes[8];
    if (!in.read(reinterpret_cast<char*>(bytes), 8)) throw Error(Errc::config, "truncated grid file");
    std::uint64_t bits = 0;
    for (int k = 0; k < 8; ++k) bits |= static_cast<std::uint64_t>(bytes[k]) << (8 * k);
    return std::bit_cast<double>(bits);
}

}  // namespace

void write_binary(const PhaseGrid& grid, std::ostream& out) {
    for (double h : {double(grid.modes), double(grid.nx), double(grid.ny), grid.region.x_min, grid.region.x_max,
                     grid.region.y_min, grid.region.y_max, double(static_cast<int>(grid.slice))})
        put_le(out, h);
    for (double v : grid.values) put_le(out, v);
}

PhaseGrid read_binary(std::istream& in) {
    PhaseGrid g;
    g.modes = static_cast<int>(get_le(in));
    g.nx = static_cast<int>(get_le(in));
    g.ny = static_cast<int>(get_le(in));
    g.region.x_min = get_le(in);
    g.region.x_max = get_le(in);
    g.region.y_min = get_le(in);
    g.region.y_max = get_le(in);
    g.slice = static_cast<SliceCode>(static_cast<int>(get_le(in)));
    if (g.nx < 2 || g.ny < 2) throw Error(Errc::config, "malformed grid header");
    g.values.resize(static_cast<std::size_t>(g.nx) * g.ny);
    for (auto& v : g.values) v = get_le(in);
    return g;
}

}  // namespace wvlab
