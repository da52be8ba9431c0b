#pragma once

#include <iosfwd>
#include <vector>

#include "wvlab/measurement.hpp"

namespace wvlab {

enum class Engine { oracle, closed };

struct Region {
    double x_min = -6.0;
    double x_max = 6.0;
    double y_min = -6.0;
    double y_max = 6.0;
};

enum class Coord { re_mu1 = 0, im_mu1 = 1, re_mu2 = 2, im_mu2 = 3 };

// Two swept coordinates; the remaining two are pinned in ascending Coord order.
struct SliceSpec {
    Coord x_axis = Coord::re_mu1;
    Coord y_axis = Coord::re_mu2;
    double pinned_first = 0.0;
    double pinned_second = 0.0;

    static SliceSpec real_parts() { return {Coord::re_mu1, Coord::re_mu2}; }
    static SliceSpec imag_parts() { return {Coord::im_mu1, Coord::im_mu2}; }
};

enum class SliceCode { single_mode = 0, real_parts = 1, imag_parts = 2, other = 3 };

struct PhaseGrid {
    int modes = 1;
    int nx = 0;
    int ny = 0;
    Region region;
    SliceCode slice = SliceCode::single_mode;
    std::vector<double> values;  // values[i * ny + j] at (x_i, y_j)

    double x(int i) const;
    double y(int j) const;
    double dx() const;
    double dy() const;
    double value(int i, int j) const { return values[static_cast<std::size_t>(i) * ny + j]; }
    double integral() const;
};

double q_single_closed(const SpssvConfig& c, cplx mu);
double q_single_oracle(const SpssvConfig& c, cplx mu, OracleOptions opt = {});
MetricReport q_single(const SpssvConfig& c, cplx mu, OracleOptions opt = {});
double q_phi1_closed(SqueezeParams p, cplx mu);

double q_two_closed(const TmsvConfig& c, cplx mu1, cplx mu2);
double q_two_oracle(const TmsvConfig& c, cplx mu1, cplx mu2, OracleOptions opt = kTwoModeDefault);
MetricReport q_two(const TmsvConfig& c, cplx mu1, cplx mu2, OracleOptions opt = kTwoModeDefault);
double q_phi2_closed(TwoModeSqueezeParams p, cplx mu1, cplx mu2);

PhaseGrid q_single_grid(const SpssvConfig& c, Region region, int resolution, Engine engine = Engine::oracle,
                        OracleOptions opt = {}, unsigned threads = 0);
PhaseGrid q_two_slice(const TmsvConfig& c, SliceSpec slice, Region region, int resolution,
                      Engine engine = Engine::oracle, OracleOptions opt = kTwoModeDefault, unsigned threads = 0);

struct SplitResult {
    int n_peaks = 0;
    double separation = 0.0;
};

// Strict 8-neighbour maxima above 5% of the global max, at least 3 cells apart.
SplitResult split_detector(const PhaseGrid& grid, double min_fraction = 0.05, double min_cells = 3.0);

void write_csv(const PhaseGrid& grid, std::ostream& out);
// Little-endian float64: modes, nx, ny, x_min, x_max, y_min, y_max, slice code, then values.
void write_binary(const PhaseGrid& grid, std::ostream& out);
PhaseGrid read_binary(std::istream& in);

}  // namespace wvlab
