#pragma once

#include <vector>

#include "wvlab/measurement.hpp"

namespace wvlab {

struct SingleModeExpectations {
    cplx a;
    cplx a2;
    double n = 0.0;
    double a2dag_a2 = 0.0;
};

struct TwoModeExpectations {
    double na = 0.0;
    double nb = 0.0;
    cplx ab;
    double na_nb = 0.0;
    cplx a2b2;
};

SingleModeExpectations expectations_closed_spssv(const SpssvConfig& c);
SingleModeExpectations expectations_oracle(const StateVector& psi);
cplx fourth_moment_oracle(const StateVector& psi);

// Closed forms assume zeta = 0.
TwoModeExpectations expectations_closed_tmsv(const TmsvConfig& c);
TwoModeExpectations expectations_oracle_two(const StateVector& psi);

double skew_information(const StateVector& psi);
double skew_from(const SingleModeExpectations& e);
MetricReport skew_closed_spssv(const SpssvConfig& c, OracleOptions opt = {});
double skew_closed_s0(SqueezeParams p);

double as_squeezing(const SingleModeExpectations& e, cplx a4);
double as_squeezing_state(const StateVector& psi);
double as_closed_s0(SqueezeParams p);
// Closed uses the closed moments with the oracle fourth moment.
MetricReport as_squeezing_report(const SpssvConfig& c, OracleOptions opt = {});

double sum_squeezing(const StateVector& psi2, double big_theta);
double sum_squeezing_from(const TwoModeExpectations& e, double big_theta);
double sum_closed_s0(TwoModeSqueezeParams p, double big_theta);
MetricReport sum_closed(const TmsvConfig& c, double big_theta, OracleOptions opt = kTwoModeDefault);

std::vector<double> photon_dist_oracle(const StateVector& psi);
// Single-sum expression with I+- as Laguerre matrix elements, index n = 0..n_max.
std::vector<double> photon_dist_closed(const SpssvConfig& c, int n_max);

}  // namespace wvlab
