#pragma once

#include "wvlab/report.hpp"
#include "wvlab/states.hpp"

namespace wvlab {

struct Selection {
    double alpha = 0.0;
    double delta = 0.0;
};

struct OracleOptions {
    int truncation = 80;
    bool force = false;
};

inline constexpr OracleOptions kTwoModeDefault{40, false};

struct SpssvConfig {
    Selection sel;
    double s = 0.0;
    SqueezeParams sq;
};

struct TmsvConfig {
    Selection sel;
    double s = 0.0;
    TwoModeSqueezeParams sq;
};

cplx weak_value(Selection sel);
double abl_conditional(Selection sel);

double overlap_P(double s, SqueezeParams p);
double overlap_K(double s, TwoModeSqueezeParams p);
cplx overlap_P_oracle(double s, SqueezeParams p, OracleOptions opt = {});
cplx overlap_K_oracle(double s, TwoModeSqueezeParams p, OracleOptions opt = kTwoModeDefault);

double lambda_closed(const SpssvConfig& c);
double kappa_closed(const TmsvConfig& c);

// t+ D(s/2)|phi> + t- D(s/2)^dagger|phi>, before the cos(alpha/2)/2 prefactor.
CVector pointer_bracket_spssv(const SpssvConfig& c, OracleOptions opt = {});
CMatrix pointer_bracket_tmsv(const TmsvConfig& c, OracleOptions opt = kTwoModeDefault);

StateVector final_pointer_spssv(const SpssvConfig& c, OracleOptions opt = {});
StateVector final_pointer_tmsv(const TmsvConfig& c, OracleOptions opt = kTwoModeDefault);

double success_prob_spssv_closed(const SpssvConfig& c);
double success_prob_tmsv_closed(const TmsvConfig& c);
MetricReport success_prob_spssv(const SpssvConfig& c, OracleOptions opt = {});
MetricReport success_prob_tmsv(const TmsvConfig& c, OracleOptions opt = kTwoModeDefault);

MetricReport lambda_report(const SpssvConfig& c, OracleOptions opt = {});
MetricReport kappa_report(const TmsvConfig& c, OracleOptions opt = kTwoModeDefault);

cplx transition_value_spssv(const SpssvConfig& c);
cplx transition_value_tmsv(const TmsvConfig& c);
// Variant with K weighting all of wv; kept for the audit.
cplx transition_value_tmsv_uncorrected(const TmsvConfig& c);
cplx transition_value_spssv_oracle(const SpssvConfig& c, OracleOptions opt = {});
cplx transition_value_tmsv_oracle(const TmsvConfig& c, OracleOptions opt = kTwoModeDefault);

}  // namespace wvlab
