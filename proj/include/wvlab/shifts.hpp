#pragma once

#include <utility>
#include <vector>

#include "wvlab/measurement.hpp"

namespace wvlab {

inline constexpr double kWeakProbe = 1e-6;

struct RegimeLimits {
    double weak_dX = 0.0;
    double weak_dP = 0.0;
    double strong_dX = 0.0;
    double strong_dP = 0.0;
};

// Dimensionless shifts dX/g and dP sigma^2/g. Oracle values lead; closed
// values come from the closed <a> (single mode) or Lambda_1,2 (two mode).
struct ShiftReport {
    double dX_over_g = 0.0;
    double dP_sigma2_over_g = 0.0;
    double closed_dX_over_g = 0.0;
    double closed_dP_sigma2_over_g = 0.0;
    RegimeLimits regime_limits;
};

cplx h1_weak_closed(double s, SqueezeParams p);

ShiftReport pointer_shifts_spssv(const SpssvConfig& c, OracleOptions opt = {});
ShiftReport pointer_shifts_tmsv(const TmsvConfig& c, OracleOptions opt = kTwoModeDefault);

// Closed values and limits only; the oracle fields are NaN.
ShiftReport pointer_shifts_spssv_closed(const SpssvConfig& c);
ShiftReport pointer_shifts_tmsv_closed(const TmsvConfig& c);
std::pair<cplx, cplx> lambda12(const TmsvConfig& c);
// <a> and <b> on the normalized final two-mode pointer.
std::pair<cplx, cplx> lambda12_oracle(const TmsvConfig& c, OracleOptions opt = kTwoModeDefault);

struct SweepRow {
    double alpha = 0.0;
    double delta = 0.0;
    double s = 0.0;
    double dX_over_g = 0.0;
    double dP_sigma2_over_g = 0.0;
    cplx sigma_x;
    double p_success = 0.0;
};

// Rows ordered selection-major, then s.
std::vector<SweepRow> transition_sweep(const std::vector<Selection>& sels, const std::vector<double>& s_grid,
                                       SqueezeParams p, OracleOptions opt = {}, unsigned threads = 0);
std::vector<SweepRow> transition_sweep_tmsv(const std::vector<Selection>& sels, const std::vector<double>& s_grid,
                                            TwoModeSqueezeParams p, OracleOptions opt = kTwoModeDefault,
                                            unsigned threads = 0);

}  // namespace wvlab
