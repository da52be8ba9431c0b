#pragma once

#include "wvlab/fock.hpp"

namespace wvlab {

inline constexpr double kRMin = 1e-6;

struct SqueezeParams {
    double r = 0.1;
    double theta = 0.0;
};

struct TwoModeSqueezeParams {
    double eta = 0.1;
    double zeta = 0.0;
};

StateVector squeezed_vacuum(SqueezeParams p, int n);
// Closed amplitude C_k on |2k+1>.
cplx spssv_coefficient(SqueezeParams p, int k);
StateVector spssv(SqueezeParams p, int n);
StateVector spssv_operator_route(SqueezeParams p, int n);
StateVector tmsv(TwoModeSqueezeParams p, int n);
CMatrix tmsv_matrix(TwoModeSqueezeParams p, int n);

}  // namespace wvlab
