#pragma once

#include <Eigen/Dense>

namespace wvlab {

// Pade(13) scaling and squaring.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a);

}  // namespace wvlab
