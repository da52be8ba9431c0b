#pragma once

#include <complex>
#include <string>

namespace wvlab {

inline constexpr double kFlagThreshold = 1e-6;

// Closed form paired with the oracle. rel_diff falls back to the absolute
// difference when the oracle magnitude is below 1e-6.
struct MetricReport {
    std::complex<double> closed_form;
    std::complex<double> oracle;
    double abs_diff = 0.0;
    double rel_diff = 0.0;
    bool flag = false;
};

MetricReport make_report(std::complex<double> closed_form, std::complex<double> oracle,
                         double threshold = kFlagThreshold);

}  // namespace wvlab
