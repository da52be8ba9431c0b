#include "wvlab/report.hpp"

namespace wvlab {

MetricReport make_report(std::complex<double> closed_form, std::complex<double> oracle, double threshold) {
    MetricReport r;
    r.closed_form = closed_form;
    r.oracle = oracle;
    r.abs_diff = std::abs(closed_form - oracle);
    const double scale = std::abs(oracle);
    r.rel_diff = scale < 1e-6 ? r.abs_diff : r.abs_diff / scale;
    r.flag = !(r.rel_diff <= threshold);
    return r;
}

}  // namespace wvlab
