#pragma once

#include <string>
#include <vector>

#include "wvlab/measurement.hpp"

namespace wvlab {

struct AuditEntry {
    std::string quantity;
    double alpha = 0.0;
    double delta = 0.0;
    double s = 0.0;
    double squeeze = 0.0;  // r or eta
    MetricReport report;
};

struct AuditGrid {
    std::vector<double> alpha;
    std::vector<double> s;
    std::vector<double> squeeze;
    double delta = 0.0;
};

// alpha {pi/3, 2pi/3, 8pi/9}, s {0.3, 0.7, 1.5}, r/eta {0.1, 0.5, 1.0}, delta pi/6.
AuditGrid default_audit_grid();

std::vector<AuditEntry> run_audit(const AuditGrid& grid, OracleOptions single = {},
                                  OracleOptions two = kTwoModeDefault, unsigned threads = 0);

}  // namespace wvlab
