#pragma once

#include <string>
#include <utility>
#include <vector>

#include "discosc/numeric.hpp"

namespace discosc {

/// One verification row: named check, the parameters it ran at, the achieved
/// residual against its tolerance, and free-form notes (measured phases,
/// convention resolutions, error messages).  status is pass iff
/// residual <= tolerance.  Checks that abort on a module error report the
/// sentinel residual error_residual().
struct VerificationReport {
    std::string check;
    std::vector<std::pair<std::string, std::string>> params;
    double residual = 0.0;
    double tolerance = 0.0;
    std::string notes;

    bool passed() const { return residual <= tolerance; }
};

/// Sentinel residual for checks that errored out before producing a number.
double error_residual();

/// Shortest round-trip decimal for a double (std::to_chars).
std::string format_double(double v);

/// Compact a+bi form used in parameter stamps and CSV cells.
std::string format_complex(cplx v);

/// Canonical order: by check name, then by the serialized parameter string.
void sort_reports(std::vector<VerificationReport>& reports);

int count_failures(const std::vector<VerificationReport>& reports);

/// JSON array of objects {check, params{...}, residual, tolerance, status,
/// notes}; complex parameter values are {"re": ..., "im": ...}.
std::string reports_to_json(const std::vector<VerificationReport>& reports);

/// CSV with header "check,params,residual,tolerance,status,notes"; params
/// joined as k=v;k=v.
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

}  // namespace discosc
