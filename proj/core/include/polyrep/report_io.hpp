#ifndef POLYREP_REPORT_IO_HPP
#define POLYREP_REPORT_IO_HPP

#include <string>
#include <vector>

#include "polyrep/verify.hpp"

namespace polyrep {

/// JSON array of reports with the fields identity_name, parameters, lhs, rhs,
/// passed, plus witnesses / skipped_reason when present. Key order is fixed,
/// so equal report lists always serialize to identical bytes.
std::string reports_to_json(const std::vector<VerificationReport>& reports);

/// Header "identity_name,parameters,lhs,rhs,passed,note"; parameters as "s=4;n=2".
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

/// Per-identity pass/fail/skip counts and a total line.
std::string reports_to_summary(const std::vector<VerificationReport>& reports);

} // namespace polyrep

#endif // POLYREP_REPORT_IO_HPP
