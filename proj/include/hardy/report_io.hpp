#pragma once

#include <filesystem>
#include <string>

#include "hardy/report.hpp"

namespace hardy {

inline constexpr const char* kReportSchemaVersion = "1";

/// Report as JSON text with a fixed field order:
/// schema_version, theorem, p, lhs, rhs_sharpened, rhs_classic, alpha,
/// satisfied, margin, quad_error, mc, then direction, lhs_unrooted,
/// rhs_unrooted, lhs_bracket, dual, mc_agrees. Absent optionals are null.
std::string report_to_json(const VerificationReport& report);

VerificationReport parse_report(const std::string& text);

/// Writes to `path`, or to standard output when path is empty or "-".
/// Throws std::runtime_error if the file cannot be written.
void emit_report(const VerificationReport& report, const std::filesystem::path& path);

}  // namespace hardy
