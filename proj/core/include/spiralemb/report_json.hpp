#pragma once

#include <string>

#include "spiralemb/verifier.hpp"

namespace spiralemb {

/// Serialize a report as a JSON object. Floating-point values use decimal
/// scientific notation with 17 significant digits; output is byte-deterministic
/// for identical reports.
std::string report_to_json(const VerificationReport& report);

VerificationReport report_from_json(const std::string& text);

/// Write report_to_json to a file. Throws std::runtime_error on I/O failure.
void write_report(const VerificationReport& report, const std::string& path);

/// Format one double as 17-significant-digit scientific notation.
std::string format_double(double v);

}  // namespace spiralemb
